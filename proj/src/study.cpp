// Copyright 2026 The Alfven Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "alfven/study.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "alfven/diagnostics.hpp"
#include "alfven/expm.hpp"
#include "alfven/kernel_decomposition.hpp"
#include "alfven/propagator.hpp"

namespace alfven {

namespace {

struct KindName {
  StudyKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {StudyKind::stability, "stability"},
    {StudyKind::error, "error"},
    {StudyKind::limit_linear, "limit-linear"},
    {StudyKind::limit_nonlinear, "limit-nonlinear"},
    {StudyKind::kernel, "kernel"},
    {StudyKind::propagator_verify, "propagator-verify"},
    {StudyKind::energy, "energy"},
    {StudyKind::pressure, "pressure"},
};

}  // namespace

std::string to_string(StudyKind k) {
  for (const auto& e : kKindNames) {
    if (e.kind == k) return e.name;
  }
  return "unknown";
}

StudyKind parse_study_kind(const std::string& s) {
  for (const auto& e : kKindNames) {
    if (s == e.name) return e.kind;
  }
  throw std::invalid_argument("unknown study kind '" + s + "'");
}

bool sweeps_eps(StudyKind k) {
  return k != StudyKind::propagator_verify && k != StudyKind::pressure;
}

void StudyConfig::validate() const {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (sweeps_eps(kind)) {
    if (eps_list.empty()) throw std::invalid_argument("eps_list is empty");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
      if (!(eps_list[i] > 0.0 && eps_list[i] < 1.0)) {
        throw std::invalid_argument("eps_list entries must lie in (0, 1)");
      }
      if (i > 0 && !(eps_list[i] < eps_list[i - 1])) {
        throw std::invalid_argument("eps_list must be strictly decreasing");
      }
    }
  }
  if (kind == StudyKind::limit_linear || kind == StudyKind::limit_nonlinear) {
    if (!base.recipe.support_radius) {
      throw std::invalid_argument("limit studies need support_radius");
    }
    if (!(slab_l * *base.recipe.support_radius < 0.5 * base.length1)) {
      throw std::invalid_argument("slab l R must be below L1 / 2");
    }
    if (!(t1 > 0.0)) throw std::invalid_argument("t1 must be positive");
  }
  if (kind == StudyKind::kernel && !(t0 > 0.0)) throw std::invalid_argument("t0 must be positive");
  if ((kind == StudyKind::propagator_verify || kind == StudyKind::pressure) &&
      (samples < 1 || sample_seeds.empty())) {
    throw std::invalid_argument("sampled studies need samples >= 1 and a seed");
  }
}

namespace {

double mean_dt(const Trajectory& t) { return t.mean_dt; }

class RowSink {
 public:
  RowSink(const StudyConfig& s, double eps, std::uint64_t seed, double dt)
      : study_(s), eps_(eps), seed_(seed), dt_(dt) {}
  void add(const std::string& obs, double value) { rows_.push_back({obs, value}); }
  void set_dt(double dt) { dt_ = dt; }
  void clear() { rows_.clear(); }
  StudyTable finish(double wall_ms) const {
    StudyTable out;
    for (const auto& [obs, value] : rows_) {
      out.push_back({study_.name, to_string(study_.kind), eps_, obs, value, seed_,
                     study_.base.n1, study_.base.length1, dt_,
                     study_.deterministic ? 0.0 : wall_ms});
    }
    return out;
  }

 private:
  const StudyConfig& study_;
  double eps_;
  std::uint64_t seed_;
  double dt_;
  std::vector<std::pair<std::string, double>> rows_;
};

SimConfig config_for(const StudyConfig& s, double eps) {
  SimConfig c = s.base;
  c.eps = eps;
  return c;
}

void run_stability(const StudyConfig& s, double eps, RowSink& sink, bool energy_only) {
  SimConfig c = config_for(s, eps);
  c.nonlinear = true;
  c.frame = Frame::rescaled;
  const Trajectory t = simulate(c);
  sink.set_dt(mean_dt(t));
  sink.add(observable::kEnergyResidual, energy_residual(t));
  if (energy_only) return;
  double sup = 0.0, contamination = 0.0, div = 0.0;
  for (const auto& snap : t.snapshots) {
    sup = std::max(sup, snap.sobolev_m);
    contamination = std::max(contamination, snap.box_contamination);
    div = std::max(div, snap.div_relative);
  }
  sink.add(observable::kSupNormOverEps, sup / (eps * t.initial_norm_m));
  sink.add(observable::kSmallness, t.smallness);
  sink.add(observable::kBoxContamination, contamination);
  sink.add(observable::kDivRelative, div);
}

void run_error(const StudyConfig& s, double eps, RowSink& sink) {
  SimConfig c = config_for(s, eps);
  c.nonlinear = true;
  c.frame = Frame::rescaled;
  const auto [v0, H0] = initial_data(c);
  const Trajectory nl = simulate(c, v0, H0);
  const Trajectory lin = simulate_linear(c, v0, H0);
  sink.set_dt(mean_dt(nl));
  const std::vector<ErrorPoint> err = error_norms(nl, lin, c.m);
  double sup = 0.0;
  for (const auto& e : err) sup = std::max(sup, e.grad_norm);
  sink.add(observable::kSupGradError, sup);
  sink.add(observable::kSupGradErrorOriginal, sup / eps);
  sink.add(observable::kErrorDissipation, err.back().dissipation_cum);
  const double q_mixed = bilinear_quantity(nl, c.m, BilinearVariant::mixed_pair);
  const double q_gradient = bilinear_quantity(nl, c.m, BilinearVariant::gradient_pair);
  const double bound = bilinear_bound(nl);
  sink.add(observable::kBilinearMixed, q_mixed);
  sink.add(observable::kBilinearGradient, q_gradient);
  sink.add(observable::kBilinearBound, bound);
  sink.add(observable::kBilinearRatio, bound > 0.0 ? q_mixed / bound : 0.0);
  sink.add(observable::kEnergyResidual, energy_residual(nl));
}

void run_limit(const StudyConfig& s, double eps, RowSink& sink, bool nonlinear) {
  SimConfig c = config_for(s, eps);
  c.frame = Frame::original;
  c.nonlinear = nonlinear;
  c.t_end = s.t1;
  c.snapshot_times.clear();
  const double radius = *c.recipe.support_radius;
  const Trajectory t = nonlinear ? simulate(c) : simulate_linear(c);
  sink.set_dt(nonlinear ? mean_dt(t) : 0.0);
  const SpectralState& first = t.snapshots.front().state;
  const SpectralState& last = t.snapshots.back().state;
  sink.add(observable::kSlabSup, sup_norm_slab(last.u, last.h, s.slab_l, radius));
  sink.add(observable::kSlabSupInitial, sup_norm_slab(first.u, first.h, s.slab_l, radius));
  sink.add(observable::kBoxContamination, t.snapshots.back().box_contamination);
  if (nonlinear) sink.add(observable::kSmallness, t.smallness);
}

void run_kernel(const StudyConfig& s, double eps, RowSink& sink) {
  const Grid g = s.base.grid();
  const KernelQuery q{s.t0, eps, s.theta, s.base.mu, s.base.nu, s.c_tilde};
  const KernelFieldSet f = kernel_fields(g, q);
  double total = 0.0;
  std::array<double, 3> part{};
  for (std::size_t j = 0; j < g.physical_size(); ++j) {
    for (int e = 0; e < 3; ++e) {
      double sum = 0.0;
      for (int k = 0; k < 3; ++k) {
        part[k] = std::max(part[k], std::abs(f.fields[k][e][j]));
        sum += f.fields[k][e][j];
      }
      total = std::max(total, std::abs(sum));
    }
  }
  sink.add(observable::kKernelLinf, total);
  sink.add(observable::kKernelLinf1, part[0]);
  sink.add(observable::kKernelLinf2, part[1]);
  sink.add(observable::kKernelLinf3, part[2]);
}

StudyTable run_one(const StudyConfig& s, std::size_t index) {
  const auto start = std::chrono::steady_clock::now();
  const bool eps_sweep = sweeps_eps(s.kind);
  const double eps = eps_sweep ? s.eps_list[index] : 0.0;
  const std::uint64_t seed = eps_sweep ? s.base.recipe.seed : s.sample_seeds[index];
  RowSink sink(s, eps, seed, s.base.dt.value_or(0.0));
  try {
    switch (s.kind) {
      case StudyKind::stability: run_stability(s, eps, sink, false); break;
      case StudyKind::energy: run_stability(s, eps, sink, true); break;
      case StudyKind::error: run_error(s, eps, sink); break;
      case StudyKind::limit_linear: run_limit(s, eps, sink, false); break;
      case StudyKind::limit_nonlinear: run_limit(s, eps, sink, true); break;
      case StudyKind::kernel: run_kernel(s, eps, sink); break;
      case StudyKind::propagator_verify: {
        if (index == 0) {
          const PropagatorCheck pc = check_propagator(s.samples, seed);
          sink.add(observable::kOracleError, pc.oracle_error);
          sink.add(observable::kContinuityGap, pc.continuity_gap);
          sink.add(observable::kSemigroupError, pc.semigroup_error);
        }
        sink.add(observable::kDecayConstant, decay_constant(s.decay_samples, seed));
        break;
      }
      case StudyKind::pressure:
        sink.add(observable::kPressureRatioMax,
                 pressure_ratio_max(s.base, s.samples, seed, s.pressure_index));
        break;
    }
  } catch (const std::exception& e) {
    std::cerr << "study " << s.name << ": run " << index << " failed: " << e.what() << "\n";
    sink.clear();
    sink.add(observable::kRunFailed, 1.0);
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return sink.finish(ms);
}

}  // namespace

StudyTable run_study(const StudyConfig& study) {
  study.validate();
  const std::size_t count =
      sweeps_eps(study.kind) ? study.eps_list.size() : study.sample_seeds.size();
  std::vector<std::optional<StudyTable>> results(count);
  std::unique_ptr<std::ofstream> out;
  if (study.output) {
    out = std::make_unique<std::ofstream>(*study.output, std::ios::binary | std::ios::trunc);
    if (!*out) throw std::runtime_error("cannot open " + *study.output);
    *out << csv_header() << '\n';
    out->flush();
  }
  std::mutex mu;
  std::size_t flushed = 0;
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      StudyTable rows = run_one(study, i);
      std::lock_guard<std::mutex> lock(mu);
      results[i] = std::move(rows);
      while (flushed < count && results[flushed]) {
        if (out) {
          for (const auto& r : *results[flushed]) *out << csv_row(r) << '\n';
          out->flush();
        }
        ++flushed;
      }
    }
  };
  const int n_workers = std::min<int>(study.workers, static_cast<int>(count));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  StudyTable table;
  for (auto& r : results) table.insert(table.end(), r->begin(), r->end());
  return table;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_real(const std::string& s, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw std::runtime_error("csv line " + std::to_string(line) + ": bad number '" + s + "'");
  }
  return v;
}

template <class T>
T parse_int(const std::string& s, std::size_t line) {
  T v{};
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw std::runtime_error("csv line " + std::to_string(line) + ": bad integer '" + s + "'");
  }
  return v;
}

}  // namespace

std::string csv_header() { return "study,kind,eps,observable,value,seed,N,L,dt,wall_ms"; }

std::string csv_row(const StudyRecord& r) {
  std::ostringstream o;
  o << r.study << ',' << r.kind << ',' << format_real(r.eps) << ',' << r.observable << ','
    << format_real(r.value) << ',' << r.seed << ',' << r.n << ',' << format_real(r.length) << ','
    << format_real(r.dt) << ',' << format_real(r.wall_ms);
  return o.str();
}

void emit_csv(const StudyTable& table, std::ostream& out) {
  out << csv_header() << '\n';
  for (const auto& r : table) out << csv_row(r) << '\n';
}

void emit_csv(const StudyTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path);
  emit_csv(table, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

StudyTable load_csv(std::istream& in) {
  StudyTable t;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv line 1: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != csv_header()) throw std::runtime_error("csv line 1: unexpected header");
  std::size_t no = 1;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 10) {
      throw std::runtime_error("csv line " + std::to_string(no) + ": expected 10 fields, got " +
                               std::to_string(f.size()));
    }
    StudyRecord r;
    r.study = f[0];
    r.kind = f[1];
    r.eps = parse_real(f[2], no);
    r.observable = f[3];
    r.value = parse_real(f[4], no);
    r.seed = parse_int<std::uint64_t>(f[5], no);
    r.n = parse_int<int>(f[6], no);
    r.length = parse_real(f[7], no);
    r.dt = parse_real(f[8], no);
    r.wall_ms = parse_real(f[9], no);
    t.push_back(std::move(r));
  }
  return t;
}

StudyTable load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_csv(in);
}

// ---------------------------------------------------------------------------
// Slope fits

SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_slope: size mismatch");
  std::vector<double> lx, ly;
  SlopeFit fit;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0 && y[i] > 0.0 && std::isfinite(x[i]) && std::isfinite(y[i])) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    } else {
      ++fit.excluded;
    }
  }
  fit.used = static_cast<int>(lx.size());
  if (fit.used < 4) throw std::invalid_argument("fit_slope: fewer than 4 usable pairs");
  const double n = fit.used;
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < fit.used; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (int i = 0; i < fit.used; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_slope: x values are all equal");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
  return fit;
}

std::pair<std::vector<double>, std::vector<double>> select(const StudyTable& t,
                                                           const std::string& obs) {
  std::vector<double> x, y;
  for (const auto& r : t) {
    if (r.observable == obs) {
      x.push_back(r.eps);
      y.push_back(r.value);
    }
  }
  return {x, y};
}

SlopeFit fit_slope(const StudyTable& t, const std::string& obs) {
  const auto [x, y] = select(t, obs);
  return fit_slope(x, y);
}

// ---------------------------------------------------------------------------
// Sampled checks

namespace {

struct SymbolSample {
  double a, b, kappa, xi1, xi_sq, t;
};

SymbolSample draw_symbol(std::mt19937_64& rng, double max_s) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SymbolSample p{};
  p.a = 0.05 + 1.95 * unit(rng);
  p.b = 0.05 + 1.95 * unit(rng);
  p.kappa = -5.0 + 10.0 * unit(rng);
  const double xi1 = -4.0 + 8.0 * unit(rng);
  const double xi2 = -4.0 + 8.0 * unit(rng);
  p.xi1 = xi1;
  p.xi_sq = xi1 * xi1 + xi2 * xi2;
  p.t = p.xi_sq > 0.0 ? max_s * unit(rng) / p.xi_sq : unit(rng);
  return p;
}

Matrix2c as_matrix(const MultiplierBlock& b) {
  const Complex off(0.0, b.b12_over_i);
  return {{{Complex(b.b11), off}, {off, Complex(b.b22)}}};
}

double matrix_gap(const Matrix2c& x, const Matrix2c& ref) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      worst = std::max(worst, std::abs(x[i][j] - ref[i][j]) / std::max(std::abs(ref[i][j]), 1e-2));
    }
  }
  return worst;
}

}  // namespace

PropagatorCheck check_propagator(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PropagatorCheck out;
  for (int k = 0; k < samples; ++k) {
    const SymbolSample p = draw_symbol(rng, 50.0);
    const PropagatorParams pp{p.a, p.b, p.kappa};
    const Matrix2c closed = as_matrix(symbol_block(p.xi1, p.xi_sq, p.t, pp));
    try {
      const Matrix2c ref =
          matrix_exponential_oracle(symbol_generator(p.xi1, p.xi_sq, p.t, p.a, p.b, p.kappa));
      out.oracle_error = std::max(out.oracle_error, matrix_gap(closed, ref));
    } catch (const std::overflow_error&) {
      ++out.skipped;
    }

    // Semigroup: split t at a random fraction.
    const double f = unit(rng);
    const Matrix2c whole = as_matrix(symbol_block(p.xi1, p.xi_sq, p.t, pp));
    const Matrix2c prod = multiply(as_matrix(symbol_block(p.xi1, p.xi_sq, f * p.t, pp)),
                                   as_matrix(symbol_block(p.xi1, p.xi_sq, (1 - f) * p.t, pp)));
    out.semigroup_error = std::max(out.semigroup_error, matrix_gap(prod, whole));

    // Continuity: choose kappa so that delta = +-1e-8.
    const double d = (p.a - p.b) * p.xi_sq;
    if (p.xi1 != 0.0 && d * d > 1e-6) {
      std::array<MultiplierBlock, 2> pair;
      for (int side = 0; side < 2; ++side) {
        const double delta = side == 0 ? 1e-8 : -1e-8;
        const double kappa = std::sqrt((d * d - delta) / (4.0 * p.xi1 * p.xi1));
        pair[side] = symbol_block(p.xi1, p.xi_sq, p.t, {p.a, p.b, kappa});
      }
      out.continuity_gap = std::max({out.continuity_gap, std::abs(pair[0].b11 - pair[1].b11),
                                     std::abs(pair[0].b22 - pair[1].b22),
                                     std::abs(pair[0].b12_over_i - pair[1].b12_over_i)});
    }
  }
  return out;
}

double decay_constant(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double a = 0.05 + 1.95 * unit(rng);
    const double b = 0.05 + 1.95 * unit(rng);
    const double kappa = -20.0 + 40.0 * unit(rng);
    const double xi1 = -8.0 + 16.0 * unit(rng);
    const double xi2 = -8.0 + 16.0 * unit(rng);
    const double t = 10.0 * unit(rng);
    const double xi_sq = xi1 * xi1 + xi2 * xi2;
    const PropagatorParams p{a, b, kappa};
    const MultiplierBlock blk = symbol_block(xi1, xi_sq, t, p);
    const double env = decay_envelope(xi_sq, t, p);
    const double peak =
        std::max({std::abs(blk.b11), std::abs(blk.b22), std::abs(blk.b12_over_i)});
    if (env > 0.0) worst = std::max(worst, peak / env);
  }
  return worst;
}

double pressure_ratio_max(const SimConfig& base, int samples, std::uint64_t seed, int index) {
  const Grid g = base.grid();
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    InitialDataRecipe recipe = base.recipe;
    recipe.m = base.m;
    recipe.seed = seed * 1000003ULL + static_cast<std::uint64_t>(k);
    const auto [u, h] = random_divfree_pair(g, recipe);
    SpectralState s;
    s.u = u;
    s.h = h;
    s.params = base.params();
    if (const auto r = pressure_ratio(s, index)) worst = std::max(worst, *r);
  }
  return worst;
}

}  // namespace alfven
