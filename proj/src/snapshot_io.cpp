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

#include "alfven/snapshot_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace alfven {

static_assert(std::endian::native == std::endian::little, "snapshot io assumes little endian");

namespace {

constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!in) throw std::runtime_error("snapshot: truncated record");
  return v;
}

}  // namespace

void write_snapshot(std::ostream& out, const SpectralState& s) {
  const Grid& g = s.grid();
  out.write(kSnapshotMagic, 8);
  put<std::uint32_t>(out, kVersion);
  put<std::int32_t>(out, g.n1);
  put<std::int32_t>(out, g.n2);
  put<std::uint32_t>(out, s.frame == Frame::original ? 1u : 0u);
  put<double>(out, g.length1);
  put<double>(out, g.length2);
  put<double>(out, s.time);
  put<double>(out, s.params.eps);
  put<double>(out, s.params.mu);
  put<double>(out, s.params.nu);
  put<std::uint64_t>(out, g.spectral_size());
  for (const VectorField* f : {&s.u, &s.h}) {
    for (int c = 0; c < 2; ++c) {
      // std::complex<double> is layout compatible with double[2].
      out.write(reinterpret_cast<const char*>((*f)[c].coeffs.data()),
                static_cast<std::streamsize>(g.spectral_size() * sizeof(Complex)));
    }
  }
  if (!out) throw std::runtime_error("snapshot: write failed");
}

SpectralState read_snapshot(std::istream& in) {
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kSnapshotMagic, 8) != 0) {
    throw std::runtime_error("snapshot: bad magic");
  }
  if (get<std::uint32_t>(in) != kVersion) throw std::runtime_error("snapshot: unknown version");
  const int n1 = get<std::int32_t>(in);
  const int n2 = get<std::int32_t>(in);
  const std::uint32_t frame = get<std::uint32_t>(in);
  const double l1 = get<double>(in);
  const double l2 = get<double>(in);
  SpectralState s;
  s.time = get<double>(in);
  s.params.eps = get<double>(in);
  s.params.mu = get<double>(in);
  s.params.nu = get<double>(in);
  s.frame = frame == 1u ? Frame::original : Frame::rescaled;
  const Grid g = make_grid(n1, n2, l1, l2);
  if (get<std::uint64_t>(in) != g.spectral_size()) {
    throw std::runtime_error("snapshot: mode count does not match grid");
  }
  s.u = VectorField(g);
  s.h = VectorField(g);
  for (VectorField* f : {&s.u, &s.h}) {
    for (int c = 0; c < 2; ++c) {
      in.read(reinterpret_cast<char*>((*f)[c].coeffs.data()),
              static_cast<std::streamsize>(g.spectral_size() * sizeof(Complex)));
      if (!in) throw std::runtime_error("snapshot: truncated coefficients");
    }
    f->divergence_free = true;
  }
  return s;
}

void write_snapshots(const std::string& path, const std::vector<SpectralState>& states) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("snapshot: cannot open " + path);
  for (const auto& s : states) write_snapshot(out, s);
}

std::vector<SpectralState> read_snapshots(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("snapshot: cannot open " + path);
  std::vector<SpectralState> out;
  while (in.peek() != std::char_traits<char>::eof()) out.push_back(read_snapshot(in));
  return out;
}

}  // namespace alfven
