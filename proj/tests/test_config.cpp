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

#include "alfven/config.hpp"

#include <numbers>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace alfven {
namespace {

ConfigMap parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in, "test.cfg");
}

TEST(Config, ParsesCommentsAndWhitespace) {
  const ConfigMap c = parse("# reference\n\n  n = 64 \neps=0.05\nL = 32pi\n");
  EXPECT_EQ(c.values.at("n"), "64");
  EXPECT_EQ(c.values.at("eps"), "0.05");
  const SimConfig s = to_sim_config(c);
  EXPECT_EQ(s.n1, 64);
  EXPECT_EQ(s.n2, 64);
  EXPECT_DOUBLE_EQ(s.length1, 32.0 * std::numbers::pi);
  EXPECT_DOUBLE_EQ(s.eps, 0.05);
}

TEST(Config, UnknownKeyNamesLine) {
  try {
    parse("n = 64\nbogus = 1\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("test.cfg:2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("bogus"), std::string::npos) << msg;
  }
  EXPECT_THROW(parse("just words\n"), ConfigError);
}

TEST(Config, OverridesWin) {
  ConfigMap c = parse("eps = 0.05\n");
  apply_override(c, "eps=0.25");
  apply_override(c, "nonlinear = false");
  EXPECT_EQ(c.values.at("eps"), "0.25");
  const SimConfig s = to_sim_config(c);
  EXPECT_DOUBLE_EQ(s.eps, 0.25);
  EXPECT_FALSE(s.nonlinear);
  EXPECT_THROW(apply_override(c, "nope=1"), ConfigError);
  EXPECT_THROW(apply_override(c, ""), ConfigError);
}

TEST(Config, RenderIsSortedAndReparses) {
  const ConfigMap c = parse("t_end = 5\neps = 0.05\nn = 128\n");
  const std::string text = render(c);
  EXPECT_EQ(text, "eps = 0.05\nn = 128\nt_end = 5\n");
  EXPECT_EQ(parse(text).values, c.values);
}

TEST(Config, ValueSyntax) {
  EXPECT_DOUBLE_EQ(parse_real_value("L", "2pi"), 2.0 * std::numbers::pi);
  EXPECT_DOUBLE_EQ(parse_real_value("L", "pi"), std::numbers::pi);
  EXPECT_DOUBLE_EQ(parse_real_value("eps", "1e-3"), 1e-3);
  EXPECT_THROW(parse_real_value("eps", "abc"), ConfigError);
  EXPECT_THROW(parse_real_value("eps", "0.5x"), ConfigError);
  EXPECT_EQ(parse_real_list("eps_list", "0.5, 0.25,0.125"), (std::vector<double>{0.5, 0.25, 0.125}));
  EXPECT_THROW(to_sim_config(parse("nonlinear = maybe\n")), ConfigError);
  EXPECT_THROW(to_sim_config(parse("frame = sideways\n")), ConfigError);
  EXPECT_THROW(to_sim_config(parse("n = 1.5\n")), ConfigError);
}

TEST(Config, SpecialValues) {
  SimConfig base;
  base.dt = 0.1;
  base.recipe.support_radius = 2.0;
  const SimConfig s = to_sim_config(parse("dt = auto\nsupport_radius = none\n"), base);
  EXPECT_FALSE(s.dt.has_value());
  EXPECT_FALSE(s.recipe.support_radius.has_value());
  const SimConfig r = to_sim_config(parse("n1 = 256\nn2 = 32\nL1 = 64pi\nL2 = 8pi\nsupport_radius = 0.5\n"));
  EXPECT_EQ(r.n1, 256);
  EXPECT_EQ(r.n2, 32);
  EXPECT_DOUBLE_EQ(*r.recipe.support_radius, 0.5);
  EXPECT_EQ(r.frame, Frame::rescaled);
}

TEST(Config, StudyKeys) {
  const StudyConfig s = to_study_config(
      parse("kind = limit-nonlinear\nstudy = lim\neps_list = 0.5,0.25\nsample_seeds = 3,4\n"
            "workers = 2\ndeterministic = true\nm = 4\n"));
  EXPECT_EQ(s.kind, StudyKind::limit_nonlinear);
  EXPECT_EQ(s.name, "lim");
  EXPECT_EQ(s.eps_list.size(), 2u);
  EXPECT_EQ(s.sample_seeds, (std::vector<std::uint64_t>{3, 4}));
  EXPECT_EQ(s.workers, 2);
  EXPECT_TRUE(s.deterministic);
  EXPECT_EQ(s.base.m, 4);
  EXPECT_EQ(s.base.recipe.m, 4);
  EXPECT_THROW(to_study_config(parse("kind = nope\n")), ConfigError);
}

TEST(Config, EveryKeyHasHelp) {
  for (const auto& k : config_keys()) EXPECT_NE(std::string(k.help), "") << k.name;
}

}  // namespace
}  // namespace alfven
