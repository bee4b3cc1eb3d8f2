// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "hetnet/errors.hpp"
#include "hetnet/scenario.hpp"

namespace hetnet {
namespace {

TEST(Defaults, BaselineScenario) {
  const Scenario s;
  EXPECT_EQ(s.isd_m, 500.0);
  EXPECT_EQ(s.picos_per_sector, 2u);
  EXPECT_EQ(s.users_per_sector, 12u);
  EXPECT_EQ(s.p0_dbm, -90.0);
  EXPECT_EQ(s.alphas, (std::vector<double>{0.4, 0.6, 0.8, 1.0}));
  ASSERT_EQ(s.strategies.size(), 4u);
  EXPECT_EQ(s.strategies[2].label(), "cre6");
  EXPECT_TRUE(validate(s).empty());
  const PowerConfig p = s.power(0.6);
  EXPECT_EQ(p.alpha, 0.6);
  EXPECT_EQ(p.rbs_per_user, 4u);
}

TEST(Parse, OverridesAndComments) {
  const Scenario s = parse_scenario(R"(
# baseline with a denser overlay
[layout]
picos_per_sector = 6

[power]
p0_dbm = -85.5
alphas = 0.8, 1
pl_basis = propagation

[radio]
block_policy = packed

[selection]
strategies = rsrp, cre:3, interference
max_passes = 7

[campaign]
drops = 3
seed = 42
output_dir = out/dense
)");
  EXPECT_EQ(s.picos_per_sector, 6u);
  EXPECT_EQ(s.p0_dbm, -85.5);
  EXPECT_EQ(s.alphas, (std::vector<double>{0.8, 1.0}));
  EXPECT_EQ(s.pl_basis, PlBasis::kPropagation);
  EXPECT_EQ(s.block_policy, BlockPolicy::kPacked);
  ASSERT_EQ(s.strategies.size(), 3u);
  EXPECT_EQ(s.strategies[1].cre_pico_bias_db, 3.0);
  EXPECT_EQ(s.max_passes, 7u);
  EXPECT_EQ(s.drops, 3u);
  EXPECT_EQ(s.seed, 42u);
  EXPECT_EQ(s.output_dir, "out/dense");
}

TEST(Parse, ResolvedConfigRoundTrips) {
  Scenario s;
  s.picos_per_sector = 6;
  s.seed = 1234567890123ull;
  s.alphas = {0.4, 1.0};
  s.radio.pico_shadowing_db = 9.5;
  s.pl_basis = PlBasis::kPropagation;
  const std::string text = to_config(s);
  const Scenario back = parse_scenario(text);
  EXPECT_EQ(to_config(back), text);
  EXPECT_EQ(back.seed, s.seed);
  EXPECT_EQ(back.radio.pico_shadowing_db, 9.5);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_scenario("[layout]\npicos = 3\n"), ConfigError);
  EXPECT_THROW(parse_scenario("[layout]\nisd_m = 500\nisd_m = 400\n"), ConfigError);
  EXPECT_THROW(parse_scenario("seed = 3\n"), ConfigError);
  EXPECT_THROW(parse_scenario("[campaign]\ndrops = many\n"), ConfigError);
  EXPECT_THROW(parse_scenario("[campaign]\ndrops = -1\n"), ConfigError);
  EXPECT_THROW(parse_scenario("[selection]\nstrategies = rsrp, best\n"), ConfigError);
  EXPECT_THROW(parse_scenario("[layout\n"), ConfigError);
}

TEST(Load, MissingFileNamesPath) {
  try {
    load_scenario("/nonexistent/dir/run.cfg");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/dir/run.cfg"), std::string::npos);
  }
}

TEST(Load, ReadsFile) {
  const auto path = std::filesystem::temp_directory_path() / "hetnet_scenario_test.cfg";
  std::ofstream(path) << "[campaign]\ndrops = 5\n";
  EXPECT_EQ(load_scenario(path).drops, 5u);
  std::filesystem::remove(path);
}

TEST(Validate, RejectsInconsistentSettings) {
  Scenario s;
  s.users_per_sector = 1;
  EXPECT_THROW(validate(s), ConfigError);
  s = Scenario{};
  s.alphas = {0.8, 0.8};
  EXPECT_THROW(validate(s), ConfigError);
  s = Scenario{};
  s.alphas = {1.5};
  EXPECT_THROW(validate(s), ConfigError);
  s = Scenario{};
  s.drops = 0;
  EXPECT_THROW(validate(s), ConfigError);
  s = Scenario{};
  s.strategies = parse_strategy_list("rsrp, cre:0, rsrp");
  EXPECT_THROW(validate(s), ConfigError);
  s = Scenario{};
  s.isd_m = 0.0;
  EXPECT_THROW(validate(s), ConfigError);
}

TEST(Validate, WarnsOnUnusualValues) {
  Scenario s;
  s.alphas = {0.75};
  s.radio.pico_rs_power_dbm = 50.0;
  EXPECT_EQ(validate(s).size(), 2u);
}

TEST(Lists, Parsing) {
  EXPECT_EQ(parse_alpha_list(" 0.4 ,1 "), (std::vector<double>{0.4, 1.0}));
  EXPECT_THROW(parse_alpha_list(" , "), ConfigError);
  EXPECT_THROW(parse_strategy_list(""), ConfigError);
}

}  // namespace
}  // namespace hetnet
