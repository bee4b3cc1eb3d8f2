// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <stdexcept>

#include "hetnet/cell_selection.hpp"
#include "hetnet/metrics.hpp"
#include "hetnet/oracle.hpp"
#include "hetnet/rng.hpp"
#include "hetnet_testing.hpp"

namespace hetnet {
namespace {

using testing::make_gains;

const double kNoise = NoiseModel{}.per_rb_noise_mw();
const SchedulerConfig kSingleBlock{4, 4};

TEST(BruteForce, SingleCellIsTriviallyStable) {
  const GainMatrix g = make_gains({{-100.0, -110.0, -95.0}}, {Tier::kMacro});
  const UplinkNetwork net{g, {}, kSingleBlock, kNoise};
  const OracleResult r = brute_force_oracle(net);
  EXPECT_EQ(r.enumerated, 1u);
  ASSERT_EQ(r.stable.size(), 1u);
  EXPECT_EQ(r.stable[0], (std::vector<std::size_t>{0, 0, 0}));
}

TEST(BruteForce, OneUserPicksMetricMinimum) {
  const GainMatrix g = make_gains({{-112.0}, {-104.0}}, {Tier::kMacro, Tier::kPico});
  const UplinkNetwork net{g, {}, kSingleBlock, kNoise};
  const OracleResult r = brute_force_oracle(net);
  EXPECT_EQ(r.enumerated, 2u);
  ASSERT_EQ(r.stable.size(), 1u);
  EXPECT_EQ(r.stable[0], std::vector<std::size_t>{1});
  EXPECT_EQ(r.min_total, std::vector<std::size_t>{1});
  EXPECT_EQ(select_interference_based(net, {}).assignment.serving, r.stable[0]);
}

TEST(BruteForce, StableListIsSortedAndVerified) {
  Rng rng = make_rng(21, Stream::kShadowing);
  for (int i = 0; i < 30; ++i) {
    const SmallInstance inst = random_small_instance(rng, 3, 4);
    const UplinkNetwork net = inst.network();
    const OracleResult r = brute_force_oracle(net);
    EXPECT_TRUE(std::is_sorted(r.stable.begin(), r.stable.end()));
    for (const auto& s : r.stable) {
      EXPECT_TRUE(is_stable(net, UplinkState::build(net, s)));
      EXPECT_TRUE(r.contains(s));
    }
  }
}

TEST(BruteForce, TwoCellsThreeUsersContainsBestResponse) {
  Rng rng = make_rng(5, Stream::kShadowing);
  std::size_t checked = 0;
  for (int i = 0; i < 200 && checked < 20; ++i) {
    const SmallInstance inst = random_small_instance(rng, 2, 3);
    if (inst.gains.cells() != 2 || inst.gains.users() != 3) continue;
    const UplinkNetwork net = inst.network();
    const Assignment a = select_interference_based(net, {}).assignment;
    if (!a.converged) continue;
    EXPECT_TRUE(brute_force_oracle(net).contains(a.serving));
    ++checked;
  }
  EXPECT_GT(checked, 0u);
}

TEST(BruteForce, RejectsLargeInstances) {
  const GainMatrix g = make_gains(std::vector<std::vector<double>>(5, std::vector<double>(2, -100.0)),
                                  std::vector<Tier>(5, Tier::kMacro));
  const UplinkNetwork net{g, {}, kSingleBlock, kNoise};
  EXPECT_THROW(brute_force_oracle(net), std::length_error);
}

TEST(SmallInstances, RespectBounds) {
  Rng rng = make_rng(2, Stream::kShadowing);
  for (int i = 0; i < 100; ++i) {
    const SmallInstance inst = random_small_instance(rng, 3, 5);
    EXPECT_GE(inst.gains.cells(), 1u);
    EXPECT_LE(inst.gains.cells(), 3u);
    EXPECT_GE(inst.gains.users(), 1u);
    EXPECT_LE(inst.gains.users(), 5u);
    EXPECT_EQ(inst.gains.tier(0), Tier::kMacro);
    EXPECT_EQ(inst.sched.users_per_subframe(), 1u);
  }
}

TEST(Suite, ConvergedRunsLandInStableSet) {
  const OracleSuiteReport r = run_oracle_suite(60, 99);
  EXPECT_EQ(r.instances, 60u);
  EXPECT_EQ(r.converged_in_stable_set, r.converged);
  EXPECT_GE(r.convergence_rate(), 0.95);
}

}  // namespace
}  // namespace hetnet
