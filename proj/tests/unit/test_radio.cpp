// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hetnet/radio.hpp"
#include "hetnet/rng.hpp"
#include "hetnet/topology.hpp"
#include "hetnet/units.hpp"

namespace hetnet {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

TEST(PathLoss, ReferenceDistances) {
  EXPECT_NEAR(path_loss_db(Tier::kMacro, 1000.0), 128.1, 1e-9);
  EXPECT_NEAR(path_loss_db(Tier::kPico, 1000.0), 140.7, 1e-9);
  EXPECT_NEAR(path_loss_db(Tier::kMacro, 100.0), 90.5, 1e-9);
}

TEST(PathLoss, IncreasesWithDistance) {
  for (Tier t : {Tier::kMacro, Tier::kPico}) {
    double prev = path_loss_db(t, 1.0);
    for (double d = 2.0; d < 3000.0; d *= 1.3) {
      const double pl = path_loss_db(t, d);
      EXPECT_GT(pl, prev);
      prev = pl;
    }
  }
}

TEST(PathLoss, RejectsNonPositiveDistance) {
  EXPECT_THROW(path_loss_db(Tier::kMacro, 0.0), std::domain_error);
  EXPECT_THROW(path_loss_db(Tier::kPico, -1.0), std::domain_error);
}

TEST(AntennaPattern, BoresightHalfPowerAndClip) {
  EXPECT_DOUBLE_EQ(antenna_pattern_db(0.0), 0.0);
  EXPECT_NEAR(antenna_pattern_db(70.0), -12.0, 1e-12);
  EXPECT_NEAR(antenna_pattern_db(-70.0), -12.0, 1e-12);
  EXPECT_DOUBLE_EQ(antenna_pattern_db(180.0), -20.0);
  EXPECT_DOUBLE_EQ(antenna_pattern_db(-180.0), -20.0);
}

TEST(AntennaPattern, BoundedAndSymmetric) {
  for (double th = -180.0; th <= 180.0; th += 0.5) {
    const double a = antenna_pattern_db(th);
    EXPECT_LE(a, 0.0);
    EXPECT_GE(a, -20.0);
    EXPECT_DOUBLE_EQ(a, antenna_pattern_db(-th));
  }
}

TEST(Shadowing, ZeroSigmaIsZero) {
  Rng rng = make_rng(1, Stream::kShadowing);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_shadowing(0.0, rng), 0.0);
}

struct SigmaCase {
  Tier tier;
  double sigma;
  double tolerance;
};

class ShadowingSigma : public ::testing::TestWithParam<SigmaCase> {};

TEST_P(ShadowingSigma, SampleDeviation) {
  const SigmaCase c = GetParam();
  Rng rng = make_rng(2024, Stream::kShadowing);
  constexpr int kN = 100'000;
  double sum = 0.0;
  double sum2 = 0.0;
  for (int i = 0; i < kN; ++i) {
    const double x = sample_shadowing(c.tier, rng);
    sum += x;
    sum2 += x * x;
  }
  const double mean = sum / kN;
  const double sd = std::sqrt(sum2 / kN - mean * mean);
  EXPECT_NEAR(sd, c.sigma, c.tolerance);
  EXPECT_NEAR(mean, 0.0, 0.1);
}

INSTANTIATE_TEST_SUITE_P(Tiers, ShadowingSigma,
                         ::testing::Values(SigmaCase{Tier::kMacro, 8.0, 0.2},
                                           SigmaCase{Tier::kPico, 10.0, 0.25}));

class GainExamples : public ::testing::Test {
 protected:
  void SetUp() override {
    layout = build_layout(500.0);
    // Sector 0 points at 30 degrees from site 0 at the origin.
    users.push_back({{1000.0 * std::cos(30.0 * kDeg), 1000.0 * std::sin(30.0 * kDeg)}, 0, {}});
    picos.push_back({{150.0, 100.0}, 0});
    users.push_back({{150.0 + 50.0, 100.0}, 0, {}});
  }

  GainMatrix compute(std::uint64_t seed, bool shadowing) const {
    Rng rng = make_rng(seed, Stream::kShadowing);
    return compute_gain_matrix(layout, picos, users, rng, {}, {!shadowing});
  }

  Layout layout;
  std::vector<Pico> picos;
  std::vector<User> users;
};

TEST_F(GainExamples, MacroBoresightAtOneKilometre) {
  const GainMatrix g = compute(1, false);
  ASSERT_EQ(g.cells(), kSectors + 1);
  EXPECT_NEAR(g.gain_db(0, 0), -133.1, 1e-9);
  EXPECT_NEAR(g.path_loss_db(0, 0), 128.1, 1e-9);
  EXPECT_NEAR(rsrp_dbm(g, 0, 0), -87.1, 1e-9);
}

TEST_F(GainExamples, PicoAtFiftyMetres) {
  const GainMatrix g = compute(1, false);
  const std::size_t pico_cell = kSectors;
  EXPECT_EQ(g.tier(pico_cell), Tier::kPico);
  EXPECT_NEAR(g.gain_db(pico_cell, 1), -107.952199159, 1e-6);
  EXPECT_NEAR(rsrp_dbm(g, pico_cell, 1), -77.952199159, 1e-6);
}

TEST_F(GainExamples, NoShadowingIsSeedIndependent) {
  const GainMatrix a = compute(1, false);
  const GainMatrix b = compute(99, false);
  for (std::size_t c = 0; c < a.cells(); ++c) {
    for (std::size_t u = 0; u < a.users(); ++u) EXPECT_EQ(a.gain_db(c, u), b.gain_db(c, u));
  }
}

TEST_F(GainExamples, ShadowingEntersGainAndPathLossAlike) {
  const GainMatrix flat = compute(5, false);
  const GainMatrix shadowed = compute(5, true);
  bool any_delta = false;
  for (std::size_t c = 0; c < flat.cells(); ++c) {
    for (std::size_t u = 0; u < flat.users(); ++u) {
      const double dg = shadowed.gain_db(c, u) - flat.gain_db(c, u);
      const double dpl = shadowed.path_loss_db(c, u) - flat.path_loss_db(c, u);
      EXPECT_NEAR(dg, -dpl, 1e-9);
      any_delta = any_delta || std::abs(dg) > 1e-9;
    }
  }
  EXPECT_TRUE(any_delta);
}

TEST_F(GainExamples, LinearCacheMatchesDecibels) {
  const GainMatrix g = compute(5, true);
  for (std::size_t c = 0; c < g.cells(); ++c) {
    for (std::size_t u = 0; u < g.users(); ++u) {
      EXPECT_DOUBLE_EQ(g.gain(c, u), db_to_linear(g.gain_db(c, u)));
      EXPECT_DOUBLE_EQ(g.gains_to_user(u)[c], g.gain(c, u));
    }
  }
}

TEST(GainMatrixInvariants, TierPowerOrderingAndRanges) {
  const Layout layout = build_layout(500.0);
  Rng pr = make_rng(8, Stream::kPicos);
  Rng ur = make_rng(8, Stream::kUsers);
  Rng sr = make_rng(8, Stream::kShadowing);
  const auto picos = place_picos(layout, 2, pr);
  const auto users = place_users(layout, picos, 12, ur);
  const GainMatrix g = compute_gain_matrix(layout, picos, users, sr);
  ASSERT_EQ(g.cells(), kSectors + picos.size());
  ASSERT_EQ(g.users(), users.size());
  for (std::size_t c = 0; c < g.cells(); ++c) {
    EXPECT_EQ(g.tier(c), c < kSectors ? Tier::kMacro : Tier::kPico);
    for (std::size_t u = 0; u < g.users(); ++u) EXPECT_LT(g.gain_db(c, u), 0.0);
  }
  EXPECT_GT(g.rs_power_dbm(0), g.rs_power_dbm(kSectors));
}

TEST(GainMatrixErrors, RejectsBadInput) {
  GainMatrix g(1, 1, {Tier::kMacro}, {46.0});
  EXPECT_THROW(g.set_link(0, 0, std::nan(""), 100.0), std::domain_error);
  EXPECT_THROW(g.set_link(1, 0, -100.0, 100.0), std::out_of_range);
  EXPECT_THROW(GainMatrix(2, 1, {Tier::kMacro}, {46.0}), std::invalid_argument);
}

TEST(Rsrp, IdentityGain) {
  GainMatrix g(1, 1, {Tier::kPico}, {30.0});
  g.set_link(0, 0, 0.0, 0.0);
  EXPECT_DOUBLE_EQ(rsrp_dbm(g, 0, 0), 30.0);
}

}  // namespace
}  // namespace hetnet
