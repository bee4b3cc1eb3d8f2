// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hetnet/metrics.hpp"
#include "hetnet/rng.hpp"
#include "hetnet/units.hpp"
#include "hetnet_testing.hpp"

namespace hetnet {
namespace {

using testing::make_gains;

TEST(Noise, PerResourceBlock) {
  EXPECT_NEAR(NoiseModel{}.per_rb_noise_dbm(), -116.45, 0.01);
  EXPECT_NEAR(NoiseModel{}.per_rb_noise_dbm(), -116.44727494896694, 1e-9);
}

TEST(PerRbSinr, NoiseOnlyLink) {
  const GainMatrix g = make_gains({{-133.1}}, {Tier::kMacro});
  // alpha = 0 makes the per-RB power exactly P0.
  const UplinkNetwork net{g, {-10.0, 0.0}, {}, NoiseModel{}.per_rb_noise_mw()};
  const UplinkState st = UplinkState::build(net, {0});
  EXPECT_NEAR(linear_to_db(per_rb_sinr(net, st, 0, 0)), -26.65272505103306, 1e-9);
  EXPECT_THROW(per_rb_sinr(net, st, 0, 4), std::out_of_range);
}

TEST(PerRbSinr, DoubledNoiseHalvesSinr) {
  const GainMatrix g = make_gains({{-120.0}}, {Tier::kMacro});
  const double n = NoiseModel{}.per_rb_noise_mw();
  const UplinkNetwork a{g, {-10.0, 0.0}, {}, n};
  const UplinkNetwork b{g, {-10.0, 0.0}, {}, 2.0 * n};
  const UplinkState st = UplinkState::build(a, {0});
  EXPECT_NEAR(linear_to_db(per_rb_sinr(a, st, 0, 0)) - linear_to_db(per_rb_sinr(b, st, 0, 0)),
              10.0 * std::log10(2.0), 1e-12);
}

TEST(PerRbSinr, InterfererAtNoiseLevel) {
  const double n = NoiseModel{}.per_rb_noise_mw();
  const double n_db = linear_to_db(n);
  // User 1 (cell 1) reaches cell 0 at exactly the noise power: -10 dBm + g.
  const GainMatrix g =
      make_gains({{-100.0, n_db + 10.0}, {-150.0, -100.0}}, {Tier::kMacro, Tier::kMacro});
  const UplinkNetwork net{g, {-10.0, 0.0}, {}, n};
  const UplinkState with = UplinkState::build(net, {0, 1});
  const UplinkState alone = UplinkState::build(net, {0, 0});
  EXPECT_NEAR(linear_to_db(per_rb_sinr(net, alone, 0, 0)) - linear_to_db(per_rb_sinr(net, with, 0, 0)),
              10.0 * std::log10(2.0), 1e-9);
}

TEST(Wideband, HandValues) {
  const std::vector<double> a = {1.0, 3.0};
  EXPECT_NEAR(wideband_sinr(a), 5.0 / 3.0, 1e-12);
  const std::vector<double> b = {1.0, 1e9};
  EXPECT_NEAR(wideband_sinr(b), 3.0, 1e-8);
}

TEST(Wideband, ConstantVectorIsFixedPoint) {
  for (double g : {1e-4, 0.3, 1.0, 7.5, 1e3}) {
    const std::vector<double> v(48, g);
    EXPECT_NEAR(wideband_sinr(v), g, 1e-12 * g);
  }
}

TEST(Wideband, BoundedByInputs) {
  Rng rng = make_rng(31, Stream::kShadowing);
  std::uniform_real_distribution<double> db(-30.0, 30.0);
  for (int i = 0; i < 500; ++i) {
    std::vector<double> v(1 + rng() % 48);
    for (double& x : v) x = db_to_linear(db(rng));
    const double w = wideband_sinr(v);
    EXPECT_GE(w, *std::min_element(v.begin(), v.end()) * (1.0 - 1e-12));
    EXPECT_LE(w, *std::max_element(v.begin(), v.end()) * (1.0 + 1e-12));
  }
}

TEST(Wideband, MonotoneInEachEntry) {
  Rng rng = make_rng(32, Stream::kShadowing);
  std::uniform_real_distribution<double> db(-20.0, 40.0);
  for (int i = 0; i < 300; ++i) {
    std::vector<double> v(1 + rng() % 48);
    for (double& x : v) x = db_to_linear(db(rng));
    const double before = wideband_sinr(v);
    v[rng() % v.size()] *= db_to_linear(std::abs(db(rng)) / 4.0);
    EXPECT_GE(wideband_sinr(v), before * (1.0 - 1e-12));
  }
}

TEST(Wideband, RejectsBadInput) {
  EXPECT_THROW(wideband_sinr(std::vector<double>{}), std::domain_error);
  EXPECT_THROW(wideband_sinr(std::vector<double>{1.0, 0.0}), std::domain_error);
  EXPECT_THROW(wideband_sinr(std::vector<double>{1.0, -2.0}), std::domain_error);
  EXPECT_THROW(wideband_sinr(std::vector<double>{std::numeric_limits<double>::infinity()}),
               std::domain_error);
}

TEST(Percentile, UniformGrid) {
  std::vector<double> v(100);
  std::iota(v.begin(), v.end(), 1.0);
  std::reverse(v.begin(), v.end());
  const Percentiles p = percentiles(v);
  EXPECT_EQ(p.p5, 5.0);
  EXPECT_EQ(p.p50, 50.0);
  EXPECT_EQ(p.p90, 90.0);
}

TEST(Percentile, SingletonAndSmallSet) {
  const std::vector<double> one = {7.0};
  const Percentiles p = percentiles(one);
  EXPECT_EQ(p.p5, 7.0);
  EXPECT_EQ(p.p50, 7.0);
  EXPECT_EQ(p.p90, 7.0);
  EXPECT_EQ(nearest_rank({3.0, 1.0, 2.0}, 50.0), 2.0);
  EXPECT_EQ(nearest_rank({3.0, 1.0, 2.0}, 0.0), 1.0);
  EXPECT_EQ(nearest_rank({3.0, 1.0, 2.0}, 100.0), 3.0);
  EXPECT_THROW(nearest_rank({}, 50.0), std::invalid_argument);
}

SinrSample sample(const std::string& strategy, double alpha, double db) {
  SinrSample s;
  s.strategy = strategy;
  s.alpha = alpha;
  s.sinr_db = db;
  return s;
}

TEST(Cdf, RowsPerSeries) {
  SinrReport r;
  for (double x : {3.0, -1.0, 2.0}) r.add(sample("rsrp", 0.8, x));
  r.add(sample("pl", 0.8, 4.0));
  const std::vector<CdfRow> rows = export_cdf(r);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].strategy, "rsrp");
  EXPECT_EQ(rows[0].sinr_db, -1.0);
  EXPECT_NEAR(rows[0].fraction, 1.0 / 3.0, 1e-15);
  EXPECT_EQ(rows[2].sinr_db, 3.0);
  EXPECT_EQ(rows[2].fraction, 1.0);
  EXPECT_EQ(rows[3].strategy, "pl");
  EXPECT_EQ(rows[3].fraction, 1.0);
}

TEST(Cdf, EmptyReport) { EXPECT_TRUE(export_cdf(SinrReport{}).empty()); }

TEST(Cdf, TiedSamples) {
  SinrReport r;
  r.add(sample("rsrp", 1.0, 0.5));
  r.add(sample("rsrp", 1.0, 0.5));
  const std::vector<CdfRow> rows = export_cdf(r);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].fraction, 0.5);
  EXPECT_EQ(rows[1].fraction, 1.0);
  EXPECT_EQ(rows[0].sinr_db, rows[1].sinr_db);
}

TEST(Report, SeriesInFirstSeenOrder) {
  SinrReport r;
  r.add(sample("pl", 1.0, 1.0));
  r.add(sample("rsrp", 0.4, 2.0));
  r.add(sample("pl", 1.0, 3.0));
  ASSERT_EQ(r.series().size(), 2u);
  EXPECT_EQ(r.series()[0], (SeriesKey{"pl", 1.0}));
  EXPECT_EQ(r.count({"pl", 1.0}), 2u);
  EXPECT_EQ(r.count({"cre6", 1.0}), 0u);
  EXPECT_EQ(r.percentiles({"pl", 1.0}).p90, 3.0);
}

}  // namespace
}  // namespace hetnet
