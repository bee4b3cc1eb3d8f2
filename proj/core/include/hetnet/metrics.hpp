// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hetnet/radio.hpp"
#include "hetnet/uplink_state.hpp"

namespace hetnet {

inline constexpr std::size_t kSubcarriersPerRb = 12;

struct NoiseModel {
  double psd_dbm_hz = -174.0;
  double noise_figure_db = 5.0;
  double rb_bandwidth_hz = 180'000.0;

  double per_rb_noise_dbm() const {
    return psd_dbm_hz + noise_figure_db + 10.0 * std::log10(rb_bandwidth_hz);
  }
  double per_rb_noise_mw() const;
};

/// Linear SINR of `user` on `rb` at its serving cell. Throws
/// std::out_of_range if the user does not hold `rb`.
double per_rb_sinr(const UplinkNetwork& net, const UplinkState& state, std::size_t user,
                   std::size_t rb);

/// MMSE effective SINR: (1 / mean(g / (g + 1)) - 1)^-1, evaluated as the
/// 1/(g+1)-weighted mean of g. Throws
/// std::domain_error on an empty input or a non-positive / non-finite entry.
double wideband_sinr(std::span<const double> per_subcarrier);

/// Wideband SINR of one user: per-RB values expanded over the RB's
/// subcarriers, then combined.
double user_wideband_sinr(const UplinkNetwork& net, const UplinkState& state, std::size_t user);

struct Percentiles {
  double p5 = 0.0;
  double p50 = 0.0;
  double p90 = 0.0;
};

/// Nearest-rank quantile: element ceil(p/100 * N) (1-based) of the
/// ascending sort. Throws std::invalid_argument for empty input.
double nearest_rank(std::vector<double> samples, double p);
Percentiles percentiles(std::span<const double> samples);

struct SinrSample {
  std::size_t drop = 0;
  std::size_t user = 0;
  std::size_t serving_cell = 0;
  Tier tier = Tier::kMacro;
  std::string strategy;
  double alpha = 0.0;
  double p0_dbm = 0.0;
  double sinr_db = 0.0;
};

using SeriesKey = std::pair<std::string, double>;  // (strategy label, alpha)

struct CdfRow {
  std::string strategy;
  double alpha = 0.0;
  double sinr_db = 0.0;
  double fraction = 0.0;
};

/// SINR samples plus per-(strategy, alpha) summaries. Series keep their
/// first-seen order.
class SinrReport {
 public:
  void add(SinrSample sample);

  const std::vector<SinrSample>& samples() const { return samples_; }
  const std::vector<SeriesKey>& series() const { return order_; }
  std::vector<double> series_db(const SeriesKey& key) const;
  Percentiles percentiles(const SeriesKey& key) const;
  std::size_t count(const SeriesKey& key) const;

 private:
  std::vector<SinrSample> samples_;
  std::vector<SeriesKey> order_;
  std::map<SeriesKey, std::vector<std::size_t>> index_;
};

/// (strategy, alpha, sinr_db, rank / N) rows over the sorted samples of
/// each series.
std::vector<CdfRow> export_cdf(const SinrReport& report);

}  // namespace hetnet
