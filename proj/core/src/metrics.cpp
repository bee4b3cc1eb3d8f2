// SPDX-License-Identifier: Apache-2.0
#include "hetnet/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include "hetnet/units.hpp"

namespace hetnet {

double NoiseModel::per_rb_noise_mw() const { return dbm_to_mw(per_rb_noise_dbm()); }

double per_rb_sinr(const UplinkNetwork& net, const UplinkState& state, std::size_t user,
                   std::size_t rb) {
  const Slot& slot = state.alloc.slot(user);
  if (!slot.rbs.contains(rb)) throw std::out_of_range("user is not scheduled on this RB");
  const std::size_t cell = state.serving.at(user);
  double denom = net.noise_per_rb_mw;
  for (std::size_t u : cochannel_interferers(state.alloc, user, rb)) {
    denom += state.per_rb_mw[u] * net.gains.gain(cell, u);
  }
  return state.per_rb_mw[user] * net.gains.gain(cell, user) / denom;
}

double wideband_sinr(std::span<const double> per_subcarrier) {
  if (per_subcarrier.empty()) throw std::domain_error("wideband SINR of an empty allocation");
  for (double g : per_subcarrier) {
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw std::domain_error("per-subcarrier SINR must be positive and finite");
    }
  }
  // mean(g/(g+1)) / mean(1/(g+1)) is the mean of g weighted by 1/(g+1).
  // Offsetting by the minimum keeps every term non-negative, so nothing
  // cancels at high SINR and a constant vector returns its value exactly.
  const double lo = *std::min_element(per_subcarrier.begin(), per_subcarrier.end());
  double num = 0.0;
  double den = 0.0;
  for (double g : per_subcarrier) {
    const double w = 1.0 / (g + 1.0);
    num += (g - lo) * w;
    den += w;
  }
  return lo + num / den;
}

double user_wideband_sinr(const UplinkNetwork& net, const UplinkState& state, std::size_t user) {
  const Slot& slot = state.alloc.slot(user);
  std::vector<double> sc;
  sc.reserve(slot.rbs.n_rbs * kSubcarriersPerRb);
  for (std::size_t rb = slot.rbs.first_rb; rb < slot.rbs.first_rb + slot.rbs.n_rbs; ++rb) {
    sc.insert(sc.end(), kSubcarriersPerRb, per_rb_sinr(net, state, user, rb));
  }
  return wideband_sinr(sc);
}

double nearest_rank(std::vector<double> samples, double p) {
  if (samples.empty()) throw std::invalid_argument("percentile of an empty sample set");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * n - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, samples.size());
  return samples[rank - 1];
}

Percentiles percentiles(std::span<const double> samples) {
  std::vector<double> v(samples.begin(), samples.end());
  return {nearest_rank(v, 5.0), nearest_rank(v, 50.0), nearest_rank(v, 90.0)};
}

void SinrReport::add(SinrSample sample) {
  SeriesKey key{sample.strategy, sample.alpha};
  auto [it, inserted] = index_.try_emplace(key);
  if (inserted) order_.push_back(key);
  it->second.push_back(samples_.size());
  samples_.push_back(std::move(sample));
}

std::vector<double> SinrReport::series_db(const SeriesKey& key) const {
  std::vector<double> out;
  if (auto it = index_.find(key); it != index_.end()) {
    out.reserve(it->second.size());
    for (std::size_t i : it->second) out.push_back(samples_[i].sinr_db);
  }
  return out;
}

Percentiles SinrReport::percentiles(const SeriesKey& key) const {
  return hetnet::percentiles(series_db(key));
}

std::size_t SinrReport::count(const SeriesKey& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? 0 : it->second.size();
}

std::vector<CdfRow> export_cdf(const SinrReport& report) {
  std::vector<CdfRow> rows;
  rows.reserve(report.samples().size());
  for (const SeriesKey& key : report.series()) {
    std::vector<double> v = report.series_db(key);
    std::sort(v.begin(), v.end());
    const double n = static_cast<double>(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      rows.push_back({key.first, key.second, v[i], static_cast<double>(i + 1) / n});
    }
  }
  return rows;
}

}  // namespace hetnet
