// SPDX-License-Identifier: Apache-2.0
#include "hetnet/radio.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hetnet/units.hpp"

namespace hetnet {

const char* tier_name(Tier tier) { return tier == Tier::kMacro ? "macro" : "pico"; }

double path_loss_db(Tier tier, double d_m, const RadioParams& params) {
  if (!(d_m > 0.0)) throw std::domain_error("path loss requires a positive distance");
  const double d_km = d_m / 1000.0;
  if (tier == Tier::kMacro) {
    return params.macro_pl_intercept_db + params.macro_pl_slope_db * std::log10(d_km);
  }
  return params.pico_pl_intercept_db + params.pico_pl_slope_db * std::log10(d_km);
}

double antenna_pattern_db(double theta_deg, const RadioParams& params) {
  const double ratio = theta_deg / params.theta_3db_deg;
  return -std::min(12.0 * ratio * ratio, params.max_attenuation_db);
}

double sample_shadowing(double sigma_db, Rng& rng) {
  if (sigma_db == 0.0) return 0.0;
  std::normal_distribution<double> normal(0.0, sigma_db);
  return normal(rng);
}

double sample_shadowing(Tier tier, Rng& rng, const RadioParams& params) {
  return sample_shadowing(tier == Tier::kMacro ? params.macro_shadowing_db
                                               : params.pico_shadowing_db,
                          rng);
}

GainMatrix::GainMatrix(std::size_t cells, std::size_t users, std::vector<Tier> tiers,
                       std::vector<double> rs_power_dbm)
    : cells_(cells),
      users_(users),
      tiers_(std::move(tiers)),
      rs_power_dbm_(std::move(rs_power_dbm)),
      gain_db_(cells * users, 0.0),
      gain_lin_(cells * users, 1.0),
      path_loss_db_(cells * users, 0.0) {
  if (tiers_.size() != cells || rs_power_dbm_.size() != cells) {
    throw std::invalid_argument("per-cell tier and reference power vectors must match cells");
  }
}

void GainMatrix::set_link(std::size_t cell, std::size_t user, double gain_db,
                          double path_loss_db) {
  if (!std::isfinite(gain_db) || !std::isfinite(path_loss_db)) {
    throw std::domain_error("link gain must be finite");
  }
  const std::size_t i = idx(cell, user);
  gain_db_[i] = gain_db;
  gain_lin_[i] = db_to_linear(gain_db);
  path_loss_db_[i] = path_loss_db;
}

GainMatrix compute_gain_matrix(const Layout& layout, const std::vector<Pico>& picos,
                               const std::vector<User>& users, Rng& rng,
                               const RadioParams& params, const GainOptions& options) {
  const std::size_t n_macro = layout.sectors.size();
  const std::size_t n_cells = n_macro + picos.size();

  std::vector<Tier> tiers(n_cells, Tier::kPico);
  std::vector<double> rs(n_cells, params.pico_rs_power_dbm);
  std::fill_n(tiers.begin(), n_macro, Tier::kMacro);
  std::fill_n(rs.begin(), n_macro, params.macro_rs_power_dbm);

  GainMatrix gains(n_cells, users.size(), std::move(tiers), std::move(rs));
  constexpr double kRadToDeg = 180.0 / std::numbers::pi;

  for (std::size_t c = 0; c < n_cells; ++c) {
    const bool macro = c < n_macro;
    const Tier tier = macro ? Tier::kMacro : Tier::kPico;
    const Vec2 origin = macro ? layout.sites[layout.sectors[c].site] : picos[c - n_macro].pos;
    const double rx_gain = macro ? params.macro_rx_gain_db : params.pico_rx_gain_db;

    for (std::size_t u = 0; u < users.size(); ++u) {
      const Vec2 delta = wrap_delta(origin, users[u].pos, layout);
      const double shadow = sample_shadowing(tier, rng, params);
      const double pl = path_loss_db(tier, delta.norm(), params) +
                        (options.disable_shadowing ? 0.0 : shadow);
      double pattern = 0.0;
      if (macro) {
        const double az = std::atan2(delta.y, delta.x) * kRadToDeg;
        pattern = antenna_pattern_db(wrap_angle_deg(az - layout.sectors[c].boresight_deg), params);
      }
      gains.set_link(c, u, -pl + pattern + rx_gain - params.penetration_loss_db, pl);
    }
  }
  return gains;
}

double rsrp_dbm(const GainMatrix& gains, std::size_t cell, std::size_t user) {
  return gains.rs_power_dbm(cell) + gains.gain_db(cell, user);
}

}  // namespace hetnet
