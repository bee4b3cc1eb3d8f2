// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "hetnet/rng.hpp"
#include "hetnet/topology.hpp"

namespace hetnet {

enum class Tier { kMacro, kPico };

const char* tier_name(Tier tier);

/// Channel-model constants. Defaults are the heterogeneous-network baseline
/// values; every field is overridable from the scenario file.
struct RadioParams {
  double macro_pl_intercept_db = 128.1;
  double macro_pl_slope_db = 37.6;
  double pico_pl_intercept_db = 140.7;
  double pico_pl_slope_db = 36.7;
  double macro_shadowing_db = 8.0;
  double pico_shadowing_db = 10.0;
  double macro_rx_gain_db = 15.0;
  double pico_rx_gain_db = 5.0;
  double penetration_loss_db = 20.0;
  double theta_3db_deg = 70.0;
  double max_attenuation_db = 20.0;
  double macro_rs_power_dbm = 46.0;
  double pico_rs_power_dbm = 30.0;
};

/// Distance-dependent path loss; `d_m` is in meters and the model is
/// evaluated in kilometers. Throws std::domain_error for d_m <= 0.
double path_loss_db(Tier tier, double d_m, const RadioParams& params = {});

/// Horizontal sector pattern, -min(12 (theta/theta_3dB)^2, A_m).
double antenna_pattern_db(double theta_deg, const RadioParams& params = {});

/// Zero-mean log-normal shadowing draw in dB.
double sample_shadowing(double sigma_db, Rng& rng);
double sample_shadowing(Tier tier, Rng& rng, const RadioParams& params = {});

/// Composite (cell, user) coupling. Cells are ordered macro sectors first
/// (cell index == sector index), then picos in placement order.
///
/// `gain_db` is the full link gain used for both downlink RSRP and uplink
/// signal/interference (one storage, reciprocal channel). `path_loss_db`
/// is the distance path loss plus shadowing, the loss power control
/// compensates under PlBasis::kPropagation.
class GainMatrix {
 public:
  GainMatrix() = default;
  GainMatrix(std::size_t cells, std::size_t users, std::vector<Tier> tiers,
             std::vector<double> rs_power_dbm);

  std::size_t cells() const { return cells_; }
  std::size_t users() const { return users_; }

  double gain_db(std::size_t cell, std::size_t user) const { return gain_db_[idx(cell, user)]; }
  // Linear gain, cached alongside the dB value.
  double gain(std::size_t cell, std::size_t user) const { return gain_lin_[idx(cell, user)]; }
  double path_loss_db(std::size_t cell, std::size_t user) const {
    return path_loss_db_[idx(cell, user)];
  }

  Tier tier(std::size_t cell) const { return tiers_.at(cell); }
  double rs_power_dbm(std::size_t cell) const { return rs_power_dbm_.at(cell); }
  std::span<const Tier> tiers() const { return tiers_; }

  // Row of linear gains from every cell to `user`.
  std::span<const double> gains_to_user(std::size_t user) const {
    return {gain_lin_.data() + user * cells_, cells_};
  }

  void set_link(std::size_t cell, std::size_t user, double gain_db, double path_loss_db);

 private:
  std::size_t idx(std::size_t cell, std::size_t user) const {
    if (cell >= cells_ || user >= users_) throw std::out_of_range("gain matrix index");
    return user * cells_ + cell;
  }

  std::size_t cells_ = 0;
  std::size_t users_ = 0;
  std::vector<Tier> tiers_;
  std::vector<double> rs_power_dbm_;
  // user-major storage: element (cell, user) at user * cells + cell
  std::vector<double> gain_db_;
  std::vector<double> gain_lin_;
  std::vector<double> path_loss_db_;
};

struct GainOptions {
  // Force every shadowing draw to zero (deterministic, geometry-only gains).
  bool disable_shadowing = false;
};

GainMatrix compute_gain_matrix(const Layout& layout, const std::vector<Pico>& picos,
                               const std::vector<User>& users, Rng& rng,
                               const RadioParams& params = {}, const GainOptions& options = {});

/// Downlink reference-signal received power, rs_power + gain.
double rsrp_dbm(const GainMatrix& gains, std::size_t cell, std::size_t user);

}  // namespace hetnet
