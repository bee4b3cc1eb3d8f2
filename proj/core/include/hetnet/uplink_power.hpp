// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>

namespace hetnet {

/// Loss fed to power control. kCoupling is the loss a UE estimates from
/// the downlink reference signal (p~ - RSRP, i.e. -g in dB, so antenna
/// pattern, receive gain and penetration are included). kPropagation is
/// distance path loss plus shadowing only.
enum class PlBasis { kCoupling, kPropagation };

const char* pl_basis_name(PlBasis basis);
PlBasis parse_pl_basis(const std::string& text);

/// Open-loop fractional power control settings. `p0_dbm` is the per-RB
/// target; `alpha` is the path-loss compensation factor.
struct PowerConfig {
  double p0_dbm = -90.0;
  double alpha = 0.8;
  double pmax_dbm = 23.0;
  std::size_t rbs_per_user = 4;
  PlBasis pl_basis = PlBasis::kCoupling;
};

struct UserPower {
  double total_dbm = 0.0;
  double per_rb_dbm = 0.0;
  bool capped = false;
};

/// Throws ConfigError if alpha is outside [0, 1]. Returns false (and the
/// caller may warn) when alpha is not one of the standard values
/// {0, 0.4, 0.5, ..., 1}.
bool validate_alpha(double alpha);

/// P = min(P_max, P0 + 10 log10(N_RB) + alpha * PL), split evenly over the
/// N_RB blocks. `pl_db` is the serving-link loss (see PlBasis).
/// Throws std::domain_error for n_rb < 1.
UserPower open_loop_power(const PowerConfig& cfg, double pl_db, std::size_t n_rb);
inline UserPower open_loop_power(const PowerConfig& cfg, double pl_db) {
  return open_loop_power(cfg, pl_db, cfg.rbs_per_user);
}

inline double per_rb_power_dbm(const UserPower& up) { return up.per_rb_dbm; }

}  // namespace hetnet
