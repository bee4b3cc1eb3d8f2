// SPDX-License-Identifier: Apache-2.0
#include "hetnet/uplink_power.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "hetnet/errors.hpp"

namespace hetnet {

const char* pl_basis_name(PlBasis basis) {
  return basis == PlBasis::kCoupling ? "coupling" : "propagation";
}

PlBasis parse_pl_basis(const std::string& text) {
  if (text == "coupling") return PlBasis::kCoupling;
  if (text == "propagation") return PlBasis::kPropagation;
  throw ConfigError("unknown path-loss basis '" + text + "'");
}

bool validate_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ConfigError("path-loss compensation factor must lie in [0, 1]");
  }
  constexpr std::array<double, 8> kStandard = {0.0, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  return std::any_of(kStandard.begin(), kStandard.end(),
                     [&](double a) { return std::abs(a - alpha) < 1e-12; });
}

UserPower open_loop_power(const PowerConfig& cfg, double pl_db, std::size_t n_rb) {
  if (n_rb < 1) throw std::domain_error("a user needs at least one resource block");
  const double rb_db = 10.0 * std::log10(static_cast<double>(n_rb));
  const double requested = cfg.p0_dbm + rb_db + cfg.alpha * pl_db;
  UserPower up;
  up.capped = requested > cfg.pmax_dbm;
  up.total_dbm = up.capped ? cfg.pmax_dbm : requested;
  up.per_rb_dbm = up.total_dbm - rb_db;
  return up;
}

}  // namespace hetnet
