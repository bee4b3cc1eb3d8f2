// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hetnet/radio.hpp"
#include "hetnet/scheduler.hpp"
#include "hetnet/uplink_power.hpp"

namespace hetnet {

/// Fixed per-drop inputs shared by every strategy: gains, power control,
/// RB grid and receiver noise per RB (linear mW).
struct UplinkNetwork {
  const GainMatrix& gains;
  PowerConfig power;
  SchedulerConfig sched;
  double noise_per_rb_mw = 0.0;
  // Preferred RB block per user; empty packs every cell from RB 0.
  std::span<const std::size_t> preferred_block = {};

  std::size_t cells() const { return gains.cells(); }
  std::size_t users() const { return gains.users(); }
};

/// Loss between `user` and `cell` as seen by power control.
double control_loss_db(const UplinkNetwork& net, std::size_t cell, std::size_t user);

/// Open-loop power of `user` when served by `cell`.
UserPower power_toward(const UplinkNetwork& net, std::size_t cell, std::size_t user);

/// Everything derived from one assignment: RB allocation and each user's
/// open-loop transmit power toward its serving cell.
struct UplinkState {
  std::vector<std::size_t> serving;
  Allocation alloc;
  std::vector<UserPower> power;
  std::vector<double> per_rb_mw;  // linear per-RB transmit power

  static UplinkState build(const UplinkNetwork& net, std::vector<std::size_t> serving);
};

}  // namespace hetnet
