// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hetnet/cell_selection.hpp"
#include "hetnet/radio.hpp"
#include "hetnet/rng.hpp"
#include "hetnet/uplink_state.hpp"

namespace hetnet {

inline constexpr std::size_t kOracleMaxCells = 4;
inline constexpr std::size_t kOracleMaxUsers = 6;

struct OracleResult {
  // Every unilaterally stable assignment, in lexicographic order.
  std::vector<std::vector<std::size_t>> stable;
  std::vector<std::size_t> min_total;
  double min_total_metric = 0.0;
  std::size_t enumerated = 0;

  bool contains(const std::vector<std::size_t>& serving) const;
};

/// Enumerates all cells^users assignments, rebuilding powers, grants and
/// metrics from scratch for each. Throws std::length_error past the
/// enumeration bound (4 cells, 6 users).
OracleResult brute_force_oracle(const UplinkNetwork& net);

/// Small random uplink instance (own gain matrix plus link settings).
struct SmallInstance {
  GainMatrix gains;
  PowerConfig power;
  SchedulerConfig sched;
  double noise_per_rb_mw = 0.0;

  UplinkNetwork network() const { return {gains, power, sched, noise_per_rb_mw}; }
};

/// Cell 0 is a macro sector, the others are macro or pico at random. Users
/// sit at random distances with tier shadowing; with `single_block` the
/// carrier holds exactly one RB block so every cell serves one user per
/// subframe.
SmallInstance random_small_instance(Rng& rng, std::size_t max_cells, std::size_t max_users,
                                    bool single_block = true);

struct OracleSuiteReport {
  std::size_t instances = 0;
  std::size_t converged = 0;
  std::size_t converged_in_stable_set = 0;
  std::vector<std::string> failures;

  double convergence_rate() const {
    return instances == 0 ? 0.0 : static_cast<double>(converged) / static_cast<double>(instances);
  }
};

/// Runs the best-response procedure against the brute-force oracle on
/// `instances` random small networks.
OracleSuiteReport run_oracle_suite(std::size_t instances, std::uint64_t seed,
                                   std::size_t max_cells = 3, std::size_t max_users = 5,
                                   std::size_t max_passes = 20);

}  // namespace hetnet
