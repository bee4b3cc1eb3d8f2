// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hetnet/cell_selection.hpp"
#include "hetnet/metrics.hpp"
#include "hetnet/radio.hpp"
#include "hetnet/scheduler.hpp"
#include "hetnet/topology.hpp"
#include "hetnet/uplink_power.hpp"

namespace hetnet {

/// Full experiment description. Defaults reproduce the 2-picos-per-sector
/// baseline with 12 users per sector.
struct Scenario {
  double isd_m = 500.0;
  std::size_t picos_per_sector = 2;
  std::size_t users_per_sector = 12;
  PlacementRules placement;

  RadioParams radio;
  NoiseModel noise;
  SchedulerConfig sched;
  BlockPolicy block_policy = BlockPolicy::kHomeSector;

  double p0_dbm = -90.0;
  double pmax_dbm = 23.0;
  PlBasis pl_basis = PlBasis::kCoupling;
  std::vector<double> alphas = {0.4, 0.6, 0.8, 1.0};

  std::vector<StrategyConfig> strategies = default_strategies();
  std::size_t max_passes = 20;

  std::size_t drops = 20;
  std::uint64_t seed = 1;
  // 0 selects std::thread::hardware_concurrency().
  std::size_t workers = 0;
  std::string output_dir = "results";

  PowerConfig power(double alpha) const {
    return {p0_dbm, alpha, pmax_dbm, sched.rbs_per_user, pl_basis};
  }

  static std::vector<StrategyConfig> default_strategies();
};

/// Parses INI-style text ([section] headers, key = value lines, '#' or ';'
/// comments). Keys not listed in the resolved config are rejected.
Scenario parse_scenario(const std::string& text);

/// Throws ConfigError naming the path if it cannot be read.
Scenario load_scenario(const std::filesystem::path& path);

/// Every key with its effective value, in the same format parse_scenario
/// accepts.
std::string to_config(const Scenario& scenario);

/// Checks cross-field constraints; throws ConfigError on violations and
/// returns non-fatal warnings (e.g. non-standard alpha values).
std::vector<std::string> validate(const Scenario& scenario);

/// Comma-separated list helpers shared by the config reader and the CLI.
std::vector<StrategyConfig> parse_strategy_list(const std::string& text);
std::vector<double> parse_alpha_list(const std::string& text);

}  // namespace hetnet
