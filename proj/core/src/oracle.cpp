// SPDX-License-Identifier: Apache-2.0
#include "hetnet/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hetnet/units.hpp"

namespace hetnet {

bool OracleResult::contains(const std::vector<std::size_t>& serving) const {
  return std::binary_search(stable.begin(), stable.end(), serving);
}

OracleResult brute_force_oracle(const UplinkNetwork& net) {
  const std::size_t cells = net.cells();
  const std::size_t users = net.users();
  if (cells == 0 || cells > kOracleMaxCells || users > kOracleMaxUsers) {
    throw std::length_error("instance exceeds the brute-force enumeration bound");
  }

  OracleResult result;
  result.min_total_metric = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> serving(users, 0);

  // Odometer over cells^users; the first digit varies slowest so the
  // stable list comes out lexicographically sorted.
  while (true) {
    const UplinkState state = UplinkState::build(net, serving);
    bool stable = true;
    double total = 0.0;
    for (std::size_t u = 0; u < users; ++u) {
      const std::vector<double> metric = interference_metrics(net, state, u);
      const double own = metric[serving[u]];
      total += own;
      for (std::size_t c = 0; c < cells; ++c) {
        if (metric[c] < own * (1.0 - kImprovementThreshold)) stable = false;
      }
    }
    ++result.enumerated;
    if (stable) result.stable.push_back(serving);
    if (total < result.min_total_metric) {
      result.min_total_metric = total;
      result.min_total = serving;
    }

    std::size_t digit = users;
    while (digit > 0) {
      --digit;
      if (++serving[digit] < cells) break;
      serving[digit] = 0;
      if (digit == 0) return result;
    }
    if (users == 0) return result;
  }
}

SmallInstance random_small_instance(Rng& rng, std::size_t max_cells, std::size_t max_users,
                                    bool single_block) {
  const RadioParams radio;
  std::uniform_int_distribution<std::size_t> n_cells_dist(1, std::max<std::size_t>(1, max_cells));
  std::uniform_int_distribution<std::size_t> n_users_dist(1, std::max<std::size_t>(1, max_users));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n_cells = n_cells_dist(rng);
  const std::size_t n_users = n_users_dist(rng);

  std::vector<Tier> tiers(n_cells, Tier::kMacro);
  std::vector<double> rs(n_cells, radio.macro_rs_power_dbm);
  for (std::size_t c = 1; c < n_cells; ++c) {
    if (unit(rng) < 0.5) {
      tiers[c] = Tier::kPico;
      rs[c] = radio.pico_rs_power_dbm;
    }
  }

  SmallInstance inst{GainMatrix(n_cells, n_users, tiers, rs), {}, {}, 0.0};
  for (std::size_t c = 0; c < n_cells; ++c) {
    const bool macro = tiers[c] == Tier::kMacro;
    for (std::size_t u = 0; u < n_users; ++u) {
      const double d = 30.0 + 370.0 * unit(rng);
      const double pl = path_loss_db(tiers[c], d, radio) + sample_shadowing(tiers[c], rng, radio);
      const double rx = macro ? radio.macro_rx_gain_db : radio.pico_rx_gain_db;
      inst.gains.set_link(c, u, -pl + rx - radio.penetration_loss_db, pl);
    }
  }

  constexpr std::array<double, 4> kAlphas = {0.4, 0.6, 0.8, 1.0};
  inst.power.p0_dbm = -90.0;
  inst.power.alpha = kAlphas[std::uniform_int_distribution<std::size_t>(0, 3)(rng)];
  inst.sched = single_block ? SchedulerConfig{4, 4} : SchedulerConfig{48, 4};
  inst.power.rbs_per_user = inst.sched.rbs_per_user;
  inst.noise_per_rb_mw = dbm_to_mw(-174.0 + 5.0 + 10.0 * std::log10(180000.0));
  return inst;
}

OracleSuiteReport run_oracle_suite(std::size_t instances, std::uint64_t seed,
                                   std::size_t max_cells, std::size_t max_users,
                                   std::size_t max_passes) {
  OracleSuiteReport report;
  StrategyConfig cfg;
  cfg.kind = StrategyKind::kInterference;
  cfg.max_passes = max_passes;
  for (std::size_t i = 0; i < instances; ++i) {
    Rng rng(derive_seed(seed, i));
    const SmallInstance inst = random_small_instance(rng, max_cells, max_users);
    const UplinkNetwork net = inst.network();
    const InterferenceSelection sel = select_interference_based(net, cfg);
    const OracleResult oracle = brute_force_oracle(net);
    ++report.instances;

    std::ostringstream where;
    where << "instance " << i << " (" << net.cells() << " cells, " << net.users() << " users)";
    if (!sel.assignment.converged) {
      report.failures.push_back(where.str() + ": no convergence within " +
                                std::to_string(max_passes) + " passes");
      continue;
    }
    ++report.converged;
    if (oracle.contains(sel.assignment.serving)) {
      ++report.converged_in_stable_set;
    } else {
      report.failures.push_back(where.str() + ": converged assignment is not oracle-stable");
    }
  }
  return report;
}

}  // namespace hetnet
