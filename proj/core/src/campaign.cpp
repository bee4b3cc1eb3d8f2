// SPDX-License-Identifier: Apache-2.0
#include "hetnet/campaign.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

#include "hetnet/cell_selection.hpp"
#include "hetnet/errors.hpp"
#include "hetnet/rng.hpp"
#include "hetnet/units.hpp"
#include "hetnet/uplink_state.hpp"

namespace hetnet {

std::uint64_t drop_seed(std::uint64_t master_seed, std::size_t drop_index) {
  return derive_seed(master_seed, drop_index);
}

std::vector<std::size_t> home_sector_blocks(const std::vector<User>& users,
                                            const SchedulerConfig& sched) {
  const std::size_t per_sf = sched.users_per_subframe();
  if (per_sf == 0) throw ConfigError("rbs_per_user exceeds total_rbs");
  std::map<std::size_t, std::size_t> seen;
  std::vector<std::size_t> out;
  out.reserve(users.size());
  for (const User& u : users) out.push_back(seen[u.home_sector]++ % per_sf);
  return out;
}

Drop make_drop(const Scenario& scenario, std::size_t drop_index) {
  Drop drop;
  drop.index = drop_index;
  drop.seed = drop_seed(scenario.seed, drop_index);
  drop.layout = build_layout(scenario.isd_m);

  Rng pico_rng = make_rng(drop.seed, Stream::kPicos);
  Rng user_rng = make_rng(drop.seed, Stream::kUsers);
  Rng shadow_rng = make_rng(drop.seed, Stream::kShadowing);

  drop.picos = place_picos(drop.layout, scenario.picos_per_sector, pico_rng, scenario.placement);
  drop.users = place_users(drop.layout, drop.picos, scenario.users_per_sector, user_rng,
                           scenario.placement);
  drop.gains = compute_gain_matrix(drop.layout, drop.picos, drop.users, shadow_rng, scenario.radio);
  if (scenario.block_policy == BlockPolicy::kHomeSector) {
    drop.preferred_block = home_sector_blocks(drop.users, scenario.sched);
  }
  return drop;
}

DropResult evaluate_drop(const Scenario& scenario, const Drop& drop) {
  DropResult result;
  result.drop = drop.index;
  const double noise_mw = scenario.noise.per_rb_noise_mw();
  const std::size_t n_users = drop.gains.users();

  for (StrategyConfig strategy : scenario.strategies) {
    strategy.max_passes = scenario.max_passes;
    const std::string label = strategy.label();
    // Only the interference-based association depends on transmit powers.
    std::optional<Assignment> fixed;
    if (strategy.kind != StrategyKind::kInterference) {
      fixed = select({drop.gains, scenario.power(scenario.alphas.front()), scenario.sched, noise_mw,
                      drop.preferred_block},
                     strategy);
    }

    for (double alpha : scenario.alphas) {
      const UplinkNetwork net{drop.gains, scenario.power(alpha), scenario.sched, noise_mw,
                              drop.preferred_block};
      const Assignment assignment =
          fixed ? *fixed : select_interference_based(net, strategy).assignment;
      const UplinkState state = UplinkState::build(net, assignment.serving);

      SeriesSummary summary;
      summary.strategy = label;
      summary.alpha = alpha;
      summary.converged = assignment.converged;
      summary.passes_used = assignment.passes_used;
      summary.max_total_power_dbm = -std::numeric_limits<double>::infinity();
      for (std::size_t u = 0; u < n_users; ++u) {
        const std::size_t cell = state.serving[u];
        const Tier tier = drop.gains.tier(cell);
        (tier == Tier::kMacro ? summary.macro_users : summary.pico_users) += 1;
        summary.max_total_power_dbm =
            std::max(summary.max_total_power_dbm, state.power[u].total_dbm);
        result.samples.push_back({drop.index, u, cell, tier, label, alpha, scenario.p0_dbm,
                                  linear_to_db(user_wideband_sinr(net, state, u))});
      }
      result.series.push_back(summary);
    }
  }
  return result;
}

DropResult run_drop(const Scenario& scenario, std::size_t drop_index) {
  try {
    return evaluate_drop(scenario, make_drop(scenario, drop_index));
  } catch (const std::exception& e) {
    throw std::runtime_error(fmt::format("drop {}: {}", drop_index, e.what()));
  }
}

CampaignResult run_campaign(const Scenario& scenario, std::size_t workers) {
  validate(scenario);
  if (workers == 0) workers = scenario.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, scenario.drops);

  std::vector<std::optional<DropResult>> slots(scenario.drops);
  std::vector<std::string> errors(scenario.drops);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < scenario.drops; i = next.fetch_add(1)) {
      try {
        slots[i] = run_drop(scenario, i);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<std::string> failed;
  for (const std::string& e : errors) {
    if (!e.empty()) failed.push_back(e);
  }
  if (!failed.empty()) {
    throw CampaignError(fmt::format("{} of {} drops failed; first: {}", failed.size(),
                                    scenario.drops, failed.front()),
                        failed);
  }

  CampaignResult result;
  result.drops.reserve(scenario.drops);
  for (auto& slot : slots) result.drops.push_back(std::move(*slot));
  for (const DropResult& d : result.drops) {
    for (const SinrSample& s : d.samples) result.report.add(s);
  }
  return result;
}

std::string samples_csv(const CampaignResult& result) {
  std::string out = "drop,user,strategy,alpha,serving_cell,tier,sinr_db\n";
  for (const SinrSample& s : result.report.samples()) {
    out += fmt::format("{},{},{},{},{},{},{:.6f}\n", s.drop, s.user, s.strategy, s.alpha,
                       s.serving_cell, tier_name(s.tier), s.sinr_db);
  }
  return out;
}

std::string percentiles_csv(const CampaignResult& result) {
  std::string out = "strategy,alpha,p5_db,p50_db,p90_db,n\n";
  for (const SeriesKey& key : result.report.series()) {
    const Percentiles p = result.report.percentiles(key);
    out += fmt::format("{},{},{:.6f},{:.6f},{:.6f},{}\n", key.first, key.second, p.p5, p.p50,
                       p.p90, result.report.count(key));
  }
  return out;
}

std::string cdf_csv(const CampaignResult& result) {
  std::string out = "strategy,alpha,sinr_db,fraction\n";
  for (const CdfRow& r : export_cdf(result.report)) {
    out += fmt::format("{},{},{:.6f},{:.6f}\n", r.strategy, r.alpha, r.sinr_db, r.fraction);
  }
  return out;
}

std::string summary_text(const CampaignResult& result) {
  struct Agg {
    std::size_t macro = 0;
    std::size_t pico = 0;
    std::size_t drops = 0;
    std::size_t converged = 0;
    double max_power = -std::numeric_limits<double>::infinity();
    std::map<std::size_t, std::size_t> passes;
  };
  std::vector<SeriesKey> order;
  std::map<SeriesKey, Agg> agg;
  for (const DropResult& d : result.drops) {
    for (const SeriesSummary& s : d.series) {
      const SeriesKey key{s.strategy, s.alpha};
      auto [it, inserted] = agg.try_emplace(key);
      if (inserted) order.push_back(key);
      Agg& a = it->second;
      a.macro += s.macro_users;
      a.pico += s.pico_users;
      a.drops += 1;
      a.converged += s.converged ? 1 : 0;
      a.max_power = std::max(a.max_power, s.max_total_power_dbm);
      a.passes[s.passes_used] += 1;
    }
  }

  std::string out = fmt::format("drops: {}\n", result.drops.size());
  for (const SeriesKey& key : order) {
    const Agg& a = agg.at(key);
    const Percentiles p = result.report.percentiles(key);
    const double total = static_cast<double>(a.macro + a.pico);
    out += fmt::format("\n[{} alpha={}]\n", key.first, key.second);
    out += fmt::format("  attached macro: {} ({:.2f}%)\n", a.macro, 100.0 * a.macro / total);
    out += fmt::format("  attached pico: {} ({:.2f}%)\n", a.pico, 100.0 * a.pico / total);
    out += fmt::format("  converged drops: {}/{} ({:.2f}%)\n", a.converged, a.drops,
                       100.0 * a.converged / a.drops);
    out += "  passes histogram:";
    for (const auto& [passes, count] : a.passes) out += fmt::format(" {}:{}", passes, count);
    out += "\n";
    out += fmt::format("  max UE power: {:.2f} dBm\n", a.max_power);
    out += fmt::format("  sinr p5/p50/p90: {:.2f} / {:.2f} / {:.2f} dB\n", p.p5, p.p50, p.p90);
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
}

}  // namespace

void write_outputs(const CampaignResult& result, const Scenario& scenario,
                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_file(dir / "samples.csv", samples_csv(result));
  write_file(dir / "percentiles.csv", percentiles_csv(result));
  write_file(dir / "cdf.csv", cdf_csv(result));
  write_file(dir / "summary.txt", summary_text(result));
  write_file(dir / "scenario.resolved.cfg", to_config(scenario));
}

}  // namespace hetnet
