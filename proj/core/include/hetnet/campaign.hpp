// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "hetnet/metrics.hpp"
#include "hetnet/radio.hpp"
#include "hetnet/scenario.hpp"
#include "hetnet/topology.hpp"

namespace hetnet {

/// Geometry and channel realization of one drop. Every strategy and alpha
/// evaluated on the drop shares it.
struct Drop {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  Layout layout;
  std::vector<Pico> picos;
  std::vector<User> users;
  GainMatrix gains;
  // Per-user RB block under BlockPolicy::kHomeSector, empty otherwise.
  std::vector<std::size_t> preferred_block;
};

/// Position of each user among the users of its home sector, modulo the
/// blocks per subframe.
std::vector<std::size_t> home_sector_blocks(const std::vector<User>& users,
                                            const SchedulerConfig& sched);

std::uint64_t drop_seed(std::uint64_t master_seed, std::size_t drop_index);

/// Builds topology and gains from the child stream of (seed, drop_index).
Drop make_drop(const Scenario& scenario, std::size_t drop_index);

struct SeriesSummary {
  std::string strategy;
  double alpha = 0.0;
  std::size_t macro_users = 0;
  std::size_t pico_users = 0;
  bool converged = true;
  std::size_t passes_used = 0;
  double max_total_power_dbm = 0.0;
};

struct DropResult {
  std::size_t drop = 0;
  std::vector<SeriesSummary> series;  // strategy-major, then alpha
  std::vector<SinrSample> samples;    // same order, then user
};

/// Runs every (strategy, alpha) pair on one drop. Errors are rethrown as
/// std::runtime_error prefixed with the drop index.
DropResult run_drop(const Scenario& scenario, std::size_t drop_index);

/// Evaluates every (strategy, alpha) pair on an already built drop.
DropResult evaluate_drop(const Scenario& scenario, const Drop& drop);

class CampaignError : public std::runtime_error {
 public:
  CampaignError(const std::string& what, std::vector<std::string> drop_errors)
      : std::runtime_error(what), drop_errors_(std::move(drop_errors)) {}
  const std::vector<std::string>& drop_errors() const { return drop_errors_; }

 private:
  std::vector<std::string> drop_errors_;
};

struct CampaignResult {
  std::vector<DropResult> drops;  // ordered by drop index
  SinrReport report;
};

/// Executes scenario.drops drops on `workers` threads (scenario.workers
/// when 0 is passed, hardware concurrency when both are 0). The result is
/// independent of the worker count.
CampaignResult run_campaign(const Scenario& scenario, std::size_t workers = 0);

/// Writes samples.csv, percentiles.csv, cdf.csv, summary.txt and
/// scenario.resolved.cfg into `dir` (created if missing).
void write_outputs(const CampaignResult& result, const Scenario& scenario,
                   const std::filesystem::path& dir);

std::string samples_csv(const CampaignResult& result);
std::string percentiles_csv(const CampaignResult& result);
std::string cdf_csv(const CampaignResult& result);
std::string summary_text(const CampaignResult& result);

}  // namespace hetnet
