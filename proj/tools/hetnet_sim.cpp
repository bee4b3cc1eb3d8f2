// SPDX-License-Identifier: Apache-2.0
//
// hetnet-sim: uplink heterogeneous-network cell selection campaigns.
//
//   hetnet-sim run --config s.cfg --drops 20 --seed 42 --out results/
//   hetnet-sim validate --config s.cfg
//   hetnet-sim oracle --instances 200

#include <fmt/format.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <optional>

#include "hetnet/campaign.hpp"
#include "hetnet/oracle.hpp"
#include "hetnet/scenario.hpp"

namespace {

struct Overrides {
  std::string config;
  std::optional<std::size_t> drops;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> strategies;
  std::optional<std::string> alphas;
  std::optional<std::size_t> picos_per_sector;
  std::optional<std::size_t> workers;
  std::optional<std::string> block_policy;
  std::optional<std::string> pl_basis;
};

hetnet::Scenario resolve(const Overrides& o) {
  hetnet::Scenario s = o.config.empty() ? hetnet::Scenario{} : hetnet::load_scenario(o.config);
  if (o.drops) s.drops = *o.drops;
  if (o.seed) s.seed = *o.seed;
  if (o.out) s.output_dir = *o.out;
  if (o.strategies) s.strategies = hetnet::parse_strategy_list(*o.strategies);
  if (o.alphas) s.alphas = hetnet::parse_alpha_list(*o.alphas);
  if (o.picos_per_sector) s.picos_per_sector = *o.picos_per_sector;
  if (o.workers) s.workers = *o.workers;
  if (o.pl_basis) s.pl_basis = hetnet::parse_pl_basis(*o.pl_basis);
  if (o.block_policy) s.block_policy = hetnet::parse_block_policy(*o.block_policy);
  for (const std::string& w : hetnet::validate(s)) fmt::print(stderr, "warning: {}\n", w);
  return s;
}

void add_scenario_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "Scenario file (INI sections)");
  cmd->add_option("--drops", o.drops, "Number of drops");
  cmd->add_option("--seed", o.seed, "Master seed");
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--strategies", o.strategies, "e.g. rsrp,pl,cre:6,interference");
  cmd->add_option("--alphas", o.alphas, "e.g. 0.4,0.6,0.8,1");
  cmd->add_option("--picos-per-sector", o.picos_per_sector, "Picocells per macro sector");
  cmd->add_option("--workers", o.workers, "Worker threads (0 = hardware concurrency)");
  cmd->add_option("--block-policy", o.block_policy, "packed or home_sector");
  cmd->add_option("--pl-basis", o.pl_basis, "Power-control loss: coupling or propagation");
}

int cmd_run(const Overrides& o) {
  const hetnet::Scenario s = resolve(o);
  const auto t0 = std::chrono::steady_clock::now();
  const hetnet::CampaignResult result = hetnet::run_campaign(s);
  hetnet::write_outputs(result, s, s.output_dir);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  fmt::print("{} drops, {} samples -> {} ({:.1f} s)\n", result.drops.size(),
             result.report.samples().size(), s.output_dir, secs);
  fmt::print("{}", hetnet::percentiles_csv(result));
  return 0;
}

int cmd_validate(const Overrides& o) {
  fmt::print("{}", hetnet::to_config(resolve(o)));
  return 0;
}

int cmd_oracle(std::size_t instances, std::uint64_t seed, std::size_t max_passes) {
  const hetnet::OracleSuiteReport r = hetnet::run_oracle_suite(instances, seed, 3, 5, max_passes);
  for (const std::string& f : r.failures) fmt::print("  {}\n", f);
  fmt::print("instances: {}\nconverged: {} ({:.1f}%)\nconverged and oracle-stable: {}\n",
             r.instances, r.converged, 100.0 * r.convergence_rate(), r.converged_in_stable_set);
  const bool ok = r.converged == r.converged_in_stable_set && r.convergence_rate() >= 0.95;
  fmt::print("{}\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uplink cell-selection simulator for heterogeneous cellular networks"};
  app.require_subcommand(1);

  Overrides run_opts;
  CLI::App* run = app.add_subcommand("run", "Run a Monte Carlo campaign and write CSV outputs");
  add_scenario_options(run, run_opts);

  Overrides validate_opts;
  CLI::App* val = app.add_subcommand("validate", "Print the resolved scenario without simulating");
  add_scenario_options(val, validate_opts);

  std::size_t instances = 200;
  std::uint64_t oracle_seed = 1;
  std::size_t max_passes = 20;
  CLI::App* oracle =
      app.add_subcommand("oracle", "Check best-response selection against brute-force enumeration");
  oracle->add_option("--instances", instances, "Random small instances");
  oracle->add_option("--seed", oracle_seed, "Seed");
  oracle->add_option("--max-passes", max_passes, "Best-response pass budget");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(run_opts);
    if (*val) return cmd_validate(validate_opts);
    if (*oracle) return cmd_oracle(instances, oracle_seed, max_passes);
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
  return 1;
}
