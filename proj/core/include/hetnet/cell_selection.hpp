// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hetnet/radio.hpp"
#include "hetnet/uplink_state.hpp"

namespace hetnet {

enum class StrategyKind { kRsrp, kPl, kCre, kInterference };

struct StrategyConfig {
  StrategyKind kind = StrategyKind::kRsrp;
  // Offset added to pico RSRP under range expansion. Macro bias is always 0.
  double cre_pico_bias_db = 0.0;
  std::size_t max_passes = 20;
  // Candidate cells; empty means every cell.
  std::vector<std::size_t> search_space;

  /// "rsrp", "pl", "cre6", "interference" style identifier.
  std::string label() const;
  /// Parses "rsrp", "pl", "cre:<bias>" / "cre<bias>" or "interference".
  static StrategyConfig parse(const std::string& text);
};

struct Assignment {
  std::vector<std::size_t> serving;
  bool converged = true;
  std::size_t passes_used = 0;
};

/// Relative margin a candidate must beat the incumbent metric by.
inline constexpr double kImprovementThreshold = 1e-9;

Assignment select_rsrp(const GainMatrix& gains, std::span<const std::size_t> search_space = {});
Assignment select_pl(const GainMatrix& gains, std::span<const std::size_t> search_space = {});
Assignment select_cre(const GainMatrix& gains, const StrategyConfig& cfg);

/// Sum over the user's RBs of (interference + noise at `cell`) / g(user,
/// cell), in linear units. Interference is every other user transmitting on
/// the same RB in the same subframe, i.e. the user is assumed to keep its
/// RB indices at the candidate. Evaluated by direct summation.
double interference_metric(const UplinkNetwork& net, const UplinkState& state, std::size_t user,
                           std::size_t cell);

/// interference_metric for every cell at once.
std::vector<double> interference_metrics(const UplinkNetwork& net, const UplinkState& state,
                                         std::size_t user);

/// Interference-derived range-expansion factor (linear) of candidate over
/// serving: (p_C / p_S) * I'_C / I_S, where I'_C excludes the user's own
/// contribution. Diagnostic only.
double adaptive_bias(const UplinkNetwork& net, const UplinkState& state, std::size_t user,
                     std::size_t serving, std::size_t candidate);

/// Cell strictly better than the incumbent for `user` (by the relative
/// threshold), or nullopt if the user is stable.
std::optional<std::size_t> improving_deviation(const UplinkNetwork& net, const UplinkState& state,
                                               std::size_t user,
                                               std::span<const std::size_t> search_space = {});

bool is_stable(const UplinkNetwork& net, const UplinkState& state,
               std::span<const std::size_t> search_space = {});

struct Move {
  std::size_t pass = 0;
  std::size_t user = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  double metric_before = 0.0;
  double metric_after = 0.0;
};

struct InterferenceSelection {
  Assignment assignment;
  std::vector<Move> moves;
};

/// Asynchronous best response on the interference metric. Starts from
/// `initial` (RSRP association when empty); users are visited in index
/// order and each committed move re-derives the mover's power and the RB
/// grants of the two cells involved. Stops after a pass without moves or
/// after cfg.max_passes passes.
InterferenceSelection select_interference_based(const UplinkNetwork& net,
                                                const StrategyConfig& cfg,
                                                std::span<const std::size_t> initial = {});

/// Dispatches on cfg.kind.
Assignment select(const UplinkNetwork& net, const StrategyConfig& cfg);

}  // namespace hetnet
