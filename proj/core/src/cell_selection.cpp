// SPDX-License-Identifier: Apache-2.0
#include "hetnet/cell_selection.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

#include "hetnet/errors.hpp"
#include "hetnet/units.hpp"

namespace hetnet {
namespace {

std::vector<std::size_t> resolve_space(std::span<const std::size_t> space, std::size_t cells) {
  if (space.empty()) {
    std::vector<std::size_t> all(cells);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return all;
  }
  std::vector<std::size_t> out(space.begin(), space.end());
  for (std::size_t c : out) {
    if (c >= cells) throw std::out_of_range("search space names a cell that does not exist");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// argmax of score(cell, user) per user; first (lowest-index) maximum wins.
template <typename Score>
Assignment argmax_assignment(const GainMatrix& gains, std::span<const std::size_t> space,
                             Score score) {
  const std::vector<std::size_t> cells = resolve_space(space, gains.cells());
  if (cells.empty()) throw ConfigError("empty cell search space");
  Assignment a;
  a.serving.resize(gains.users());
  for (std::size_t u = 0; u < gains.users(); ++u) {
    std::size_t best = cells.front();
    double best_score = score(best, u);
    for (std::size_t c : cells) {
      const double s = score(c, u);
      if (s > best_score) {
        best = c;
        best_score = s;
      }
    }
    a.serving[u] = best;
  }
  return a;
}

// Uplink interference-plus-noise at `cell` summed over the user's RBs,
// excluding the user itself.
double interference_at(const UplinkNetwork& net, const UplinkState& state, std::size_t user,
                       std::size_t cell) {
  const Slot& slot = state.alloc.slot(user);
  double total = 0.0;
  for (std::size_t rb = slot.rbs.first_rb; rb < slot.rbs.first_rb + slot.rbs.n_rbs; ++rb) {
    double sum = net.noise_per_rb_mw;
    for (std::size_t u : cochannel_interferers(state.alloc, user, rb)) {
      sum += state.per_rb_mw[u] * net.gains.gain(cell, u);
    }
    total += sum;
  }
  return total;
}

}  // namespace

std::string StrategyConfig::label() const {
  switch (kind) {
    case StrategyKind::kRsrp:
      return "rsrp";
    case StrategyKind::kPl:
      return "pl";
    case StrategyKind::kCre: {
      char buf[32];
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, cre_pico_bias_db);
      return "cre" + std::string(buf, ec == std::errc{} ? end : buf);
    }
    case StrategyKind::kInterference:
      return "interference";
  }
  return "unknown";
}

StrategyConfig StrategyConfig::parse(const std::string& text) {
  StrategyConfig cfg;
  if (text == "rsrp") {
    cfg.kind = StrategyKind::kRsrp;
  } else if (text == "pl") {
    cfg.kind = StrategyKind::kPl;
  } else if (text == "interference") {
    cfg.kind = StrategyKind::kInterference;
  } else if (text.starts_with("cre")) {
    std::string_view rest = std::string_view(text).substr(3);
    if (!rest.empty() && rest.front() == ':') rest.remove_prefix(1);
    double bias = 0.0;
    const auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), bias);
    if (rest.empty() || ec != std::errc{} || end != rest.data() + rest.size()) {
      throw ConfigError("invalid range-expansion bias in strategy '" + text + "'");
    }
    cfg.kind = StrategyKind::kCre;
    cfg.cre_pico_bias_db = bias;
  } else {
    throw ConfigError("unknown strategy '" + text + "'");
  }
  return cfg;
}

Assignment select_rsrp(const GainMatrix& gains, std::span<const std::size_t> search_space) {
  return argmax_assignment(gains, search_space,
                           [&](std::size_t c, std::size_t u) { return rsrp_dbm(gains, c, u); });
}

Assignment select_pl(const GainMatrix& gains, std::span<const std::size_t> search_space) {
  return argmax_assignment(gains, search_space,
                           [&](std::size_t c, std::size_t u) { return gains.gain_db(c, u); });
}

Assignment select_cre(const GainMatrix& gains, const StrategyConfig& cfg) {
  return argmax_assignment(gains, cfg.search_space, [&](std::size_t c, std::size_t u) {
    const double bias = gains.tier(c) == Tier::kPico ? cfg.cre_pico_bias_db : 0.0;
    return rsrp_dbm(gains, c, u) + bias;
  });
}

double interference_metric(const UplinkNetwork& net, const UplinkState& state, std::size_t user,
                           std::size_t cell) {
  return interference_at(net, state, user, cell) / net.gains.gain(cell, user);
}

std::vector<double> interference_metrics(const UplinkNetwork& net, const UplinkState& state,
                                         std::size_t user) {
  const Slot& slot = state.alloc.slot(user);
  std::vector<double> metric(net.cells(), 0.0);
  for (std::size_t rb = slot.rbs.first_rb; rb < slot.rbs.first_rb + slot.rbs.n_rbs; ++rb) {
    const std::vector<std::size_t> interferers = cochannel_interferers(state.alloc, user, rb);
    for (std::size_t c = 0; c < net.cells(); ++c) {
      double sum = net.noise_per_rb_mw;
      for (std::size_t u : interferers) sum += state.per_rb_mw[u] * net.gains.gain(c, u);
      metric[c] += sum;
    }
  }
  for (std::size_t c = 0; c < net.cells(); ++c) metric[c] /= net.gains.gain(c, user);
  return metric;
}

double adaptive_bias(const UplinkNetwork& net, const UplinkState& state, std::size_t user,
                     std::size_t serving, std::size_t candidate) {
  const double rs_ratio =
      db_to_linear(net.gains.rs_power_dbm(candidate) - net.gains.rs_power_dbm(serving));
  return rs_ratio * interference_at(net, state, user, candidate) /
         interference_at(net, state, user, serving);
}

std::optional<std::size_t> improving_deviation(const UplinkNetwork& net, const UplinkState& state,
                                               std::size_t user,
                                               std::span<const std::size_t> search_space) {
  const std::vector<double> metric = interference_metrics(net, state, user);
  const double incumbent = metric[state.serving[user]];
  std::optional<std::size_t> best;
  double best_metric = incumbent * (1.0 - kImprovementThreshold);
  for (std::size_t c : resolve_space(search_space, net.cells())) {
    if (metric[c] < best_metric) {
      best = c;
      best_metric = metric[c];
    }
  }
  return best;
}

bool is_stable(const UplinkNetwork& net, const UplinkState& state,
               std::span<const std::size_t> search_space) {
  for (std::size_t u = 0; u < net.users(); ++u) {
    if (improving_deviation(net, state, u, search_space)) return false;
  }
  return true;
}

namespace {

// Incremental best-response engine. Users of different cells collide
// exactly when they hold the same key (subframe and RB block).
// received_[key][cell] caches the total power those users deliver to each
// cell.
class BestResponse {
 public:
  BestResponse(const UplinkNetwork& net, std::vector<std::size_t> serving)
      : net_(net), serving_(std::move(serving)), members_(net.cells()),
        key_(serving_.size()), p_mw_(serving_.size()) {
    for (std::size_t u = 0; u < serving_.size(); ++u) {
      members_.at(serving_[u]).push_back(u);
      p_mw_[u] = power_toward(u, serving_[u]);
    }
    for (std::size_t c = 0; c < members_.size(); ++c) assign_keys(c);
    rebuild();
  }

  // Recompute the cache from scratch so rounding from incremental updates
  // never accumulates across passes.
  void rebuild() {
    for (auto& row : received_) std::fill(row.begin(), row.end(), 0.0);
    for (std::size_t u = 0; u < serving_.size(); ++u) add(u, +1.0);
  }

  double metric(std::size_t user, std::size_t cell) const {
    const double g = net_.gains.gain(cell, user);
    const double others = received_[key_[user]][cell] - p_mw_[user] * g;
    return static_cast<double>(net_.sched.rbs_per_user) *
           (std::max(others, 0.0) + net_.noise_per_rb_mw) / g;
  }

  void move(std::size_t user, std::size_t to) {
    const std::size_t from = serving_[user];
    auto& src = members_[from];
    auto& dst = members_[to];
    for (std::size_t u : src) add(u, -1.0);
    for (std::size_t u : dst) add(u, -1.0);

    src.erase(std::lower_bound(src.begin(), src.end(), user));
    dst.insert(std::lower_bound(dst.begin(), dst.end(), user), user);
    serving_[user] = to;
    p_mw_[user] = power_toward(user, to);
    assign_keys(from);
    assign_keys(to);

    for (std::size_t u : src) add(u, +1.0);
    for (std::size_t u : dst) add(u, +1.0);
  }

  std::size_t serving(std::size_t user) const { return serving_[user]; }
  std::vector<std::size_t> take_serving() && { return std::move(serving_); }

 private:
  double power_toward(std::size_t user, std::size_t cell) const {
    return dbm_to_mw(hetnet::power_toward(net_, cell, user).per_rb_dbm);
  }

  void assign_keys(std::size_t cell) {
    const std::size_t per_sf = net_.sched.users_per_subframe();
    const std::vector<Slot> slots =
        schedule_cell(net_.sched, cell, members_[cell], net_.preferred_block);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      key_[members_[cell][i]] =
          slots[i].subframe * per_sf + slots[i].rbs.first_rb / net_.sched.rbs_per_user;
    }
  }

  void add(std::size_t user, double sign) {
    const std::size_t r = key_[user];
    if (r >= received_.size()) received_.resize(r + 1, std::vector<double>(net_.cells(), 0.0));
    const std::span<const double> g = net_.gains.gains_to_user(user);
    const double p = sign * p_mw_[user];
    std::vector<double>& row = received_[r];
    for (std::size_t c = 0; c < row.size(); ++c) row[c] += p * g[c];
  }

  const UplinkNetwork& net_;
  std::vector<std::size_t> serving_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<std::size_t> key_;
  std::vector<double> p_mw_;
  std::vector<std::vector<double>> received_;
};

}  // namespace

InterferenceSelection select_interference_based(const UplinkNetwork& net,
                                                const StrategyConfig& cfg,
                                                std::span<const std::size_t> initial) {
  if (net.sched.users_per_subframe() == 0) throw ConfigError("rbs_per_user exceeds total_rbs");
  std::vector<std::size_t> start;
  if (initial.empty()) {
    start = select_rsrp(net.gains, cfg.search_space).serving;
  } else {
    if (initial.size() != net.users()) throw std::invalid_argument("initial assignment size");
    start.assign(initial.begin(), initial.end());
  }
  const std::vector<std::size_t> space = resolve_space(cfg.search_space, net.cells());

  BestResponse engine(net, std::move(start));
  InterferenceSelection out;
  bool converged = false;
  std::size_t pass = 0;
  while (pass < cfg.max_passes && !converged) {
    ++pass;
    if (pass > 1) engine.rebuild();
    bool moved = false;
    for (std::size_t u = 0; u < net.users(); ++u) {
      const std::size_t current = engine.serving(u);
      const double incumbent = engine.metric(u, current);
      std::size_t best = current;
      double best_metric = incumbent * (1.0 - kImprovementThreshold);
      for (std::size_t c : space) {
        const double m = engine.metric(u, c);
        if (m < best_metric) {
          best = c;
          best_metric = m;
        }
      }
      if (best == current) continue;
      out.moves.push_back({pass, u, current, best, incumbent, best_metric});
      engine.move(u, best);
      moved = true;
    }
    converged = !moved;
  }
  out.assignment.passes_used = pass;
  out.assignment.converged = converged;
  out.assignment.serving = std::move(engine).take_serving();
  return out;
}

Assignment select(const UplinkNetwork& net, const StrategyConfig& cfg) {
  switch (cfg.kind) {
    case StrategyKind::kRsrp:
      return select_rsrp(net.gains, cfg.search_space);
    case StrategyKind::kPl:
      return select_pl(net.gains, cfg.search_space);
    case StrategyKind::kCre:
      return select_cre(net.gains, cfg);
    case StrategyKind::kInterference:
      return select_interference_based(net, cfg).assignment;
  }
  throw ConfigError("unknown strategy kind");
}

}  // namespace hetnet
