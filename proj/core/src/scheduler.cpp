// SPDX-License-Identifier: Apache-2.0
#include "hetnet/scheduler.hpp"

#include <algorithm>
#include <stdexcept>

#include "hetnet/errors.hpp"

namespace hetnet {

const char* block_policy_name(BlockPolicy policy) {
  return policy == BlockPolicy::kPacked ? "packed" : "home_sector";
}

BlockPolicy parse_block_policy(const std::string& text) {
  if (text == "packed") return BlockPolicy::kPacked;
  if (text == "home_sector") return BlockPolicy::kHomeSector;
  throw ConfigError("unknown block policy '" + text + "'");
}

Slot slot_for_rank(const SchedulerConfig& cfg, std::size_t cell, std::size_t rank) {
  const std::size_t per_sf = cfg.users_per_subframe();
  return {cell, rank / per_sf, {(rank % per_sf) * cfg.rbs_per_user, cfg.rbs_per_user}};
}

std::vector<Slot> schedule_cell(const SchedulerConfig& cfg, std::size_t cell,
                                std::span<const std::size_t> members,
                                std::span<const std::size_t> preferred) {
  const std::size_t per_sf = cfg.users_per_subframe();
  if (per_sf == 0) throw ConfigError("rbs_per_user must be in [1, total_rbs]");
  std::vector<Slot> out;
  out.reserve(members.size());
  if (preferred.empty()) {
    for (std::size_t i = 0; i < members.size(); ++i) out.push_back(slot_for_rank(cfg, cell, i));
    return out;
  }
  std::vector<bool> taken(per_sf, false);
  std::size_t subframe = 0;
  std::size_t used = 0;
  for (std::size_t u : members) {
    if (u >= preferred.size()) throw std::out_of_range("no preferred block for user");
    if (used == per_sf) {
      std::fill(taken.begin(), taken.end(), false);
      ++subframe;
      used = 0;
    }
    std::size_t block = preferred[u] % per_sf;
    if (taken[block]) {
      block = static_cast<std::size_t>(std::find(taken.begin(), taken.end(), false) - taken.begin());
    }
    taken[block] = true;
    ++used;
    out.push_back({cell, subframe, {block * cfg.rbs_per_user, cfg.rbs_per_user}});
  }
  return out;
}

Allocation::Allocation(const SchedulerConfig& cfg, std::size_t cells,
                       std::span<const std::size_t> serving, std::span<const std::size_t> preferred)
    : cfg_(cfg), cells_(cells), slots_(serving.size()) {
  if (cfg.rbs_per_user == 0 || cfg.rbs_per_user > cfg.total_rbs) {
    throw ConfigError("rbs_per_user must be in [1, total_rbs]");
  }
  std::vector<std::vector<std::size_t>> members(cells);
  for (std::size_t u = 0; u < serving.size(); ++u) {
    if (serving[u] >= cells) throw std::out_of_range("serving cell index out of range");
    members[serving[u]].push_back(u);
  }
  for (std::size_t c = 0; c < cells; ++c) {
    const std::vector<Slot> slots = schedule_cell(cfg, c, members[c], preferred);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const Slot& s = slots[i];
      if (s.subframe >= grants_.size()) {
        grants_.resize(s.subframe + 1, std::vector<std::vector<Grant>>(cells));
      }
      grants_[s.subframe][c].push_back({members[c][i], s.rbs});
      slots_[members[c][i]] = s;
    }
  }
}

Allocation allocate(std::span<const std::size_t> serving, std::size_t cells,
                    const SchedulerConfig& cfg, std::span<const std::size_t> preferred) {
  return Allocation(cfg, cells, serving, preferred);
}

std::vector<std::size_t> cochannel_interferers(const Allocation& alloc, std::size_t user,
                                               std::size_t rb) {
  if (user >= alloc.users()) throw std::out_of_range("user is not scheduled");
  if (rb >= alloc.config().total_rbs) throw std::out_of_range("resource block out of range");
  const Slot& own = alloc.slot(user);
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < alloc.cells(); ++c) {
    if (c == own.cell) continue;
    for (const Grant& g : alloc.grants(own.subframe, c)) {
      if (g.rbs.contains(rb)) out.push_back(g.user);
    }
  }
  return out;
}

}  // namespace hetnet
