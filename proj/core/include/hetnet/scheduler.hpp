// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hetnet {

struct SchedulerConfig {
  std::size_t total_rbs = 48;
  std::size_t rbs_per_user = 4;

  std::size_t users_per_subframe() const { return total_rbs / rbs_per_user; }
};

/// How users map to RB blocks. kPacked fills each cell from RB 0 in
/// user-index order; kHomeSector gives each user the block matching its
/// position among the users dropped in its home sector and keeps it
/// across cells when free.
enum class BlockPolicy { kPacked, kHomeSector };

const char* block_policy_name(BlockPolicy policy);
BlockPolicy parse_block_policy(const std::string& text);

/// Contiguous RB span [first_rb, first_rb + n_rbs).
struct RbRange {
  std::size_t first_rb = 0;
  std::size_t n_rbs = 0;

  bool contains(std::size_t rb) const { return rb >= first_rb && rb < first_rb + n_rbs; }
  bool overlaps(const RbRange& o) const {
    return first_rb < o.first_rb + o.n_rbs && o.first_rb < first_rb + n_rbs;
  }
};

struct Grant {
  std::size_t user = 0;
  RbRange rbs;
};

struct Slot {
  std::size_t cell = 0;
  std::size_t subframe = 0;
  RbRange rbs;
};

/// Slots of one cell's members (ascending user index), aligned with
/// `members`. Without preferences users are packed left to right from RB 0
/// in index order. With `preferred` (RB block per user, indexed by user) a
/// user takes its preferred block when it is still free in the subframe,
/// otherwise the lowest free block. A full subframe spills to the next one.
std::vector<Slot> schedule_cell(const SchedulerConfig& cfg, std::size_t cell,
                                std::span<const std::size_t> members,
                                std::span<const std::size_t> preferred = {});

/// Per-subframe, per-cell RB grants for one epoch, built with
/// schedule_cell for every cell.
class Allocation {
 public:
  Allocation() = default;
  Allocation(const SchedulerConfig& cfg, std::size_t cells, std::span<const std::size_t> serving,
             std::span<const std::size_t> preferred = {});

  std::size_t subframes() const { return grants_.size(); }
  std::size_t cells() const { return cells_; }
  const SchedulerConfig& config() const { return cfg_; }

  const std::vector<Grant>& grants(std::size_t subframe, std::size_t cell) const {
    return grants_.at(subframe).at(cell);
  }
  const Slot& slot(std::size_t user) const { return slots_.at(user); }
  std::size_t users() const { return slots_.size(); }

 private:
  SchedulerConfig cfg_;
  std::size_t cells_ = 0;
  std::vector<std::vector<std::vector<Grant>>> grants_;  // [subframe][cell]
  std::vector<Slot> slots_;                              // per user
};

/// Position of the j-th user (in index order) of a cell.
Slot slot_for_rank(const SchedulerConfig& cfg, std::size_t cell, std::size_t rank);

Allocation allocate(std::span<const std::size_t> serving, std::size_t cells,
                    const SchedulerConfig& cfg = {}, std::span<const std::size_t> preferred = {});

/// Users in other cells scheduled in `user`'s subframe whose span holds
/// `rb`. Throws std::out_of_range if `user` is not in the allocation or
/// `rb` is outside the carrier.
std::vector<std::size_t> cochannel_interferers(const Allocation& alloc, std::size_t user,
                                               std::size_t rb);

}  // namespace hetnet
