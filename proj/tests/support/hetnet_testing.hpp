// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "hetnet/radio.hpp"

namespace hetnet::testing {

// gain_db[c][u]; path loss is stored as -gain so either power-control
// basis sees the same loss.
inline GainMatrix make_gains(const std::vector<std::vector<double>>& gain_db,
                             const std::vector<Tier>& tiers) {
  const std::size_t cells = gain_db.size();
  const std::size_t users = cells == 0 ? 0 : gain_db.front().size();
  std::vector<double> rs;
  for (Tier t : tiers) rs.push_back(t == Tier::kMacro ? 46.0 : 30.0);
  GainMatrix g(cells, users, tiers, rs);
  for (std::size_t c = 0; c < cells; ++c) {
    for (std::size_t u = 0; u < users; ++u) g.set_link(c, u, gain_db[c][u], -gain_db[c][u]);
  }
  return g;
}

}  // namespace hetnet::testing
