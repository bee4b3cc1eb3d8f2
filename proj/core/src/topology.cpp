// SPDX-License-Identifier: Apache-2.0
#include "hetnet/topology.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace hetnet {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

Vec2 from_polar(double r, double deg) {
  return {r * std::cos(deg * kDegToRad), r * std::sin(deg * kDegToRad)};
}

// Axial hex coordinates on the lattice spanned by (isd, 0) and
// (isd/2, isd*sqrt(3)/2).
Vec2 axial_to_xy(int q, int r, double isd) {
  return {isd * (q + 0.5 * r), isd * (std::sqrt(3.0) / 2.0) * r};
}

int hex_ring(int q, int r) { return std::max({std::abs(q), std::abs(r), std::abs(q + r)}); }

// Rhombus edge vectors of a sector, both of length cell_radius, at
// boresight -/+ 60 degrees. site + e1 + e2 is the far hexagon vertex.
std::pair<Vec2, Vec2> sector_edges(const Layout& layout, std::size_t sector) {
  const double b = layout.sectors[sector].boresight_deg;
  const double r = layout.cell_radius();
  return {from_polar(r, b - 60.0), from_polar(r, b + 60.0)};
}

double min_distance_to_bs(Vec2 p, const Layout& layout, const std::vector<Pico>& picos) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vec2& s : layout.sites) best = std::min(best, wrap_distance(p, s, layout));
  for (const Pico& q : picos) best = std::min(best, wrap_distance(p, q.pos, layout));
  return best;
}

}  // namespace

Layout build_layout(double isd) {
  if (!(isd > 0.0)) throw ConfigError("inter-site distance must be positive");

  struct Cell {
    int ring;
    double angle;
    Vec2 pos;
  };
  std::vector<Cell> cells;
  for (int q = -2; q <= 2; ++q) {
    for (int r = -2; r <= 2; ++r) {
      const int ring = hex_ring(q, r);
      if (ring > 2) continue;
      const Vec2 pos = axial_to_xy(q, r, isd);
      double angle = ring == 0 ? 0.0 : std::atan2(pos.y, pos.x) / kDegToRad;
      if (angle < -1e-9) angle += 360.0;
      cells.push_back({ring, angle, pos});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.ring != b.ring) return a.ring < b.ring;
    return a.angle < b.angle - 1e-9;
  });

  Layout layout;
  layout.isd = isd;
  for (const Cell& c : cells) layout.sites.push_back(c.pos);
  for (std::size_t s = 0; s < layout.sites.size(); ++s) {
    for (double b : kBoresightsDeg) layout.sectors.push_back({s, b});
  }

  // A radius-2 hexagon of sites tiles the plane under the shift (5, -2) in
  // axial coordinates and its 60-degree rotations.
  const Vec2 shift = axial_to_xy(5, -2, isd);
  const double base = std::atan2(shift.y, shift.x) / kDegToRad;
  layout.wrap_vectors[0] = {0.0, 0.0};
  for (std::size_t i = 0; i < 6; ++i) {
    layout.wrap_vectors[i + 1] = from_polar(shift.norm(), base + 60.0 * static_cast<double>(i));
  }
  return layout;
}

Vec2 wrap_delta(Vec2 from, Vec2 to, const Layout& layout) {
  Vec2 best = to - from;
  double best_d2 = best.x * best.x + best.y * best.y;
  for (std::size_t i = 1; i < kWrapImages; ++i) {
    const Vec2 d = (to + layout.wrap_vectors[i]) - from;
    const double d2 = d.x * d.x + d.y * d.y;
    if (d2 < best_d2) {
      best = d;
      best_d2 = d2;
    }
  }
  return best;
}

double wrap_distance(Vec2 a, Vec2 b, const Layout& layout) {
  // Symmetrize so floating-point rounding in the image sums cannot break
  // wrap_distance(a, b) == wrap_distance(b, a).
  return std::min(wrap_delta(a, b, layout).norm(), wrap_delta(b, a, layout).norm());
}

double wrap_angle_deg(double deg) {
  double r = std::fmod(deg + 180.0, 360.0);
  if (r < 0.0) r += 360.0;
  return r - 180.0;
}

bool sector_contains(const Layout& layout, std::size_t sector, Vec2 p) {
  const auto [e1, e2] = sector_edges(layout, sector);
  const Vec2 d = p - layout.sites[layout.sectors[sector].site];
  const double det = e1.x * e2.y - e1.y * e2.x;
  const double u = (d.x * e2.y - d.y * e2.x) / det;
  const double v = (e1.x * d.y - e1.y * d.x) / det;
  constexpr double kTol = 1e-12;
  return u >= -kTol && v >= -kTol && u <= 1.0 + kTol && v <= 1.0 + kTol;
}

std::size_t locate_sector(Vec2 p, const Layout& layout) {
  std::size_t site = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < layout.sites.size(); ++s) {
    const double d = (p - layout.sites[s]).norm();
    if (d < best) {
      best = d;
      site = s;
    }
  }
  const Vec2 d = p - layout.sites[site];
  const double az = std::atan2(d.y, d.x) / kDegToRad;
  std::size_t sector = site * kSectorsPerSite;
  double best_off = 360.0;
  for (std::size_t k = 0; k < kSectorsPerSite; ++k) {
    const std::size_t idx = site * kSectorsPerSite + k;
    const double off = std::abs(wrap_angle_deg(az - layout.sectors[idx].boresight_deg));
    if (off < best_off) {
      best_off = off;
      sector = idx;
    }
  }
  return sector;
}

Vec2 sample_in_sector(const Layout& layout, std::size_t sector, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto [e1, e2] = sector_edges(layout, sector);
  const double u = unit(rng);
  const double v = unit(rng);
  return layout.sites[layout.sectors[sector].site] + u * e1 + v * e2;
}

std::vector<Pico> place_picos(const Layout& layout, std::size_t per_sector, Rng& rng,
                              const PlacementRules& rules) {
  std::vector<Pico> picos;
  picos.reserve(per_sector * layout.sectors.size());
  for (std::size_t s = 0; s < layout.sectors.size(); ++s) {
    for (std::size_t i = 0; i < per_sector; ++i) {
      bool placed = false;
      for (int attempt = 0; attempt < kPlacementRetries && !placed; ++attempt) {
        const Vec2 p = sample_in_sector(layout, s, rng);
        const bool far_from_sites =
            std::all_of(layout.sites.begin(), layout.sites.end(), [&](const Vec2& site) {
              return wrap_distance(p, site, layout) >= rules.min_pico_macro_m;
            });
        if (!far_from_sites) continue;
        const bool far_from_picos = std::all_of(picos.begin(), picos.end(), [&](const Pico& q) {
          return wrap_distance(p, q.pos, layout) >= rules.min_pico_pico_m;
        });
        if (!far_from_picos) continue;
        picos.push_back({p, s});
        placed = true;
      }
      if (!placed) {
        throw PlacementError("could not place pico " + std::to_string(i) + " in sector " +
                             std::to_string(s) + " within " +
                             std::to_string(kPlacementRetries) + " attempts");
      }
    }
  }
  return picos;
}

std::vector<User> place_users(const Layout& layout, const std::vector<Pico>& picos,
                              std::size_t users_per_sector, Rng& rng,
                              const PlacementRules& rules) {
  std::vector<std::vector<std::size_t>> hosted(layout.sectors.size());
  for (std::size_t p = 0; p < picos.size(); ++p) hosted.at(picos[p].host_sector).push_back(p);
  for (std::size_t s = 0; s < hosted.size(); ++s) {
    if (hosted[s].size() > users_per_sector) {
      throw ConfigError("users_per_sector (" + std::to_string(users_per_sector) +
                        ") is smaller than the " + std::to_string(hosted[s].size()) +
                        " picos of sector " + std::to_string(s));
    }
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<User> users;
  users.reserve(users_per_sector * layout.sectors.size());

  auto fail = [&](std::size_t s) {
    return PlacementError("could not place a user in sector " + std::to_string(s) + " within " +
                          std::to_string(kPlacementRetries) + " attempts");
  };

  for (std::size_t s = 0; s < layout.sectors.size(); ++s) {
    for (std::size_t p : hosted[s]) {
      bool placed = false;
      for (int attempt = 0; attempt < kPlacementRetries && !placed; ++attempt) {
        const double r = rules.seed_radius_m * std::sqrt(unit(rng));
        const double phi = 360.0 * unit(rng);
        const Vec2 pos = picos[p].pos + from_polar(r, phi);
        if (!sector_contains(layout, s, pos)) continue;
        if (min_distance_to_bs(pos, layout, picos) < rules.min_user_bs_m) continue;
        users.push_back({pos, s, p});
        placed = true;
      }
      if (!placed) throw fail(s);
    }
    for (std::size_t i = hosted[s].size(); i < users_per_sector; ++i) {
      bool placed = false;
      for (int attempt = 0; attempt < kPlacementRetries && !placed; ++attempt) {
        const Vec2 pos = sample_in_sector(layout, s, rng);
        if (min_distance_to_bs(pos, layout, picos) < rules.min_user_bs_m) continue;
        users.push_back({pos, s, std::nullopt});
        placed = true;
      }
      if (!placed) throw fail(s);
    }
  }
  return users;
}

}  // namespace hetnet
