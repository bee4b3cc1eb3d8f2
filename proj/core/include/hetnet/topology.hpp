// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hetnet/errors.hpp"
#include "hetnet/rng.hpp"

namespace hetnet {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;

  double norm() const { return std::hypot(x, y); }
};

inline constexpr std::size_t kSites = 19;
inline constexpr std::size_t kSectorsPerSite = 3;
inline constexpr std::size_t kSectors = kSites * kSectorsPerSite;
inline constexpr std::size_t kWrapImages = 7;
inline constexpr std::array<double, kSectorsPerSite> kBoresightsDeg = {30.0, 150.0, 270.0};
inline constexpr int kPlacementRetries = 10'000;

struct Sector {
  std::size_t site = 0;
  double boresight_deg = 0.0;
};

/// 19-site, 57-sector hexagonal macro layout. Site 0 sits at the origin,
/// followed by the first ring (6 sites) and the second ring (12 sites).
/// `wrap_vectors` holds the zero shift plus the six translations that tile
/// the plane with copies of the cluster; distances are measured to the
/// nearest image.
struct Layout {
  std::vector<Vec2> sites;
  std::vector<Sector> sectors;
  double isd = 0.0;
  std::array<Vec2, kWrapImages> wrap_vectors{};

  // Circumradius of the hexagonal site cell.
  double cell_radius() const { return isd / std::sqrt(3.0); }
};

struct Pico {
  Vec2 pos;
  std::size_t host_sector = 0;
};

struct User {
  Vec2 pos;
  std::size_t home_sector = 0;
  std::optional<std::size_t> seeded_near_pico;
};

struct PlacementRules {
  double min_pico_macro_m = 75.0;
  double min_pico_pico_m = 35.0;
  double seed_radius_m = 50.0;
  // Users closer than this to any base station are re-sampled.
  double min_user_bs_m = 1.0;
};

Layout build_layout(double isd);

/// Vector from `from` to the nearest wraparound image of `to`.
Vec2 wrap_delta(Vec2 from, Vec2 to, const Layout& layout);
double wrap_distance(Vec2 a, Vec2 b, const Layout& layout);

/// Normalizes an angle to [-180, 180).
double wrap_angle_deg(double deg);

/// Sector whose 120-degree wedge (inside the nearest site's hexagon)
/// contains `p`. Only meaningful for points inside the cluster.
std::size_t locate_sector(Vec2 p, const Layout& layout);

/// True if `p` lies in the rhombus (site-hexagon wedge) of `sector`.
bool sector_contains(const Layout& layout, std::size_t sector, Vec2 p);

/// Uniform sample from the rhombus covered by `sector`.
Vec2 sample_in_sector(const Layout& layout, std::size_t sector, Rng& rng);

std::vector<Pico> place_picos(const Layout& layout, std::size_t per_sector, Rng& rng,
                              const PlacementRules& rules = {});

std::vector<User> place_users(const Layout& layout, const std::vector<Pico>& picos,
                              std::size_t users_per_sector, Rng& rng,
                              const PlacementRules& rules = {});

}  // namespace hetnet
