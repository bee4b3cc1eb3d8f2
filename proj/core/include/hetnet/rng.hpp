// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace hetnet {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used to derive independent child seeds from a
// (parent, counter) pair so that adding drops never perturbs earlier ones.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t counter) {
  return mix64(mix64(parent) ^ mix64(counter + 0x632be59bd9b4e019ULL));
}

// Named sub-streams inside one drop.
enum class Stream : std::uint64_t { kPicos = 1, kUsers = 2, kShadowing = 3 };

inline Rng make_rng(std::uint64_t drop_seed, Stream stream) {
  return Rng{derive_seed(drop_seed, static_cast<std::uint64_t>(stream))};
}

}  // namespace hetnet
