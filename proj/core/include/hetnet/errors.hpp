// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace hetnet {

/// Raised when rejection sampling exhausts its retry budget, which signals
/// an infeasible configuration (e.g. too many picos per sector for the
/// distance constraints).
class PlacementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hetnet
