// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace hetnet {

// Single dB convention for the whole simulator: x_dB = 10 log10(x_linear).
// Powers in dBm map to milliwatts.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

inline double dbm_to_mw(double dbm) { return db_to_linear(dbm); }
inline double mw_to_dbm(double mw) { return linear_to_db(mw); }

}  // namespace hetnet
