// SPDX-License-Identifier: Apache-2.0
//
// chansim - statistical millimeter-wave channel simulator
// Copyright (C) 2026 chansim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CHANSIM_COMMON_HPP
#define CHANSIM_COMMON_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace chansim {

inline constexpr double kSpeedOfLight = 2.99792458e8; // m/s
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

inline double deg2rad(double d) { return d * (kPi / 180.0); }
inline double rad2deg(double r) { return r * (180.0 / kPi); }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

/// Wrap an azimuth angle to [0, 360) degrees.
inline double wrap_azimuth_deg(double a)
{
    double r = std::fmod(a, 360.0);
    if (r < 0.0)
        r += 360.0;
    if (r >= 360.0) // fmod can return 360.0 - eps rounding up
        r = 0.0;
    return r;
}

/// Wrap an angular offset to (-180, 180] degrees.
inline double wrap_offset_deg(double a)
{
    double r = std::fmod(a, 360.0);
    if (r > 180.0)
        r -= 360.0;
    else if (r <= -180.0)
        r += 360.0;
    return r;
}

// Fixed-notation text formatting with 6 significant digits. All numeric
// columns in output files go through this so that identical inputs yield
// byte-identical files.
std::string format_fixed6(double x);

/// Error for malformed user input (config files, tables, CLI values).
class input_error : public std::runtime_error {
  public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Error for filesystem failures; carries the offending path in the message.
class io_error : public std::runtime_error {
  public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace chansim

#endif
