// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace leoscat {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kHalfPi = 0.5 * kPi;

/// Speed of light in vacuum [m/s].
inline constexpr double kSpeedOfLight = 299792458.0;

inline constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

} // namespace leoscat
