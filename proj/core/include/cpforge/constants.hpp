#pragma once

namespace cpforge::constants {

// CODATA 2018 exact values (SI).
inline constexpr double hbar = 1.054571817e-34;            // J s
inline constexpr double speed_of_light = 299792458.0;      // m/s
inline constexpr double epsilon0 = 8.8541878128e-12;       // F/m
inline constexpr double mu0 = 1.0 / (epsilon0 * speed_of_light * speed_of_light);
inline constexpr double pi = 3.14159265358979323846;

}  // namespace cpforge::constants
