#pragma once

namespace casimir {

// CODATA 2018 values, SI units throughout.
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double c_light = 2.99792458e8;        // m/s
inline constexpr double k_boltzmann = 1.380649e-23;    // J/K
inline constexpr double electron_volt = 1.602176634e-19;  // J
inline constexpr double pi = 3.14159265358979323846;

/// Apery's constant zeta(3), fixed to full double precision.
double riemann_zeta3();

}  // namespace casimir
