#pragma once

#include <cmath>
#include <stdexcept>

#include "casimir/permittivity.hpp"

namespace casimir {

/// TM (parallel) and TE (perpendicular) reflection coefficients at imaginary
/// frequency.  Both lie in [0,1] for eps >= 1 and y >= zeta >= 0.
struct ReflectionPair {
  double r_par;
  double r_perp;
};

/// r_par = (eps y - s)/(eps y + s), r_perp = (s - y)/(s + y),
/// s = sqrt(y^2 + zeta^2 (eps - 1)), evaluated in fused forms that avoid the
/// eps -> 1 cancellation:
///   r_par  = (eps-1)(y^2(eps+1) - zeta^2) / (eps y + s)^2
///   r_perp = zeta^2 (eps-1) / (s + y)^2
/// Ideal metal: (1,1).  zeta = 0 with finite eps: ((eps-1)/(eps+1), 0).
inline ReflectionPair reflection_coeffs(EpsValue eps, double zeta, double y) {
  if (zeta < 0.0 || y < zeta)
    throw std::domain_error("reflection_coeffs: require y >= zeta >= 0");
  if (eps.infinite) return {1.0, 1.0};
  if (eps.value < 1.0) throw std::domain_error("reflection_coeffs: eps must be >= 1");
  if (zeta == 0.0) return {(eps.value - 1.0) / (eps.value + 1.0), 0.0};
  const double em1 = eps.value - 1.0;
  const double s = std::sqrt(y * y + zeta * zeta * em1);
  const double dp = eps.value * y + s;
  const double dt = s + y;
  return {em1 * (y * y * (eps.value + 1.0) - zeta * zeta) / (dp * dp),
          zeta * zeta * em1 / (dt * dt)};
}

/// ln[1 - r_par^M r_par^D e^-y] + ln[1 - r_perp^M r_perp^D e^-y] for y > 0;
/// always <= 0.
inline double log_kernel(ReflectionPair m, ReflectionPair d, double y) {
  const double e = std::exp(-y);
  return std::log1p(-m.r_par * d.r_par * e) + std::log1p(-m.r_perp * d.r_perp * e);
}

}  // namespace casimir
