#pragma once

#include "casimir/numerics.hpp"

namespace casimir {

/// Ideal metal facing a dilute dielectric eps = 1 + eta, exactly solvable to
/// second order in eta with the thermal dependence kept exact at each order.
struct DiluteParams {
  double eta;         // eps0 - 1, 0 < eta << 1
  double tau;         // 2 pi T / T_eff
  double separation;  // meters
};

/// Closed-form free energy per unit area, J/m^2 (exact in tau, O(eta^3) truncated).
double dilute_free_energy(const DiluteParams& p, const SeriesSpec& series = {});

/// Closed-form entropy per unit area, J/(m^2 K); nonnegative for all tau.
double dilute_entropy(const DiluteParams& p, const SeriesSpec& series = {});

/// Closed-form pressure, Pa (negative = attraction).
double dilute_pressure(const DiluteParams& p, const SeriesSpec& series = {});

/// The same free energy evaluated through the Abel-Plana representation:
/// zero-temperature integral plus thermal correction integral.
double abel_plana_free_energy(const DiluteParams& p, const QuadratureSpec& spec = {});

/// Pieces of the Abel-Plana route, exposed for direct verification.
/// Summand kernel F(t) of the Matsubara representation (real t >= 0).
double abel_plana_kernel(double eta, double tau, double t);
/// Im F(it); the analytic continuation enters only through
/// Im Ei(-2 i theta) = pi/2 - Si(2 theta).
double abel_plana_kernel_im(double eta, double tau, double t);
/// int_0^inf F(t) dt; equals (eta/tau)(1 - 457 eta/960) analytically.
double abel_plana_zero_T_integral(double eta, double tau, const QuadratureSpec& spec = {});
/// Thermal correction integral; -> eta tau^3/720 - (eta^2 tau^2/32)(tau/10 - zeta3/pi^2)
/// as tau -> 0.
double abel_plana_thermal_integral(double eta, double tau, const QuadratureSpec& spec = {});

/// Low-temperature asymptotic forms (tau << 1; omitted terms O(eta tau^6), O(eta^2 tau^5)).
double low_T_free_energy(const DiluteParams& p);
double low_T_entropy(const DiluteParams& p);
double low_T_pressure(const DiluteParams& p);

/// High-temperature asymptotic forms (tau >> 1).
double high_T_free_energy(const DiluteParams& p);
double high_T_entropy(const DiluteParams& p);
double high_T_pressure(const DiluteParams& p);

}  // namespace casimir
