#pragma once

#include <vector>

#include "casimir/constants.hpp"
#include "casimir/numerics.hpp"
#include "casimir/permittivity.hpp"

namespace casimir {

/// Plate pair geometry and temperature.  The derived quantities follow from
/// k_B T_eff = hbar c / (2a), tau = 2 pi T / T_eff, zeta_l = tau l.
struct PlateConfig {
  double separation;   // a, meters, > 0
  double temperature;  // T, kelvin, >= 0

  double characteristic_frequency() const { return c_light / (2.0 * separation); }
  double effective_temperature() const {
    return hbar * characteristic_frequency() / k_boltzmann;
  }
  double tau() const { return 2.0 * pi * temperature / effective_temperature(); }
};

struct ThermalQuantities {
  double free_energy;  // J/m^2
  double pressure;     // Pa
  double entropy;      // J/(m^2 K)
};

struct SolverSettings {
  QuadratureSpec quadrature;
  double matsubara_tail_tol = 1e-10;
  double zero_T_tau = 1e-4;  // tau used to approximate T = 0, <= 1e-3
  double dT_scale = 0.0;     // 0 = automatic
  double da_scale = 0.0;     // 0 = automatic
  int threads = 0;           // 0 = hardware concurrency
};

/// Lifshitz free energy per unit area between a metal-side model and a
/// dielectric-side model.  T = 0 is evaluated at tau = zero_T_tau with one
/// Richardson step removing the leading tau^3 thermal term.
double free_energy(const PlateConfig& cfg, const PermittivityModel& metal,
                   const PermittivityModel& dielectric, const SolverSettings& s = {});

/// P = -dF/da at fixed temperature, by central differencing.
double pressure(const PlateConfig& cfg, const PermittivityModel& metal,
                const PermittivityModel& dielectric, const SolverSettings& s = {});

/// S = -dF/dT at fixed separation; returns 0 at T = 0 (Nernst limit).
double entropy(const PlateConfig& cfg, const PermittivityModel& metal,
               const PermittivityModel& dielectric, const SolverSettings& s = {});

/// Same derivatives with the differentiation error estimate attached; the
/// low_confidence flag fires above 1e-4 relative and is the caller's call.
Derivative pressure_estimate(const PlateConfig& cfg, const PermittivityModel& metal,
                             const PermittivityModel& dielectric, const SolverSettings& s = {});
Derivative entropy_estimate(const PlateConfig& cfg, const PermittivityModel& metal,
                            const PermittivityModel& dielectric, const SolverSettings& s = {});

/// delta_T F = (F(a,T) - F(a,0)) / F(a,0); zero at T = 0 by definition.
double relative_thermal_correction_F(const PlateConfig& cfg, const PermittivityModel& metal,
                                     const PermittivityModel& dielectric,
                                     const SolverSettings& s = {});

/// delta_T P = (P(a,T) - P(a,0)) / P(a,0).
double relative_thermal_correction_P(const PlateConfig& cfg, const PermittivityModel& metal,
                                     const PermittivityModel& dielectric,
                                     const SolverSettings& s = {});

enum class SweepAxis { temperature, separation };

struct SweepPoint {
  double axis_value;
  double free_energy;
  double pressure;
  double entropy;
  double delta_F;
  double delta_P;
  bool degraded = false;  // tolerance failure on this row; values are NaN
};

/// Row-per-point table along one axis with the other variable held at the
/// template config's value.  Rows are independent; failures flag the row and
/// the sweep continues.
std::vector<SweepPoint> sweep(SweepAxis axis, double min_value, double max_value, int steps,
                              const PlateConfig& base, const PermittivityModel& metal,
                              const PermittivityModel& dielectric, const SolverSettings& s = {});

}  // namespace casimir
