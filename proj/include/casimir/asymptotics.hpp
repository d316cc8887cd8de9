#pragma once

namespace casimir {

/// Low-temperature expansion for an ideal metal facing a dielectric with an
/// arbitrary frequency-independent eps0 (not necessarily dilute).
struct ConstEpsAsymptotics {
  double eps0;        // >= 1
  double separation;  // meters
  double tau;         // 2 pi T / T_eff

  /// The expansion tracks the full result only for tau <= 0.1.
  bool within_validity() const { return tau <= 0.1; }
};

/// F(a,T) = F0 - hbar c zeta3 tau^3 / (512 pi^4 a^3) * (eps0-1)^2/(eps0+1).
/// F0 is the zero-temperature free energy supplied by the Lifshitz engine
/// (no closed form exists for general eps0).
double const_eps_low_T_free_energy(const ConstEpsAsymptotics& x, double F0);

/// S(a,T) = 3 k_B zeta3 tau^2 / (128 pi^3 a^2) * (eps0-1)^2/(eps0+1); >= 0,
/// vanishing as tau^2 (Nernst limit).
double const_eps_low_T_entropy(const ConstEpsAsymptotics& x);

/// Lowest-order imaginary-difference kernel of the Abel-Plana thermal
/// integral: (F(it) - F(-it))/i = pi (tau_l)^2 (eps0-1)^2 / (4 (eps0+1)),
/// evaluated at tau_l = tau*t.  With tau_l = 1 this is the bare coefficient.
double zero_freq_kernel_expansion(double eps0, double tau_l);

}  // namespace casimir
