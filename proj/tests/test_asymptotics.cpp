#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/dilute.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/numerics.hpp"

using namespace casimir;

namespace {
constexpr double kA = 1e-6;
double temp_of(double a, double tau) {
  return tau * hbar * c_light / (4.0 * pi * a * k_boltzmann);
}
}  // namespace

TEST_CASE("kernel expansion coefficient") {
  CHECK(zero_freq_kernel_expansion(3.0, 1.0) == doctest::Approx(pi / 4.0).epsilon(1e-15));
  CHECK(zero_freq_kernel_expansion(1.0 + 1e-9, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(zero_freq_kernel_expansion(5.0, 2.0) ==
        doctest::Approx(pi * 4.0 * 16.0 / (4.0 * 6.0)).epsilon(1e-15));
}

TEST_CASE("thermal integral assembles the tau^3 coefficient") {
  // int_0^inf t^2/(e^{2 pi t} - 1) dt = zeta(3)/(4 pi^3)
  const double tint = integrate_semiinfinite(
      [](double t) {
        return t <= 0.0 ? 0.0 : t * t * std::exp(-2.0 * pi * t) / (-std::expm1(-2.0 * pi * t));
      },
      0.0, {1e-12, 1e-300, 4000});
  CHECK(tint == doctest::Approx(riemann_zeta3() / (4.0 * pi * pi * pi)).epsilon(1e-11));

  // assembling prefactor * kernel * integral reproduces the closed correction
  const double eps0 = 7.0, tau = 0.3;
  const double thermal_sum = -zero_freq_kernel_expansion(eps0, tau) * tint;  // at tau_l = tau * t
  const double f_thermal = (hbar * c_light * tau / (32.0 * pi * pi * kA * kA * kA)) * thermal_sum;
  const double closed = const_eps_low_T_free_energy({eps0, kA, tau}, 0.0);
  CHECK(f_thermal == doctest::Approx(closed).epsilon(1e-10));
}

TEST_CASE("entropy is exactly minus dF/dT of the free-energy form") {
  const double eps0 = 7.0, tau = 0.08;
  const double T = temp_of(kA, tau);
  auto f = [&](double TT) {
    const double t = 4.0 * pi * kA * k_boltzmann * TT / (hbar * c_light);
    return const_eps_low_T_free_energy({eps0, kA, t}, -1e-9);
  };
  const double s_num = -central_derivative(f, T, T).value;
  CHECK(s_num == doctest::Approx(const_eps_low_T_entropy({eps0, kA, tau})).epsilon(1e-10));
}

TEST_CASE("free energy correction: eps0 = 1 means no thermal correction") {
  const double F0 = -3.3e-10;
  CHECK(const_eps_low_T_free_energy({1.0, kA, 0.3}, F0) == F0);
  CHECK(const_eps_low_T_entropy({1.0, kA, 0.3}) == 0.0);
}

TEST_CASE("dilute limit matches the eta^2 term of the dilute expansion") {
  // S_19e(1+eta) = 3 k_B zeta3 tau^2/(128 pi^3 a^2) eta^2/(2+eta); the dilute
  // closed-form expansion carries (k_B/32 pi a^2) eta^2 tau^2 3 zeta3/(8 pi^2)
  const double tau = 0.05;
  for (double eta : {1e-3, 1e-2}) {
    const double s_19e = const_eps_low_T_entropy({1.0 + eta, kA, tau});
    const double s_dilute = (k_boltzmann / (32.0 * pi * kA * kA)) * eta * eta * tau * tau *
                            (3.0 * riemann_zeta3() / (8.0 * pi * pi));
    CHECK(std::fabs(s_19e / s_dilute - 1.0) < 0.6 * eta);
  }
}

TEST_CASE("entropy coefficient is nonnegative and quadratic in tau") {
  for (double eps0 : {1.0, 2.0, 7.0, 40.0}) {
    CHECK(const_eps_low_T_entropy({eps0, kA, 0.05}) >= 0.0);
    const double r = const_eps_low_T_entropy({eps0, kA, 0.10}) /
                     (const_eps_low_T_entropy({eps0, kA, 0.05}) + 1e-300);
    if (eps0 > 1.0) CHECK(r == doctest::Approx(4.0).epsilon(1e-12));
  }
}

TEST_CASE("engine entropy approaches the expansion from below as tau -> 0") {
  // the expansion's subleading corrections are sizable on tau in [0.02, 0.1];
  // assert the convergence trend rather than a tight match
  const PermittivityModel ideal = IdealMetal{};
  for (double eps0 : {3.0, 7.0}) {
    const PermittivityModel diel = ConstantEps{eps0};
    double prev_ratio = -1e300;
    for (double tau : {0.1, 0.05, 0.02}) {  // decreasing tau
      const double S = entropy({kA, temp_of(kA, tau)}, ideal, diel);
      const double ratio = S / const_eps_low_T_entropy({eps0, kA, tau});
      CHECK(ratio > prev_ratio);
      CHECK(ratio > 0.0);
      CHECK(ratio < 1.05);
      prev_ratio = ratio;
    }
    CHECK(prev_ratio > 0.75);  // measured 0.94 (eps=3) and 0.83 (eps=7) at tau = 0.02
  }
}

TEST_CASE("pin the measured expansion deficit at eps0 = 7, tau = 0.05") {
  // the tau*log(tau)-type subleading terms leave the tau^3 form ~30% short
  // here; pin the measured ratio so regressions surface
  const PermittivityModel ideal = IdealMetal{};
  const PermittivityModel diel = ConstantEps{7.0};
  const double F0 = free_energy({kA, 0.0}, ideal, diel);
  const double dF = free_energy({kA, temp_of(kA, 0.05)}, ideal, diel) - F0;
  const double corr = const_eps_low_T_free_energy({7.0, kA, 0.05}, 0.0);
  CHECK(dF / corr == doctest::Approx(0.711).epsilon(0.08));
}

TEST_CASE("validity flag") {
  CHECK(ConstEpsAsymptotics{7.0, kA, 0.05}.within_validity());
  CHECK_FALSE(ConstEpsAsymptotics{7.0, kA, 0.2}.within_validity());
}
