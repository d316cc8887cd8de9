#include "casimir/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {

namespace {
void check(const ConstEpsAsymptotics& x) {
  if (!(x.eps0 >= 1.0)) throw std::domain_error("ConstEpsAsymptotics: eps0 must be >= 1");
  if (!(x.separation > 0.0)) throw std::domain_error("ConstEpsAsymptotics: separation must be positive");
  if (x.tau < 0.0) throw std::domain_error("ConstEpsAsymptotics: tau must be >= 0");
}
}  // namespace

double const_eps_low_T_free_energy(const ConstEpsAsymptotics& x, double F0) {
  check(x);
  const double a = x.separation;
  const double strength = (x.eps0 - 1.0) * (x.eps0 - 1.0) / (x.eps0 + 1.0);
  return F0 - hbar * c_light * riemann_zeta3() * x.tau * x.tau * x.tau /
                  (512.0 * std::pow(pi, 4) * a * a * a) * strength;
}

double const_eps_low_T_entropy(const ConstEpsAsymptotics& x) {
  check(x);
  const double a = x.separation;
  const double strength = (x.eps0 - 1.0) * (x.eps0 - 1.0) / (x.eps0 + 1.0);
  return 3.0 * k_boltzmann * riemann_zeta3() * x.tau * x.tau /
         (128.0 * std::pow(pi, 3) * a * a) * strength;
}

double zero_freq_kernel_expansion(double eps0, double tau_l) {
  if (!(eps0 >= 1.0)) throw std::domain_error("zero_freq_kernel_expansion: eps0 must be >= 1");
  return pi * tau_l * tau_l * (eps0 - 1.0) * (eps0 - 1.0) / (4.0 * (eps0 + 1.0));
}

}  // namespace casimir
