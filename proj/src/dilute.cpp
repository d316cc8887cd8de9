#include "casimir/dilute.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {

// All closed-form pieces are evaluated in terms of exp(-tau) and expm1, so
// ratios of exponentially large terms never materialize and the forms stay
// finite for arbitrarily large tau.
namespace {

// (e^{2t} + 2t e^t - 1) / (4 (e^t - 1)^2)
double ratio_a1(double tau) {
  const double n = -std::expm1(-2.0 * tau) + 2.0 * tau * std::exp(-tau);
  const double d = std::expm1(-tau);
  return n / (4.0 * d * d);
}

// tau^2 e^{2t} (1 - e^{4t} + 2t (1 + 4 e^{2t} + e^{4t})) / (2 (e^{2t} - 1)^4)
//  = tau^3 sum l^3 x^l - (tau^2/2) sum l^2 x^l,  x = e^{-2 tau}
double ratio_q(double tau) {
  const double e2 = std::exp(-2.0 * tau), e4 = std::exp(-4.0 * tau), e6 = std::exp(-6.0 * tau);
  const double n = e6 - e2 + 2.0 * tau * (e6 + 4.0 * e4 + e2);
  const double d = std::expm1(-2.0 * tau);
  return tau * tau * n / (2.0 * d * d * d * d);
}

// tau^2 e^t (e^t + 1) / (e^t - 1)^3
double ratio_pb(double tau) {
  const double n = std::exp(-tau) + std::exp(-2.0 * tau);
  const double d = -std::expm1(-tau);
  return tau * tau * n / (d * d * d);
}

// tau^3 e^{2t} (e^{4t} + 4 e^{2t} + 1) / (2 (e^{2t} - 1)^4) = tau^3 sum l^3 x^l
double ratio_pd(double tau) {
  const double n = std::exp(-2.0 * tau) + 4.0 * std::exp(-4.0 * tau) + std::exp(-6.0 * tau);
  const double d = -std::expm1(-2.0 * tau);
  return tau * tau * tau * n / (2.0 * d * d * d * d);
}

// (e^t + 1) / (2 (e^t - 1))
double ratio_coth(double tau) {
  return (1.0 + std::exp(-tau)) / (-2.0 * std::expm1(-tau));
}

// e^t (1 + t - (1 - t) e^t) / (e^t - 1)^3
double ratio_u(double tau) {
  const double n = (1.0 + tau) * std::exp(-2.0 * tau) - (1.0 - tau) * std::exp(-tau);
  const double d = -std::expm1(-tau);
  return n / (d * d * d);
}

// (2t e^{2t} + e^{2t} - 1) / (2 (e^{2t} - 1)^2)
double ratio_v(double tau) {
  const double num = std::exp(-2.0 * tau) * (2.0 * tau + 1.0) - std::exp(-4.0 * tau);
  const double d = std::expm1(-2.0 * tau);
  return num / (2.0 * d * d);
}

// tau^2 e^{2t} (3 (1 - e^{4t}) + 10 t (1 + 4 e^{2t} + e^{4t})) / (2 (e^{2t} - 1)^4)
double ratio_w(double tau) {
  const double e2 = std::exp(-2.0 * tau), e4 = std::exp(-4.0 * tau), e6 = std::exp(-6.0 * tau);
  const double n = 3.0 * (e6 - e2) + 10.0 * tau * (e6 + 4.0 * e4 + e2);
  const double d = std::expm1(-2.0 * tau);
  return tau * tau * n / (2.0 * d * d * d * d);
}

// (7 e^t + 9) / (4 (e^t - 1))
double ratio_79(double tau) {
  return (7.0 + 9.0 * std::exp(-tau)) / (-4.0 * std::expm1(-tau));
}

double energy_prefactor(double a) { return hbar * c_light / (32.0 * pi * pi * a * a * a); }

void check(const DiluteParams& p, bool need_tau) {
  if (!(p.eta > 0.0)) throw std::domain_error("dilute: eta must be positive");
  if (!(p.separation > 0.0)) throw std::domain_error("dilute: separation must be positive");
  if (need_tau && !(p.tau > 0.0)) throw std::domain_error("dilute: tau must be positive");
}

}  // namespace

double dilute_free_energy(const DiluteParams& p, const SeriesSpec& series) {
  check(p, true);
  const double tau = p.tau, eta = p.eta;
  const double s4 = ei_power_sum(4, tau, series);
  const double s2 = ei_power_sum(2, tau, series);
  const double bracket = 8.0 * ratio_a1(tau) - ratio_a1(2.0 * tau) + ratio_q(tau)
                       + 2.0 * std::pow(tau, 4) * s4 - 2.0 * tau * tau * s2;
  const double braces = eta * tau * ratio_a1(tau) - (eta * eta * tau / 16.0) * bracket;
  return -energy_prefactor(p.separation) * braces;
}

double dilute_entropy(const DiluteParams& p, const SeriesSpec& series) {
  check(p, true);
  const double tau = p.tau, eta = p.eta;
  // sum (6 tau^2 l^2 - 10 tau^4 l^4) Ei(-2 tau l)
  const double mixed = 6.0 * tau * tau * ei_power_sum(2, tau, series)
                     - 10.0 * std::pow(tau, 4) * ei_power_sum(4, tau, series);
  const double b1 = ratio_coth(tau) - tau * ratio_u(tau);
  const double b2 = ratio_79(tau) - 4.0 * tau * ratio_u(tau) - ratio_v(tau) + ratio_w(tau) - mixed;
  const double a = p.separation;
  return (k_boltzmann / (8.0 * pi * a * a)) * (0.5 * eta * b1 - (eta * eta / 16.0) * b2);
}

double dilute_pressure(const DiluteParams& p, const SeriesSpec& series) {
  check(p, true);
  const double tau = p.tau, eta = p.eta;
  const double s4 = ei_power_sum(4, tau, series);
  const double pa = 4.0 * ratio_a1(tau);
  const double pb = ratio_pb(tau);
  const double bracket = pa + pb - 0.5 * ratio_a1(2.0 * tau) - ratio_pd(tau)
                       - std::pow(tau, 4) * s4;
  const double braces = 0.5 * eta * (pa + pb) - 0.25 * eta * eta * bracket;
  const double a = p.separation;
  return -(hbar * c_light * tau / (32.0 * pi * pi * a * a * a * a)) * braces;
}

double abel_plana_kernel(double eta, double tau, double t) {
  const double tl = tau * t;
  const double e1 = std::exp(-tl), e2 = std::exp(-2.0 * tl);
  const double ei = (tl > 0.0) ? std::expint(-2.0 * tl) : 0.0;
  const double first = 0.5 * eta * (1.0 + tl) * e1;
  double second = 4.0 * (1.0 + tl) * e1
                - 0.5 * (1.0 + 2.0 * tl + tl * tl - 2.0 * tl * tl * tl) * e2;
  if (tl > 0.0) second -= 2.0 * tl * tl * (1.0 - tl * tl) * ei;
  return first - (eta * eta / 16.0) * second;
}

double abel_plana_kernel_im(double eta, double tau, double t) {
  const double th = tau * t;
  const double im_a = th * std::cos(th) - std::sin(th);
  const double im_b = (2.0 * th + 2.0 * th * th * th) * std::cos(2.0 * th)
                    - (1.0 - th * th) * std::sin(2.0 * th);
  const double im_ei = 0.5 * pi - detail::sine_integral(2.0 * th);
  const double im_c = 2.0 * th * th * (1.0 + th * th) * im_ei;
  return 0.5 * eta * im_a - (eta * eta / 16.0) * (4.0 * im_a - 0.5 * im_b + im_c);
}

double abel_plana_zero_T_integral(double eta, double tau, const QuadratureSpec& spec) {
  // substitute u = tau t so the integrand decays as e^-u
  QuadratureSpec local = spec;
  local.absolute_floor = std::max(spec.absolute_floor, 1e-16 * eta);
  const double val =
      integrate_semiinfinite([&](double u) { return abel_plana_kernel(eta, 1.0, u); }, 0.0, local);
  return val / tau;
}

double abel_plana_thermal_integral(double eta, double tau, const QuadratureSpec& spec) {
  QuadratureSpec local = spec;
  local.absolute_floor = std::max(spec.absolute_floor, 1e-20 * eta * tau * tau * tau);
  auto f = [&](double t) {
    const double w = -std::expm1(-2.0 * pi * t);
    return abel_plana_kernel_im(eta, tau, t) * std::exp(-2.0 * pi * t) / w;
  };
  return -2.0 * integrate_semiinfinite(f, 0.0, local);
}

double abel_plana_free_energy(const DiluteParams& p, const QuadratureSpec& spec) {
  check(p, true);
  const double i0 = abel_plana_zero_T_integral(p.eta, p.tau, spec);
  const double it = abel_plana_thermal_integral(p.eta, p.tau, spec);
  return -energy_prefactor(p.separation) * p.tau * (i0 + it);
}

double low_T_free_energy(const DiluteParams& p) {
  check(p, false);
  const double tau = p.tau, eta = p.eta;
  const double z3 = riemann_zeta3();
  const double braces = 1.0 + std::pow(tau, 4) / 720.0
      - (eta / 32.0) * (457.0 / 30.0 - z3 * tau * tau * tau / (pi * pi) + std::pow(tau, 4) / 10.0);
  return -energy_prefactor(p.separation) * eta * braces;
}

double low_T_entropy(const DiluteParams& p) {
  check(p, false);
  const double tau = p.tau, eta = p.eta;
  const double z3 = riemann_zeta3();
  const double a = p.separation;
  return (k_boltzmann / (32.0 * pi * a * a)) * eta * tau * tau
       * (tau / 45.0 + 0.25 * eta * (1.5 * z3 / (pi * pi) - tau / 5.0));
}

double low_T_pressure(const DiluteParams& p) {
  check(p, false);
  const double tau = p.tau, eta = p.eta;
  const double a = p.separation;
  return -(hbar * c_light / (32.0 * pi * pi * a * a * a * a)) * eta
       * (3.0 - std::pow(tau, 4) / 720.0 - (eta / 320.0) * (457.0 - std::pow(tau, 4)));
}

namespace {

// tau and separation fix T through tau = 4 pi a k_B T / (hbar c)
double temperature_of(const DiluteParams& p) {
  return p.tau * hbar * c_light / (4.0 * pi * p.separation * k_boltzmann);
}

}  // namespace

double high_T_free_energy(const DiluteParams& p) {
  check(p, false);
  const double a = p.separation;
  return -(k_boltzmann * temperature_of(p) / (32.0 * pi * a * a)) * p.eta * (1.0 - 7.0 * p.eta / 16.0);
}

double high_T_entropy(const DiluteParams& p) {
  check(p, false);
  const double a = p.separation;
  return (k_boltzmann / (32.0 * pi * a * a)) * p.eta * (1.0 - 7.0 * p.eta / 16.0);
}

double high_T_pressure(const DiluteParams& p) {
  check(p, false);
  const double a = p.separation;
  return -(k_boltzmann * temperature_of(p) / (16.0 * pi * a * a * a)) * p.eta * (1.0 - 7.0 * p.eta / 16.0);
}

}  // namespace casimir
