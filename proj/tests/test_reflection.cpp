#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "casimir/reflection.hpp"

using namespace casimir;

namespace {
EpsValue eps(double v) { return {v, false}; }
}

TEST_CASE("zero-frequency limits") {
  for (double y : {0.1, 1.0, 7.0}) {
    const ReflectionPair r = reflection_coeffs(eps(10.0), 0.0, y);
    CHECK(r.r_par == doctest::Approx(9.0 / 11.0).epsilon(1e-15));
    CHECK(r.r_perp == 0.0);
  }
}

TEST_CASE("vacuum reflects nothing") {
  const ReflectionPair r = reflection_coeffs(eps(1.0), 1.0, 2.0);
  CHECK(r.r_par == 0.0);
  CHECK(r.r_perp == 0.0);
}

TEST_CASE("hand-evaluated point eps=2, zeta=y=1") {
  const ReflectionPair r = reflection_coeffs(eps(2.0), 1.0, 1.0);
  // (2 - sqrt2)/(2 + sqrt2) = 3 - 2 sqrt2; the two polarizations coincide at y = zeta
  CHECK(r.r_par == doctest::Approx(0.171572875253810).epsilon(1e-14));
  CHECK(r.r_perp == doctest::Approx(0.171572875253810).epsilon(1e-14));
}

TEST_CASE("ideal metal") {
  const ReflectionPair r = reflection_coeffs(EpsValue::ideal(), 0.7, 2.0);
  CHECK(r.r_par == 1.0);
  CHECK(r.r_perp == 1.0);
}

TEST_CASE("bounds and monotonicity in eps") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> uz(0.0, 5.0);
  std::uniform_real_distribution<double> uy(0.0, 5.0);
  for (int i = 0; i < 300; ++i) {
    const double zeta = uz(rng);
    const double y = zeta + uy(rng) + 1e-6;
    double prev_par = -1.0, prev_perp = -1.0;
    for (double e : {1.0, 1.3, 2.5, 8.0, 100.0, 1e6}) {
      const ReflectionPair r = reflection_coeffs(eps(e), zeta, y);
      CHECK(r.r_par >= prev_par);
      CHECK(r.r_perp >= prev_perp);
      CHECK(r.r_par >= 0.0);
      CHECK(r.r_par <= 1.0);
      CHECK(r.r_perp >= 0.0);
      CHECK(r.r_perp <= 1.0);
      prev_par = r.r_par;
      prev_perp = r.r_perp;
    }
    // ideal metal is the supremum
    const ReflectionPair big = reflection_coeffs(eps(1e8), zeta, y);
    CHECK(big.r_par == doctest::Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(reflection_coeffs(eps(2.0), 1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(reflection_coeffs(eps(0.5), 0.0, 1.0), std::domain_error);
}

TEST_CASE("log kernel basics") {
  CHECK(log_kernel({0.0, 0.0}, {0.0, 0.0}, 1.0) == 0.0);
  for (double y : {0.4, 1.0, 3.0}) {
    CHECK(log_kernel({1.0, 1.0}, {1.0, 1.0}, y) ==
          doctest::Approx(2.0 * std::log1p(-std::exp(-y))).epsilon(1e-14));
    CHECK(log_kernel({0.5, 0.2}, {0.7, 0.1}, y) <= 0.0);
  }
}

// first order in eta of the ideal-metal/dilute kernel:
//   TM: eta e^-y/4 (zeta^2/y^2 - 2),  TE: -eta e^-y/4 zeta^2/y^2
TEST_CASE("dilute expansion of the kernel, first order") {
  const double h = 1e-6;
  for (auto [zeta, y] : {std::pair{0.5, 1.0}, {1.0, 2.0}, {2.0, 3.5}, {0.0, 1.5}}) {
    const double e = std::exp(-y);
    const double tm_expect = e / 4.0 * (zeta * zeta / (y * y) - 2.0);
    const double te_expect = -e / 4.0 * zeta * zeta / (y * y);
    const ReflectionPair rd = reflection_coeffs(eps(1.0 + h), zeta, y);
    const double tm = std::log1p(-rd.r_par * e) / h;
    const double te = std::log1p(-rd.r_perp * e) / h;
    CHECK(tm == doctest::Approx(tm_expect).epsilon(2e-4));
    CHECK(te == doctest::Approx(te_expect).epsilon(2e-4));
  }
}

// second order: Richardson-extrapolated finite differences in eta against the
// combined eta^2 terms of the expansion
TEST_CASE("dilute expansion of the kernel, second order") {
  auto kernel = [](double eta, double zeta, double y) {
    const ReflectionPair rd = reflection_coeffs(eps(1.0 + eta), zeta, y);
    return log_kernel({1.0, 1.0}, rd, y);
  };
  for (auto [zeta, y] : {std::pair{0.5, 1.0}, {1.0, 2.0}, {2.0, 3.0}, {0.7, 1.3}}) {
    const double e = std::exp(-y);
    const double z2 = zeta * zeta, z4 = z2 * z2, y2 = y * y, y4 = y2 * y2;
    const double c1 = -e / 2.0;
    const double c2 = -e / (32.0 * y4) *
                      (2.0 * e * z4 - 4.0 * e * z2 * y2 + 4.0 * (e - 2.0) * y4);
    auto second = [&](double h) { return (kernel(h, zeta, y) - c1 * h) / (h * h); };
    const double r1 = 2.0 * second(0.01) - second(0.02);
    const double r2 = 2.0 * second(0.005) - second(0.01);
    const double extrap = (4.0 * r2 - r1) / 3.0;
    CHECK(std::fabs(extrap - c2) < 1e-6);
  }
}
