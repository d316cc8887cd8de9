#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "casimir/dilute.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"

using namespace casimir;

namespace {
const PermittivityModel kIdeal = IdealMetal{};
double temp_of(double a, double tau) {
  return tau * hbar * c_light / (4.0 * pi * a * k_boltzmann);
}
}  // namespace

TEST_CASE("plate config derived quantities") {
  const PlateConfig cfg{1e-6, 300.0};
  CHECK(cfg.effective_temperature() == doctest::Approx(1144.9422596).epsilon(1e-9));
  CHECK(cfg.tau() == doctest::Approx(2.0 * pi * 300.0 / 1144.9422596).epsilon(1e-9));
  CHECK(cfg.characteristic_frequency() == doctest::Approx(1.49896229e14).epsilon(1e-12));
}

TEST_CASE("vacuum dielectric gives exactly zero") {
  const PermittivityModel vac = ConstantEps{1.0};
  CHECK(free_energy({1e-6, 300.0}, kIdeal, vac) == 0.0);
  CHECK(free_energy({2e-6, 0.0}, kIdeal, vac) == 0.0);
  CHECK(pressure({1e-6, 300.0}, kIdeal, vac) == 0.0);
  CHECK(entropy({1e-6, 300.0}, kIdeal, vac) == 0.0);
}

TEST_CASE("dielectric side must not be an ideal metal") {
  CHECK_THROWS_AS(free_energy({1e-6, 300.0}, kIdeal, kIdeal), scope_error);
}

// anchors computed with an independent implementation (adaptive QAGS
// quadrature + the same physics); tolerance reflects the two codebases'
// different quadrature machinery
TEST_CASE("regression anchors") {
  const PermittivityModel c10 = ConstantEps{10.0};
  CHECK(free_energy({1e-6, 300.0}, kIdeal, c10) ==
        doctest::Approx(-1.991087005378e-10).epsilon(1e-7));
  CHECK(free_energy({1e-6, 0.0}, kIdeal, c10) ==
        doctest::Approx(-2.000299549622e-10).epsilon(1e-7));
  CHECK(free_energy({0.6e-6, 238.0}, kIdeal, ConstantEps{7.0}) ==
        doctest::Approx(-8.116883198596e-10).epsilon(1e-7));
  CHECK(free_energy({1e-6, 300.0}, kIdeal, DiluteEps{0.1}) ==
        doctest::Approx(-9.650140496239e-12).epsilon(1e-7));

  const MaterialRecord au = builtin_material("au-drude");
  const MaterialRecord si = builtin_material("si-fallback");
  const MaterialRecord al = builtin_material("alumina");
  CHECK(free_energy({0.5e-6, 300.0}, au.model, si.model) ==
        doctest::Approx(-1.566788770472e-9).epsilon(1e-6));
  CHECK(free_energy({1e-6, 300.0}, au.model, al.model) ==
        doctest::Approx(-1.501066488031e-10).epsilon(1e-6));
}

TEST_CASE("engine tracks the dilute closed form to the eta^3 level") {
  // the closed form truncates at eta^2; the exact-reflection engine differs
  // by ~0.25 eta^2 relative
  for (double eta : {0.01, 0.1}) {
    const PermittivityModel diel = DiluteEps{eta};
    for (double T : {50.0, 220.0}) {
      const double fe = free_energy({1e-6, T}, kIdeal, diel);
      const double fd = dilute_free_energy({eta, PlateConfig{1e-6, T}.tau(), 1e-6});
      CHECK(std::fabs(fe / fd - 1.0) < 0.5 * eta * eta);
      CHECK(std::fabs(fe / fd - 1.0) > 0.05 * eta * eta);
    }
  }
}

TEST_CASE("Matsubara truncation stability") {
  const PermittivityModel diel = ConstantEps{5.0};
  SolverSettings loose;
  loose.matsubara_tail_tol = 1e-10;
  SolverSettings tight;
  tight.matsubara_tail_tol = 1e-14;
  const double f1 = free_energy({0.8e-6, 300.0}, kIdeal, diel, loose);
  const double f2 = free_energy({0.8e-6, 300.0}, kIdeal, diel, tight);
  CHECK(std::fabs(f1 / f2 - 1.0) < 10.0 * loose.matsubara_tail_tol);
}

TEST_CASE("attraction strengthens with permittivity") {
  double prev = 0.0;
  for (double e : {3.0, 6.0, 10.0}) {
    const double f = free_energy({1e-6, 300.0}, kIdeal, ConstantEps{e});
    CHECK(f < prev);
    prev = f;
  }
}

TEST_CASE("entropy and pressure are consistent derivatives (spot)") {
  const PermittivityModel diel = ConstantEps{6.0};
  const PlateConfig cfg{0.7e-6, 400.0};
  SolverSettings tight;
  tight.quadrature.relative_tolerance = 1e-12;
  tight.matsubara_tail_tol = 1e-12;
  const double S = entropy(cfg, kIdeal, diel);
  auto fT = [&](double T) { return free_energy({cfg.separation, T}, kIdeal, diel, tight); };
  const Derivative dT = central_derivative(fT, cfg.temperature, 0.5 * cfg.temperature);
  CHECK(S == doctest::Approx(-dT.value).epsilon(1e-5));

  const double P = pressure(cfg, kIdeal, diel);
  auto fa = [&](double a) { return free_energy({a, cfg.temperature}, kIdeal, diel, tight); };
  const Derivative da = central_derivative(fa, cfg.separation, 2.0 * cfg.separation);
  CHECK(P == doctest::Approx(-da.value).epsilon(1e-5));
}

TEST_CASE("entropy at T = 0 is the Nernst limit") {
  CHECK(entropy({1e-6, 0.0}, kIdeal, ConstantEps{5.0}) == 0.0);
}

TEST_CASE("derivative estimates carry a healthy error bound") {
  const Derivative p = pressure_estimate({0.8e-6, 350.0}, kIdeal, ConstantEps{4.0});
  CHECK_FALSE(p.low_confidence);
  CHECK(p.error < 1e-4 * std::fabs(p.value));
  const Derivative S = entropy_estimate({0.8e-6, 350.0}, kIdeal, ConstantEps{4.0});
  CHECK_FALSE(S.low_confidence);
  CHECK(S.value == entropy({0.8e-6, 350.0}, kIdeal, ConstantEps{4.0}));
}

// the dashed-line structure of the constant-eps 10.1 comparison curve:
// negative thermal correction between ~0.25 and ~1.27 um, positive outside
TEST_CASE("constant eps 10.1 correction sign structure at 300 K") {
  const PermittivityModel diel = ConstantEps{10.1};
  for (double a_um : {0.3, 0.9, 1.2})
    CHECK(relative_thermal_correction_F({a_um * 1e-6, 300.0}, kIdeal, diel) < 0.0);
  CHECK(relative_thermal_correction_F({1.35e-6, 300.0}, kIdeal, diel) > 0.0);
}

TEST_CASE("relative corrections vanish at T = 0") {
  CHECK(relative_thermal_correction_F({1e-6, 0.0}, kIdeal, ConstantEps{5.0}) == 0.0);
  CHECK(relative_thermal_correction_P({1e-6, 0.0}, kIdeal, ConstantEps{5.0}) == 0.0);
}

TEST_CASE("delta_T P for the dilute pair matches the closed-form route") {
  // engine finite differences against the analytic pressure ratio
  const double a = 2e-6, eta = 0.1, T = 270.0;
  const double dp_engine = relative_thermal_correction_P({a, T}, kIdeal, DiluteEps{eta});
  const double p0 = low_T_pressure({eta, 0.0, a});
  const double dp_closed = dilute_pressure({eta, PlateConfig{a, T}.tau(), a}) / p0 - 1.0;
  CHECK(dp_engine == doctest::Approx(dp_closed).epsilon(0.03));
  CHECK(dp_engine == doctest::Approx(-0.007).epsilon(0.15));
}

TEST_CASE("sweep composition, determinism, and caching") {
  const PermittivityModel diel = ConstantEps{8.0};
  const PlateConfig base{0.5e-6, 0.0};
  const auto rows = sweep(SweepAxis::temperature, 200.0, 400.0, 2, base, kIdeal, diel);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].axis_value == 200.0);
  CHECK(rows[1].axis_value == 400.0);

  // equals two single-point calls
  CHECK(rows[0].free_energy == free_energy({0.5e-6, 200.0}, kIdeal, diel));
  CHECK(rows[1].free_energy == free_energy({0.5e-6, 400.0}, kIdeal, diel));
  CHECK(rows[0].entropy == entropy({0.5e-6, 200.0}, kIdeal, diel));

  const auto rows2 = sweep(SweepAxis::temperature, 200.0, 400.0, 2, base, kIdeal, diel);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].free_energy == rows2[i].free_energy);
    CHECK(rows[i].pressure == rows2[i].pressure);
    CHECK(rows[i].delta_F == rows2[i].delta_F);
  }
}

TEST_CASE("sweep flags degraded rows and continues") {
  SolverSettings impossible;
  impossible.matsubara_tail_tol = 1e-30;
  const auto rows = sweep(SweepAxis::temperature, 200.0, 300.0, 2, {1e-6, 0.0}, kIdeal,
                          ConstantEps{4.0}, impossible);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].degraded);
  CHECK(std::isnan(rows[0].free_energy));
  CHECK(rows[1].degraded);
}

TEST_CASE("sweep argument validation") {
  CHECK_THROWS_AS(sweep(SweepAxis::temperature, 300.0, 200.0, 5, {1e-6, 0.0}, kIdeal,
                        ConstantEps{2.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sweep(SweepAxis::separation, 1e-6, 2e-6, 1, {1e-6, 300.0}, kIdeal,
                        ConstantEps{2.0}),
                  std::invalid_argument);
}
