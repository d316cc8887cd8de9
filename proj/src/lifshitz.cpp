#include "casimir/lifshitz.hpp"

#include <cmath>
#include <thread>

#include "casimir/errors.hpp"
#include "casimir/reflection.hpp"

namespace casimir {

namespace {

void check_scope(const PlateConfig& cfg, const PermittivityModel& dielectric) {
  if (!(cfg.separation > 0.0)) throw std::domain_error("PlateConfig: separation must be positive");
  if (cfg.temperature < 0.0) throw std::domain_error("PlateConfig: temperature must be >= 0");
  if (std::holds_alternative<IdealMetal>(dielectric))
    throw scope_error("dielectric side must not be an ideal metal (metal-dielectric scope)");
}

/// One Matsubara term: int_{zeta}^inf y * log_kernel dy at fixed eps values.
double matsubara_term(double zeta, EpsValue eps_m, EpsValue eps_d, const QuadratureSpec& spec) {
  auto integrand = [&](double y) {
    const ReflectionPair rm = reflection_coeffs(eps_m, zeta, y);
    const ReflectionPair rd = reflection_coeffs(eps_d, zeta, y);
    return y * log_kernel(rm, rd, y);
  };
  return integrate_semiinfinite(integrand, zeta, spec);
}

/// Dimensionless Matsubara sum  sum_l (1 - delta_l0/2) g(zeta_l) with the
/// geometric tail bound; terms are computed independently (optionally on
/// worker threads) and accumulated in a fixed order.
double matsubara_sum(const PlateConfig& cfg, const PermittivityModel& metal,
                     const PermittivityModel& dielectric, const SolverSettings& s, double tau) {
  const double xi_c = cfg.characteristic_frequency();
  auto eps_at = [&](const PermittivityModel& m, double zeta) {
    return eval_epsilon(m, zeta * xi_c);
  };

  QuadratureSpec qs = s.quadrature;
  const double term0 = 0.5 * matsubara_term(0.0, eps_at(metal, 0.0), eps_at(dielectric, 0.0), qs);
  const double term1 = matsubara_term(tau, eps_at(metal, tau), eps_at(dielectric, tau), qs);

  // Per-term absolute floor derived from the estimated total, so far-tail
  // terms settle in one pass instead of chasing relative accuracy on
  // exponentially small values.
  const double scale_est = std::fabs(term0) + std::fabs(term1) / std::max(-std::expm1(-tau), 1e-300);
  if (scale_est == 0.0) return 0.0;  // zero reflection everywhere (vacuum dielectric)
  qs.absolute_floor = std::max(qs.absolute_floor, 0.125 * s.quadrature.relative_tolerance * scale_est);

  const long l_min = static_cast<long>(10.0 / tau + 20.0);
  const long l_hard = static_cast<long>(std::max(60.0 / tau, 100.0)) + 2;

  std::vector<double> terms;
  terms.reserve(1024);
  terms.push_back(term0);
  terms.push_back(term1);

  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned nthreads =
      s.threads > 0 ? static_cast<unsigned>(s.threads) : (hw > 0 ? hw : 1);

  double running = term0 + term1;
  long l = 2;
  bool done = false;
  bool converged = false;
  while (!done) {
    // grow in blocks; parallel inside a block, deterministic accumulation after
    const long block = std::min<long>(std::max<long>(64, l / 2), 16384);
    const long hi = std::min(l + block, l_hard + 1);
    const std::size_t base = terms.size();
    terms.resize(base + static_cast<std::size_t>(hi - l));
    auto worker = [&](unsigned w) {
      for (long j = l + static_cast<long>(w); j < hi; j += static_cast<long>(nthreads)) {
        const double zl = tau * static_cast<double>(j);
        terms[base + static_cast<std::size_t>(j - l)] =
            matsubara_term(zl, eps_at(metal, zl), eps_at(dielectric, zl), qs);
      }
    };
    if (nthreads > 1 && hi - l > 16) {
      std::vector<std::thread> pool;
      for (unsigned w = 1; w < nthreads; ++w) pool.emplace_back(worker, w);
      worker(0);
      for (auto& t : pool) t.join();
    } else {
      worker(0);
    }
    for (long j = l; j < hi; ++j) {
      const double t = terms[base + static_cast<std::size_t>(j - l)];
      running += t;
      // terms decay at least as e^{-tau} once zeta_l > O(1)
      const double tail_bound = std::fabs(t) * std::exp(-tau) / std::max(-std::expm1(-tau), 1e-300);
      if (j >= l_min && tau * static_cast<double>(j) > 3.0 &&
          tail_bound < s.matsubara_tail_tol * std::fabs(running)) {
        done = true;
        converged = true;
        break;
      }
      if (j >= l_hard) {
        done = true;
        break;
      }
    }
    l = hi;
    if (l > l_hard) done = true;
  }

  // fixed-order compensated sum over all computed terms
  double sum = 0.0, comp = 0.0;
  for (double t : terms) {
    const double y = t - comp;
    const double tt = sum + y;
    comp = (tt - sum) - y;
    sum = tt;
  }
  if (!converged)
    throw tolerance_error("matsubara_sum: tail tolerance not met by the term cap", sum,
                          s.matsubara_tail_tol * std::fabs(sum));
  return sum;
}

double free_energy_at_tau(const PlateConfig& cfg, const PermittivityModel& metal,
                          const PermittivityModel& dielectric, const SolverSettings& s,
                          double tau) {
  const double a = cfg.separation;
  const double sum = matsubara_sum(cfg, metal, dielectric, s, tau);
  return (hbar * c_light * tau / (32.0 * pi * pi * a * a * a)) * sum;
}

double free_energy_zero_T(const PlateConfig& cfg, const PermittivityModel& metal,
                          const PermittivityModel& dielectric, const SolverSettings& s) {
  // tau sum -> integral limit at small tau; one Richardson step removes the
  // leading tau^3 thermal correction.
  const double t0 = s.zero_T_tau;
  if (!(t0 > 0.0) || t0 > 1e-3)
    throw std::domain_error("SolverSettings: zero_T_tau must be in (0, 1e-3]");
  const double f1 = free_energy_at_tau(cfg, metal, dielectric, s, t0);
  const double f2 = free_energy_at_tau(cfg, metal, dielectric, s, 2.0 * t0);
  return (8.0 * f1 - f2) / 7.0;
}

SolverSettings tightened(const SolverSettings& s) {
  SolverSettings t = s;
  t.quadrature.relative_tolerance = std::max(s.quadrature.relative_tolerance * 1e-2, 1e-14);
  t.matsubara_tail_tol = std::max(s.matsubara_tail_tol * 1e-2, 1e-14);
  return t;
}

double temperature_scale(const PlateConfig& cfg, const SolverSettings& s) {
  if (s.dT_scale > 0.0) return s.dT_scale;
  const double T = cfg.temperature;
  // large enough that quadrature noise in F does not swamp the tiny
  // low-temperature entropy, small enough that the stencil stays at T > 0
  return std::min(std::max(T, 0.3 * cfg.effective_temperature()), 300.0 * T);
}

}  // namespace

double free_energy(const PlateConfig& cfg, const PermittivityModel& metal,
                   const PermittivityModel& dielectric, const SolverSettings& s) {
  check_scope(cfg, dielectric);
  if (cfg.temperature == 0.0) return free_energy_zero_T(cfg, metal, dielectric, s);
  return free_energy_at_tau(cfg, metal, dielectric, s, cfg.tau());
}

Derivative pressure_estimate(const PlateConfig& cfg, const PermittivityModel& metal,
                             const PermittivityModel& dielectric, const SolverSettings& s) {
  check_scope(cfg, dielectric);
  const SolverSettings child = tightened(s);
  const double scale = s.da_scale > 0.0 ? s.da_scale : cfg.separation;
  auto f = [&](double a) {
    return free_energy({a, cfg.temperature}, metal, dielectric, child);
  };
  Derivative d = central_derivative(f, cfg.separation, scale);
  return {-d.value + 0.0, d.error, d.low_confidence};
}

double pressure(const PlateConfig& cfg, const PermittivityModel& metal,
                const PermittivityModel& dielectric, const SolverSettings& s) {
  return pressure_estimate(cfg, metal, dielectric, s).value;
}

Derivative entropy_estimate(const PlateConfig& cfg, const PermittivityModel& metal,
                            const PermittivityModel& dielectric, const SolverSettings& s) {
  check_scope(cfg, dielectric);
  if (cfg.temperature == 0.0) return {0.0, 0.0, false};  // Nernst limit
  const SolverSettings child = tightened(s);
  auto f = [&](double T) {
    return free_energy({cfg.separation, T}, metal, dielectric, child);
  };
  Derivative d = central_derivative(f, cfg.temperature, temperature_scale(cfg, s));
  return {-d.value + 0.0, d.error, d.low_confidence};
}

double entropy(const PlateConfig& cfg, const PermittivityModel& metal,
               const PermittivityModel& dielectric, const SolverSettings& s) {
  return entropy_estimate(cfg, metal, dielectric, s).value;
}

double relative_thermal_correction_F(const PlateConfig& cfg, const PermittivityModel& metal,
                                     const PermittivityModel& dielectric,
                                     const SolverSettings& s) {
  check_scope(cfg, dielectric);
  if (cfg.temperature == 0.0) return 0.0;
  const double f0 = free_energy({cfg.separation, 0.0}, metal, dielectric, s);
  if (f0 == 0.0) return 0.0;  // no interaction at all (vacuum dielectric)
  const double ft = free_energy(cfg, metal, dielectric, s);
  return (ft - f0) / f0;
}

double relative_thermal_correction_P(const PlateConfig& cfg, const PermittivityModel& metal,
                                     const PermittivityModel& dielectric,
                                     const SolverSettings& s) {
  check_scope(cfg, dielectric);
  if (cfg.temperature == 0.0) return 0.0;
  const double p0 = pressure({cfg.separation, 0.0}, metal, dielectric, s);
  if (p0 == 0.0) return 0.0;
  const double pt = pressure(cfg, metal, dielectric, s);
  return (pt - p0) / p0;
}

std::vector<SweepPoint> sweep(SweepAxis axis, double min_value, double max_value, int steps,
                              const PlateConfig& base, const PermittivityModel& metal,
                              const PermittivityModel& dielectric, const SolverSettings& s) {
  const double lowest = axis == SweepAxis::temperature ? 0.0 : std::numeric_limits<double>::min();
  if (!(min_value >= lowest) || !(max_value > min_value))
    throw std::invalid_argument("sweep: invalid axis range");
  if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
  check_scope(base, dielectric);

  // zero-T references are reusable across a temperature sweep
  double f0_cache = 0.0, p0_cache = 0.0;
  bool have_refs = false;

  std::vector<SweepPoint> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double x = min_value + (max_value - min_value) * i / (steps - 1);
    PlateConfig cfg = base;
    if (axis == SweepAxis::temperature)
      cfg.temperature = x;
    else
      cfg.separation = x;
    SweepPoint row{};
    row.axis_value = x;
    try {
      if (axis == SweepAxis::separation || !have_refs) {
        f0_cache = free_energy({cfg.separation, 0.0}, metal, dielectric, s);
        p0_cache = pressure({cfg.separation, 0.0}, metal, dielectric, s);
        have_refs = true;
      }
      row.free_energy = free_energy(cfg, metal, dielectric, s);
      row.pressure = pressure(cfg, metal, dielectric, s);
      row.entropy = entropy(cfg, metal, dielectric, s);
      row.delta_F = (cfg.temperature == 0.0 || f0_cache == 0.0)
                        ? 0.0
                        : (row.free_energy - f0_cache) / f0_cache;
      row.delta_P = (cfg.temperature == 0.0 || p0_cache == 0.0)
                        ? 0.0
                        : (row.pressure - p0_cache) / p0_cache;
    } catch (const tolerance_error&) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      row.free_energy = row.pressure = row.entropy = row.delta_F = row.delta_P = nan;
      row.degraded = true;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace casimir
