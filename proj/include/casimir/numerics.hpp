#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

struct QuadratureSpec {
  double relative_tolerance = 1e-10;  // in (0, 1e-3]
  double absolute_floor = 1e-300;
  int max_subdivisions = 4000;  // >= 16
};

struct SeriesSpec {
  double tail_tolerance = 1e-12;
  long max_terms = 1000000;
};

/// Result of a numerical derivative: the estimate, an error bound from the
/// Richardson step, and a flag set when the bound exceeds 1e-4 relative.
struct Derivative {
  double value;
  double error;
  bool low_confidence;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss pair on [-1,1] (QUADPACK constants).
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double kGk15WeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kGk15WeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  double value;
  double error;
};

/// One Gauss-Kronrod 7/15 evaluation on [a,b] with a QUADPACK-style
/// scale-invariant error estimate.
template <class F>
PanelEstimate gk15(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(mid);
  double resk = kGk15WeightsK[7] * fc;
  double resg = kGk15WeightsG[3] * fc;
  double resabs = std::fabs(resk);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kGk15Nodes[j];
    const double f1 = f(mid - dx);
    const double f2 = f(mid + dx);
    resk += kGk15WeightsK[j] * (f1 + f2);
    resabs += kGk15WeightsK[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) resg += kGk15WeightsG[j / 2] * (f1 + f2);
  }
  const double value = resk * half;
  resabs *= std::fabs(half);
  double err = std::fabs((resk - resg) * half);
  if (resabs > 0.0 && err > 0.0)
    err = resabs * std::min(1.0, std::pow(200.0 * err / resabs, 1.5));
  return {value, err};
}

/// Sine integral Si(x) = int_0^x sin(t)/t dt for x >= 0.
/// Power series below x = 4, continued fraction for E1(ix) above.
double sine_integral(double x);

}  // namespace detail

/// Adaptive integration of f over [lower, +inf) for integrands that decay at
/// least as exp(-y).  The semi-infinite range is covered by geometrically
/// widening panels out to the point where exp(lower - y) drops below the
/// absolute floor; the panel with the largest error estimate is bisected until
/// sum(err) <= max(rel_tol*|I|, absolute_floor).
template <class F>
double integrate_semiinfinite(F&& f, double lower, const QuadratureSpec& spec = {}) {
  struct Panel {
    double a, b, value, error;
  };
  if (!(spec.relative_tolerance > 0.0) || spec.relative_tolerance > 1e-3)
    throw std::domain_error("QuadratureSpec: relative_tolerance must be in (0, 1e-3]");
  if (spec.max_subdivisions < 16)
    throw std::domain_error("QuadratureSpec: max_subdivisions must be >= 16");
  const double span = std::min(700.0, -std::log(std::max(spec.absolute_floor, 1e-300)) + 20.0);

  std::vector<Panel> panels;
  panels.reserve(64);
  double width = 1.0;
  double a = lower;
  double negligible = 0;
  while (a < lower + span) {
    double b = std::min(a + width, lower + span);
    auto est = detail::gk15(f, a, b);
    panels.push_back({a, b, est.value, est.error});
    // With the guaranteed exponential decay, two consecutive panels at the
    // noise floor mean the remaining tail is below it as well.
    if (std::fabs(est.value) + est.error < 1e-3 * spec.absolute_floor) {
      if (++negligible >= 2) break;
    } else {
      negligible = 0;
    }
    a = b;
    width *= 2.0;
  }

  double total = 0, total_err = 0;
  auto recompute = [&] {
    total = 0;
    total_err = 0;
    for (const auto& p : panels) {
      total += p.value;
      total_err += p.error;
    }
  };
  recompute();

  int splits = 0;
  while (total_err > std::max(spec.relative_tolerance * std::fabs(total), spec.absolute_floor)) {
    if (splits >= spec.max_subdivisions)
      throw tolerance_error("integrate_semiinfinite: tolerance not met", total, total_err);
    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i)
      if (panels[i].error > panels[worst].error) worst = i;
    Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    if (mid <= p.a || mid >= p.b)
      throw tolerance_error("integrate_semiinfinite: interval exhausted", total, total_err);
    auto left = detail::gk15(f, p.a, mid);
    auto right = detail::gk15(f, mid, p.b);
    panels[worst] = {p.a, mid, left.value, left.error};
    panels.push_back({mid, p.b, right.value, right.error});
    ++splits;
    recompute();
  }
  return total;
}

namespace detail {

/// Adaptive GK15 on a finite interval, same control scheme.
template <class F>
double integrate_finite(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  struct Panel {
    double a, b, value, error;
  };
  std::vector<Panel> panels;
  auto est = gk15(f, a, b);
  panels.push_back({a, b, est.value, est.error});
  double total = est.value, total_err = est.error;
  int splits = 0;
  while (total_err > std::max(spec.relative_tolerance * std::fabs(total), spec.absolute_floor)) {
    if (splits >= spec.max_subdivisions)
      throw tolerance_error("integrate_finite: tolerance not met", total, total_err);
    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i)
      if (panels[i].error > panels[worst].error) worst = i;
    Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    if (mid <= p.a || mid >= p.b)
      throw tolerance_error("integrate_finite: interval exhausted", total, total_err);
    auto l = gk15(f, p.a, mid);
    auto r = gk15(f, mid, p.b);
    panels[worst] = {p.a, mid, l.value, l.error};
    panels.push_back({mid, p.b, r.value, r.error});
    ++splits;
    total = 0;
    total_err = 0;
    for (const auto& q : panels) {
      total += q.value;
      total_err += q.error;
    }
  }
  return total;
}

}  // namespace detail

/// Principal-value exponential integral Ei(x) for x < 0.
/// Monotone increasing to 0 as x -> -inf, always negative.
double exp_integral_Ei(double x);

/// sum_{l>=1} l^p Ei(-2 tau l) for p in {2,4}, truncated when the tail is
/// below tail_tolerance relative to the partial sum.  Always negative.
double ei_power_sum(int p, double tau, const SeriesSpec& spec = {});

/// Five-point central difference with step h = scale*eps^(1/5) plus one
/// Richardson refinement; error estimated from the refinement difference.
template <class F>
Derivative central_derivative(F&& f, double x, double scale) {
  const double h = scale * std::pow(std::numeric_limits<double>::epsilon(), 0.2);
  auto five_point = [&](double step, double fm1, double fp1) {
    const double fm2 = f(x - 2 * step);
    const double fp2 = f(x + 2 * step);
    return (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * step);
  };
  const double f_mh = f(x - h);
  const double f_ph = f(x + h);
  const double f_mh2 = f(x - 0.5 * h);
  const double f_ph2 = f(x + 0.5 * h);
  const double d1 = five_point(h, f_mh, f_ph);
  // The half-step stencil reuses f(x -+ h) as its outer points.
  const double d2 = (f_mh - 8 * f_mh2 + 8 * f_ph2 - f_ph) / (6 * h);
  const double value = d2 + (d2 - d1) / 15.0;
  const double error = std::fabs(d2 - d1) / 15.0 + 4 * std::numeric_limits<double>::epsilon() * std::fabs(value);
  return {value, error, error > 1e-4 * std::fabs(value)};
}

}  // namespace casimir
