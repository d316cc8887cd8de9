#include "casimir/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "casimir/asymptotics.hpp"
#include "casimir/dilute.hpp"
#include "casimir/materials.hpp"

namespace casimir {

namespace {

constexpr double kEvPerJoule = 1.0 / electron_volt;

double tau_of(double a, double T) { return PlateConfig{a, T}.tau(); }
double temp_of(double a, double tau) {
  return tau * PlateConfig{a, 300.0}.effective_temperature() / (2.0 * pi);
}

void window(std::vector<CheckResult>& out, const std::string& id, const std::string& desc,
            double measured, double lo, double hi, const std::string& note = {}) {
  out.push_back({id, desc, measured, lo, hi, measured >= lo && measured <= hi, note});
}

void flag(std::vector<CheckResult>& out, const std::string& id, const std::string& desc,
          bool ok, double measured, const std::string& note = {}) {
  out.push_back({id, desc, measured, 1.0, 1.0, ok, note});
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double xtol) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > xtol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Scan + parabolic refinement; returns (x_min, f_min).
std::pair<double, double> minimize(const std::function<double(double)>& f, double lo, double hi,
                                   int coarse) {
  std::vector<double> xs(coarse), fs(coarse);
  int best = 0;
  for (int i = 0; i < coarse; ++i) {
    xs[i] = lo + (hi - lo) * i / (coarse - 1);
    fs[i] = f(xs[i]);
    if (fs[i] < fs[best]) best = i;
  }
  if (best == 0 || best == coarse - 1) return {xs[best], fs[best]};
  // two parabolic steps around the bracket
  double x0 = xs[best - 1], x1 = xs[best], x2 = xs[best + 1];
  double f0 = fs[best - 1], f1 = fs[best], f2 = fs[best + 1];
  for (int it = 0; it < 2; ++it) {
    const double denom = (x1 - x0) * (f1 - f2) - (x1 - x2) * (f1 - f0);
    if (denom == 0.0) break;
    const double xv =
        x1 - 0.5 * ((x1 - x0) * (x1 - x0) * (f1 - f2) - (x1 - x2) * (x1 - x2) * (f1 - f0)) / denom;
    if (!(xv > std::min(x0, x2) && xv < std::max(x0, x2))) break;
    const double fv = f(xv);
    if (fv < f1) {
      if (xv < x1) {
        x2 = x1;
        f2 = f1;
      } else {
        x0 = x1;
        f0 = f1;
      }
      x1 = xv;
      f1 = fv;
    } else {
      if (xv < x1) {
        x0 = xv;
        f0 = fv;
      } else {
        x2 = xv;
        f2 = fv;
      }
    }
  }
  return {x1, f1};
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(std::fabs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

std::vector<CheckResult> validate_dilute(const SolverSettings& s) {
  std::vector<CheckResult> out;
  const PermittivityModel ideal = IdealMetal{};

  // --- 1. pressure extremum, closed form Eq.-(8) route, a = 2 um, eta = 0.1
  {
    const double a = 2e-6, eta = 0.1;
    const double p0 = low_T_pressure({eta, 0.0, a});
    auto dP = [&](double T) { return dilute_pressure({eta, tau_of(a, T), a}) / p0 - 1.0; };
    double worst = -1e300;
    for (double T = 50.0; T <= 340.0; T += 10.0) worst = std::max(worst, dP(T));
    flag(out, "1a", "dilute delta_T P < 0 on [50,340] K (a=2um, eta=0.1)", worst < 0.0, worst);
    auto [tmin, dmin] = minimize(dP, 150.0, 340.0, 20);
    window(out, "1b", "dilute delta_T P minimum value", dmin, -0.008, -0.006);
    window(out, "1c", "dilute delta_T P minimum location (K)", tmin, 260.0, 280.0);
    window(out, "1d", "dilute delta_T P at 400 K", dP(400.0), 0.016, 0.020);
    const double tz = bisect(dP, 300.0, 390.0, 0.05);
    window(out, "1e", "dilute delta_T P sign change (K)", tz, 333.0, 353.0);
    // engine cross-check at the minimum
    const double dp_eng =
        relative_thermal_correction_P({a, 270.0}, ideal, DiluteEps{eta}, s);
    window(out, "1f", "engine delta_T P at 270 K", dp_eng, -0.008, -0.006);
  }

  // --- 2. low-temperature asymptote tracks the engine up to 220 K (a = 1 um)
  {
    const double a = 1e-6, eta = 0.1;
    const PermittivityModel diel = DiluteEps{eta};
    const double f0_eng = free_energy({a, 0.0}, ideal, diel, s);
    const double f0_17 = low_T_free_energy({eta, 0.0, a});
    double worst = 0.0;
    for (double T : {50.0, 100.0, 150.0, 190.0, 220.0}) {
      const double fe = free_energy({a, T}, ideal, diel, s);
      const double f17 = low_T_free_energy({eta, tau_of(a, T), a});
      worst = std::max(worst, std::fabs((f17 - fe) / fe));
    }
    window(out, "2a", "|Eq17 - engine|/|F| for T <= 220 K", worst, 0.0, 0.005);
    double prev = 0.0;
    bool monotone = true;
    double measured_prev = 0.0;
    for (double T : {250.0, 300.0, 400.0, 500.0, 600.0}) {
      const double fe = free_energy({a, T}, ideal, diel, s);
      const double d_eng = fe / f0_eng - 1.0;
      const double d_17 = low_T_free_energy({eta, tau_of(a, T), a}) / f0_17 - 1.0;
      const double div = std::fabs(d_17 - d_eng);
      if (div <= prev) monotone = false;
      prev = div;
      measured_prev = div;
    }
    flag(out, "2b", "asymptote divergence grows monotonically above 220 K", monotone,
         measured_prev);
  }

  // --- 3. high-temperature asymptote at T = 1500 K
  {
    const double a = 1e-6, eta = 0.1, T = 1500.0;
    const double fe = free_energy({a, T}, ideal, DiluteEps{eta}, s);
    const double f9 = high_T_free_energy({eta, tau_of(a, T), a});
    window(out, "3", "|Eq9 - engine|/|engine| at 1500 K", std::fabs((f9 - fe) / fe), 0.0, 0.004,
           "engine keeps all orders in eta and the e^-tau tail the asymptote drops; "
           "the honest residual at tau = 8.23 is ~0.007");
  }

  // --- 7. route equivalence: Abel-Plana vs direct Matsubara closed form
  {
    double worst = 0.0;
    for (double eta : {0.001, 0.01, 0.1}) {
      for (int i = 0; i < 20; ++i) {
        const double tau = 0.2 * std::pow(5.0 / 0.2, i / 19.0);
        const DiluteParams p{eta, tau, 1e-6};
        const double direct = dilute_free_energy(p);
        const double ap = abel_plana_free_energy(p);
        worst = std::max(worst, std::fabs(ap / direct - 1.0));
      }
    }
    window(out, "7", "Abel-Plana vs closed form, worst of 3x20 grid", worst, 0.0, 1e-8);
  }

  // --- 8. thermodynamic self-consistency
  {
    std::mt19937 rng(20240917u);
    std::uniform_real_distribution<double> ua(std::log(0.3e-6), std::log(2.5e-6));
    std::uniform_real_distribution<double> ut(std::log(100.0), std::log(1200.0));
    std::uniform_real_distribution<double> ue(1.5, 12.0);
    std::uniform_real_distribution<double> uh(0.01, 0.1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int fails = 0;
    double worst_excess = 0.0;
    const int n_configs = 200;
    for (int i = 0; i < n_configs; ++i) {
      const double a = std::exp(ua(rng));
      const double T = std::exp(ut(rng));
      PermittivityModel diel;
      if (coin(rng) < 0.5)
        diel = ConstantEps{ue(rng)};
      else
        diel = DiluteEps{uh(rng)};
      SolverSettings child = s;
      child.quadrature.relative_tolerance = 1e-12;
      child.matsubara_tail_tol = 1e-12;
      const bool do_entropy = (i % 2) == 0;
      const double eps5 = std::pow(std::numeric_limits<double>::epsilon(), 0.2);
      if (do_entropy) {
        const double S = entropy({a, T}, ideal, diel, s);
        auto f = [&](double TT) { return free_energy({a, TT}, ideal, diel, child); };
        // independent stencil: step fixed at 15% of T (the engine picks its
        // own, usually different, scale)
        const Derivative ind = central_derivative(f, T, 0.15 * T / eps5);
        const double bound = 3.0 * ind.error + 1e-6 * std::fabs(S) + 1e-30;
        const double excess = std::fabs(-ind.value - S) / bound;
        worst_excess = std::max(worst_excess, excess);
        if (excess > 1.0) ++fails;
      } else {
        const double P = pressure({a, T}, ideal, diel, s);
        auto f = [&](double aa) { return free_energy({aa, T}, ideal, diel, child); };
        const Derivative ind = central_derivative(f, a, 3.0 * a);
        const double bound = 3.0 * ind.error + 1e-6 * std::fabs(P) + 1e-30;
        const double excess = std::fabs(-ind.value - P) / bound;
        worst_excess = std::max(worst_excess, excess);
        if (excess > 1.0) ++fails;
      }
    }
    flag(out, "8a", "S = -dF/dT, P = -dF/da at 200 random configurations", fails == 0,
         worst_excess, "measured: worst |diff|/bound over the sample");

    // closed forms against the differentiated Eq. (6)
    std::mt19937 rng2(7u);
    std::uniform_real_distribution<double> utau(0.15, 6.0);
    double worst_s = 0.0, worst_p = 0.0;
    for (int i = 0; i < 25; ++i) {
      const double eta = uh(rng2);
      const double tau = utau(rng2);
      const double a = std::exp(ua(rng2));
      const double T = temp_of(a, tau);
      auto fT = [&](double TT) { return dilute_free_energy({eta, tau_of(a, TT), a}); };
      const double s_closed = dilute_entropy({eta, tau, a});
      worst_s = std::max(worst_s,
                         std::fabs(-central_derivative(fT, T, T).value / s_closed - 1.0));
      auto fa = [&](double aa) { return dilute_free_energy({eta, tau_of(aa, T), aa}); };
      const double p_closed = dilute_pressure({eta, tau, a});
      worst_p = std::max(worst_p,
                         std::fabs(-central_derivative(fa, a, a).value / p_closed - 1.0));
    }
    window(out, "8b", "closed-form entropy vs -dF/dT of Eq. (6)", worst_s, 0.0, 1e-8);
    window(out, "8c", "closed-form pressure vs -dF/da of Eq. (6)", worst_p, 0.0, 1e-8);
  }

  // --- 9. dilute entropy nonnegativity on a dense grid
  {
    double worst = 1e300;
    for (double eta : {0.001, 0.002, 0.005, 0.01, 0.02, 0.05, 0.1, 0.15, 0.2}) {
      const double scale = high_T_entropy({eta, 1.0, 1e-6});
      for (int i = 0; i < 60; ++i) {
        const double tau = 0.01 * std::pow(20.0 / 0.01, i / 59.0);
        worst = std::min(worst, dilute_entropy({eta, tau, 1e-6}) / scale);
      }
    }
    flag(out, "9", "dilute entropy >= 0 on dense (tau, eta) grid", worst >= -1e-15, worst,
         "measured: min S / S_highT over the grid");
  }

  // --- 11. diagnostic constants
  {
    window(out, "11a", "T_eff at a = 1 um (K)", PlateConfig{1e-6, 300.0}.effective_temperature(),
           1144.0, 1146.0);
    const double eta = 0.1, a = 1e-6;
    const double i0 = abel_plana_zero_T_integral(eta, 1.0, {1e-12, 1e-300, 4000});
    const double f_num = -(hbar * c_light / (32.0 * pi * pi * a * a * a)) * i0;
    const double f_ref = -(hbar * c_light * eta / (32.0 * pi * pi * a * a * a)) *
                         (1.0 - 457.0 * eta / 960.0);
    window(out, "11b", "zero-T dilute free energy vs closed form (rel)",
           std::fabs(f_num / f_ref - 1.0), 0.0, 1e-10);
  }

  return out;
}

std::vector<CheckResult> validate_const_eps(const SolverSettings& s) {
  std::vector<CheckResult> out;
  const PermittivityModel ideal = IdealMetal{};

  // --- 4. sign structure of delta_T F at 300 K versus separation
  {
    const double T = 300.0;
    auto dF = [&](double eps0) {
      return [&, eps0](double a) {
        return relative_thermal_correction_F({a, T}, ideal, ConstantEps{eps0}, s);
      };
    };
    {
      auto d10 = dF(10.0);
      const double a1 = bisect(d10, 0.12e-6, 0.40e-6, 0.004e-6);
      const double a2 = bisect(d10, 0.95e-6, 1.40e-6, 0.004e-6);
      window(out, "4a", "eps0=10 zero crossing a1 (um)", a1 * 1e6, 0.17, 0.23);
      window(out, "4b", "eps0=10 zero crossing a2 (um)", a2 * 1e6, 1.17, 1.33);
      auto [amin, dmin] = minimize(d10, 0.75e-6, 1.05e-6, 7);
      window(out, "4c", "eps0=10 minimum location (um)", amin * 1e6, 0.83, 0.97);
      window(out, "4d", "eps0=10 |minimum| of delta_T F", -dmin, 0.003, 0.007);
    }
    for (double eps0 : {3.0, 6.0}) {
      auto d = dF(eps0);
      bool positive = true, nondecreasing = true;
      double prev = -1e300;
      for (int i = 0; i < 8; ++i) {
        const double a = (0.1 + (1.4 - 0.1) * i / 7.0) * 1e-6;
        const double v = d(a);
        if (v <= 0.0) positive = false;
        if (v < prev - 1e-4) nondecreasing = false;
        prev = v;
      }
      flag(out, eps0 == 3.0 ? "4e" : "4f",
           "eps0=" + std::to_string(static_cast<int>(eps0)) + " monotone-positive trend",
           positive && nondecreasing, prev);
    }
    {
      auto d7 = dF(7.0);
      std::vector<double> as, vs;
      for (double a = 0.10; a <= 1.401; a += 0.05) {
        as.push_back(a);
        vs.push_back(d7(a * 1e-6));
      }
      std::size_t imin = 1;
      for (std::size_t i = 1; i + 1 < vs.size(); ++i)
        if (vs[i] < vs[imin]) imin = i;
      std::size_t imax = 1;  // the bump before the dip
      for (std::size_t i = 1; i < imin; ++i)
        if (vs[i] > vs[imax]) imax = i;
      const bool has_both = imax > 0 && imax < imin && imin + 1 < vs.size() &&
                            vs[imax] > vs.front() && vs[imax] > vs[imin] + 1e-4 &&
                            vs.back() > vs[imin] + 1e-3;
      flag(out, "4g", "eps0=7 has both an interior maximum and minimum", has_both,
           vs[imin], "measured: interior minimum of delta_T F");
    }
  }

  // --- 5. entropy dip for eps0 = 7 at a = 600 nm
  {
    const double a = 600e-9;
    const PermittivityModel diel = ConstantEps{7.0};
    auto S = [&](double T) { return entropy({a, T}, ideal, diel, s); };
    auto [tmin, smin] = minimize(S, 180.0, 290.0, 12);
    window(out, "5a", "entropy minimum (keV m^-2 K^-1)", smin * kEvPerJoule / 1e3, -16.0, -12.0);
    window(out, "5b", "entropy minimum location (K)", tmin, 230.0, 246.0);
    const double z1 = bisect(S, 100.0, 180.0, 0.5);
    const double z2 = bisect(S, 290.0, 380.0, 0.5);
    window(out, "5c", "entropy negative from (K)", z1, 127.0, 147.0);
    window(out, "5d", "entropy negative until (K)", z2, 301.0, 321.0);
  }

  // --- 6. Nernst coefficient fit on tau in [0.02, 0.1]
  {
    const double a = 1e-6;
    bool all_ok = true;
    double worst_coeff = 0.0, worst_slope = 0.0;
    for (double eps0 : {1.1, 3.0, 7.0, 10.0}) {
      const PermittivityModel diel = ConstantEps{eps0};
      std::vector<double> taus, svals;
      for (double tau : {0.02, 0.035, 0.055, 0.08, 0.1}) {
        taus.push_back(tau);
        svals.push_back(entropy({a, temp_of(a, tau)}, ideal, diel, s));
      }
      const double slope = fit_loglog_slope(taus, svals);
      // C from least squares of S/tau^2
      double csum = 0.0;
      for (std::size_t i = 0; i < taus.size(); ++i) csum += svals[i] / (taus[i] * taus[i]);
      const double c_fit = csum / static_cast<double>(taus.size());
      const double c_ref = const_eps_low_T_entropy({eps0, a, 1.0});
      const double cerr = std::fabs(c_fit / c_ref - 1.0);
      if (cerr > 0.05 || std::fabs(slope - 2.0) > 0.05) all_ok = false;
      worst_coeff = std::max(worst_coeff, cerr);
      worst_slope = std::max(worst_slope, std::fabs(slope - 2.0));
    }
    flag(out, "6", "entropy fits C tau^2 with the low-T coefficient (5%, slope 2.00+-0.05)",
         all_ok, worst_coeff,
         "subleading tau*log(tau) corrections are not negligible on this window; "
         "worst slope deviation " + std::to_string(worst_slope));
  }

  return out;
}

std::vector<CheckResult> validate_materials(const SolverSettings& s) {
  std::vector<CheckResult> out;
  const MaterialRecord au = builtin_material("au-drude");
  const MaterialRecord si = builtin_material("si-fallback");
  const MaterialRecord al = builtin_material("alumina");
  const double T = 300.0;

  {
    auto d = [&](double a) {
      return relative_thermal_correction_F({a, T}, au.model, si.model, s);
    };
    double worst = -1e300;
    for (double a : {0.30, 0.50, 0.70, 0.90, 1.00}) worst = std::max(worst, d(a * 1e-6));
    flag(out, "10a", "Au-Drude + Si fallback: delta_T F < 0 across [0.3, 1.0] um", worst < 0.0,
         worst);
    auto [amin, dmin] = minimize(d, 0.7e-6, 1.2e-6, 7);
    window(out, "10b", "Au+Si minimum of delta_T F", dmin, -0.009, -0.003);
    window(out, "10c", "Au+Si minimum location (um)", amin * 1e6, 0.80, 1.10,
           "fallback optical models; shape-level check");
  }
  {
    auto d = [&](double a) {
      return relative_thermal_correction_F({a, T}, au.model, al.model, s);
    };
    bool positive = true, increasing = true;
    double prev = -1e300, v = 0.0;
    for (double a = 0.3; a <= 1.401; a += 0.1375) {
      v = d(a * 1e-6);
      if (v <= 0.0) positive = false;
      if (v <= prev) increasing = false;
      prev = v;
    }
    flag(out, "10d", "Au-Drude + alumina: delta_T F positive and increasing on [0.3, 1.4] um",
         positive && increasing, v);
  }
  return out;
}

std::vector<CheckResult> validate_all(const SolverSettings& s) {
  auto all = validate_dilute(s);
  auto b = validate_const_eps(s);
  auto c = validate_materials(s);
  all.insert(all.end(), b.begin(), b.end());
  all.insert(all.end(), c.begin(), c.end());
  return all;
}

}  // namespace casimir
