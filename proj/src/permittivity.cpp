#include "casimir/permittivity.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "casimir/constants.hpp"

namespace casimir {

void OpticalDataset::validate() const {
  if (omega.size() != n1.size() || omega.size() != n2.size())
    throw load_error("optical dataset: column lengths differ", 0);
  if (omega.size() < 8)
    throw load_error("optical dataset: need at least 8 rows", static_cast<long>(omega.size()));
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const long row = static_cast<long>(i) + 1;
    if (!(omega[i] > 0.0) || !std::isfinite(omega[i]))
      throw load_error("optical dataset: non-positive frequency", row);
    if (!(n1[i] > 0.0)) throw load_error("optical dataset: n1 must be positive", row);
    if (n2[i] < 0.0) throw load_error("optical dataset: n2 must be nonnegative", row);
    if (i > 0 && omega[i] <= omega[i - 1])
      throw load_error("optical dataset: frequencies must be strictly increasing", row);
  }
  if (omega.back() < 100.0 * omega.front())
    throw load_error("optical dataset: frequency range must span two decades", 0);
}

double im_eps_from_nk(double n1, double n2) {
  if (n1 < 0.0 || n2 < 0.0) throw std::domain_error("im_eps_from_nk: negative input");
  return 2.0 * n1 * n2;
}

ImEpsSamples im_eps_samples(const OpticalDataset& data, std::optional<DrudeParams> drude) {
  data.validate();
  ImEpsSamples s;
  s.omega = data.omega;
  s.im_eps.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i)
    s.im_eps.push_back(im_eps_from_nk(data.n1[i], data.n2[i]));
  s.drude_below = drude;
  return s;
}

namespace {

// (2/pi) int_0^W  w * [wp^2 g / (w (w^2+g^2))] / (w^2 + xi^2) dw, the exact
// low-frequency Drude piece of the dispersion integral.
double drude_partial(const DrudeParams& p, double upper, double xi) {
  const double g = p.gamma;
  const double pref = (2.0 / pi) * p.omega_p * p.omega_p * g;
  const double dd = xi * xi - g * g;
  if (std::fabs(dd) > 1e-6 * (xi * xi + g * g)) {
    return pref / dd * (std::atan(upper / g) / g - std::atan(upper / xi) / xi);
  }
  // xi ~ gamma: integrand ~ 1/(w^2+g^2)^2, use the closed form of that limit
  // bridged linearly in (xi - g).
  auto near = [&](double q) {
    return pref * 0.5 * (std::atan(upper / q) / q + upper / (q * q + upper * upper)) / (q * q);
  };
  return near(0.5 * (xi + g));
}

double segment_integral(double w1, double w2, double g1, double g2, double xi,
                        const QuadratureSpec& spec) {
  if (g1 <= 0.0 || g2 <= 0.0) return 0.0;  // lossless gap contributes nothing
  const double p = std::log(g2 / g1) / std::log(w2 / w1);
  auto f = [&](double w) {
    return g1 * std::pow(w / w1, p) * w / (w * w + xi * xi);
  };
  QuadratureSpec local = spec;
  local.absolute_floor = std::max(spec.absolute_floor, 1e-18 * g1 * w1);
  return detail::integrate_finite(f, w1, w2, local);
}

}  // namespace

double kramers_kronig(const ImEpsSamples& s, double xi, const QuadratureSpec& spec) {
  if (!(xi > 0.0)) throw std::domain_error("kramers_kronig: xi must be positive");
  if (s.omega.size() < 2) throw std::invalid_argument("kramers_kronig: need >= 2 samples");
  double acc = 0.0;
  if (s.drude_below) acc += drude_partial(*s.drude_below, s.omega.front(), xi);

  QuadratureSpec seg = spec;
  seg.max_subdivisions = std::max(spec.max_subdivisions, 64);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < s.omega.size(); ++i)
    sum += segment_integral(s.omega[i], s.omega[i + 1], s.im_eps[i], s.im_eps[i + 1], xi, seg);

  if (s.power_tail_above) {
    const std::size_t n = s.omega.size();
    const double g1 = s.im_eps[n - 2], g2 = s.im_eps[n - 1];
    if (g1 > 0.0 && g2 > 0.0) {
      const double p = std::log(g2 / g1) / std::log(s.omega[n - 1] / s.omega[n - 2]);
      if (p < -1.0) {
        double w = s.omega[n - 1];
        // extend decade by decade until the continuation drops below 1e-8
        double gw = g2;
        while (gw > 1e-8 && w < 1e25) {
          const double w2 = 10.0 * w;
          sum += segment_integral(w, w2, gw, gw * std::pow(10.0, p), xi, seg);
          w = w2;
          gw *= std::pow(10.0, p);
        }
      }
    }
  }
  return 1.0 + acc + (2.0 / pi) * sum;
}

Tabulated::Tabulated(OpticalDataset data, std::optional<DrudeParams> extrapolation,
                     const QuadratureSpec& spec)
    : data_(std::move(data)), drude_(extrapolation) {
  data_.validate();
  auto samples = im_eps_samples(data_, std::nullopt);  // drude part added analytically
  const double lo = 1e9, hi = 1e19;
  const int n = 481;
  log_xi_.resize(n);
  log_km1_.resize(n);
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1);
    const double xi = std::exp(lx);
    const double k = kramers_kronig(samples, xi, spec) - 1.0;  // data + tail part only
    log_xi_[i] = lx;
    log_km1_[i] = std::log(std::max(k, 1e-300));
  }
  // xi -> 0 limit of the data part: (2/pi) int Im eps / w dw
  k_zero_ = kramers_kronig(samples, lo * 1e-2, spec) - 1.0;
}

EpsValue Tabulated::eval(double xi) const {
  if (xi < 0.0) throw std::domain_error("Tabulated::eval: xi must be >= 0");
  if (!drude_) {
    if (xi < trusted_min())
      throw std::range_error("Tabulated::eval: below trusted range and no Drude extrapolation configured");
  } else if (xi == 0.0) {
    return EpsValue::ideal();  // Drude-extended metal diverges at zero frequency
  }
  double k;
  if (xi <= std::exp(log_xi_.front())) {
    k = k_zero_;
  } else if (xi >= std::exp(log_xi_.back())) {
    // power-law continuation of the last grid step (k ~ C/xi^2 regime)
    const std::size_t n = log_xi_.size();
    const double slope = (log_km1_[n - 1] - log_km1_[n - 2]) / (log_xi_[n - 1] - log_xi_[n - 2]);
    k = std::exp(log_km1_[n - 1] + slope * (std::log(xi) - log_xi_[n - 1]));
  } else {
    const double lx = std::log(xi);
    auto it = std::upper_bound(log_xi_.begin(), log_xi_.end(), lx);
    const std::size_t j = static_cast<std::size_t>(it - log_xi_.begin());
    const double t = (lx - log_xi_[j - 1]) / (log_xi_[j] - log_xi_[j - 1]);
    k = std::exp(log_km1_[j - 1] * (1.0 - t) + log_km1_[j] * t);
  }
  double eps = 1.0 + k;
  if (drude_) {
    const double wp = drude_->omega_p, g = drude_->gamma;
    // exact partial Drude integral up to the first data point
    const double add = [&] {
      const double W = data_.omega.front();
      const double dd = xi * xi - g * g;
      const double pref = (2.0 / pi) * wp * wp * g;
      if (std::fabs(dd) > 1e-6 * (xi * xi + g * g))
        return pref / dd * (std::atan(W / g) / g - std::atan(W / xi) / xi);
      const double q = 0.5 * (xi + g);
      return pref * 0.5 * (std::atan(W / q) / q + W / (q * q + W * W)) / (q * q);
    }();
    eps += add;
  }
  return {eps, false};
}

EpsValue eval_epsilon(const PermittivityModel& model, double xi) {
  if (xi < 0.0) throw std::domain_error("eval_epsilon: xi must be >= 0");
  return std::visit(
      [xi](const auto& m) -> EpsValue {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, IdealMetal>) {
          return EpsValue::ideal();
        } else if constexpr (std::is_same_v<T, ConstantEps>) {
          return {m.eps0, false};
        } else if constexpr (std::is_same_v<T, DiluteEps>) {
          return {1.0 + m.eta, false};
        } else if constexpr (std::is_same_v<T, NinhamParsegian>) {
          const double xir = xi / m.omega_ir;
          const double xuv = xi / m.omega_uv;
          return {1.0 + m.c_ir / (1.0 + xir * xir) + m.c_uv / (1.0 + xuv * xuv), false};
        } else if constexpr (std::is_same_v<T, DrudeMetal>) {
          if (xi == 0.0) return EpsValue::ideal();
          const double wp = m.params.omega_p;
          return {1.0 + wp * wp / (xi * (xi + m.params.gamma)), false};
        } else {
          return m.eval(xi);
        }
      },
      model);
}

std::string validate_model(const PermittivityModel& model) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ConstantEps>) {
          if (m.eps0 < 1.0) throw std::domain_error("ConstantEps: eps0 must be >= 1");
        } else if constexpr (std::is_same_v<T, DiluteEps>) {
          if (!(m.eta > 0.0) || m.eta > 0.2)
            throw std::domain_error("DiluteEps: require 0 < eta <= 0.2");
          if (m.eta > 0.1) return "dilute model with eta > 0.1: O(eta^3) truncation degrades";
        } else if constexpr (std::is_same_v<T, NinhamParsegian>) {
          if (m.c_ir < 0.0 || m.c_uv < 0.0)
            throw std::domain_error("NinhamParsegian: strengths must be nonnegative");
          if (!(m.omega_ir < m.omega_uv))
            throw std::domain_error("NinhamParsegian: require omega_ir < omega_uv");
        } else if constexpr (std::is_same_v<T, DrudeMetal>) {
          if (!(m.params.omega_p > 0.0) || !(m.params.gamma > 0.0) ||
              !(m.params.gamma < m.params.omega_p))
            throw std::domain_error("DrudeMetal: require 0 < gamma < omega_p");
        }
        return {};
      },
      model);
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

OpticalDataset load_optical_csv(const std::filesystem::path& path, FrequencyUnit unit) {
  std::ifstream in(path);
  if (!in) throw load_error("cannot open " + path.string(), 0);
  OpticalDataset d;
  d.provenance = path.string();
  std::string line;
  long row = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_csv(line);
    if (!header_seen) {
      header_seen = true;
      if (cols.size() != 3) throw load_error("expected 3 columns in header", row);
      if (unit == FrequencyUnit::from_header) {
        if (cols[0] == "omega")
          unit = FrequencyUnit::rad_per_s;
        else if (cols[0] == "energy_ev")
          unit = FrequencyUnit::ev;
        else
          throw load_error("unknown frequency column '" + cols[0] + "'", row);
      }
      continue;
    }
    if (cols.size() != 3) throw load_error("expected 3 columns", row);
    double v[3];
    for (int i = 0; i < 3; ++i) {
      try {
        std::size_t pos = 0;
        v[i] = std::stod(cols[i], &pos);
        if (pos != cols[i].size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw load_error("malformed number '" + cols[i] + "'", row);
      }
    }
    double w = v[0];
    if (unit == FrequencyUnit::hertz) w *= 2.0 * pi;
    if (unit == FrequencyUnit::ev) w *= electron_volt / hbar;
    if (v[1] <= 0.0) throw load_error("n1 must be positive", row);
    if (v[2] < 0.0) throw load_error("n2 must be nonnegative", row);
    if (!d.omega.empty() && w <= d.omega.back())
      throw load_error("frequency not strictly increasing", row);
    d.omega.push_back(w);
    d.n1.push_back(v[1]);
    d.n2.push_back(v[2]);
  }
  d.validate();
  return d;
}

void save_optical_csv(const OpticalDataset& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw load_error("cannot write " + path.string(), 0);
  out << "# " << d.provenance << "\n";
  out << "omega,n1,n2\n";
  char buf[128];
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", d.omega[i], d.n1[i], d.n2[i]);
    out << buf;
  }
}

}  // namespace casimir
