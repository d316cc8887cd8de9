#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/numerics.hpp"

namespace casimir {

/// Permittivity along the imaginary frequency axis.  The ideal-metal case is
/// carried as a flag, never as a floating-point infinity, so that downstream
/// arithmetic can branch on it explicitly.
struct EpsValue {
  double value = 1.0;
  bool infinite = false;
  static EpsValue ideal() { return {0.0, true}; }
};

struct DrudeParams {
  double omega_p;  // plasma frequency, rad/s
  double gamma;    // relaxation frequency, rad/s
};

/// Tabulated optical data: rows of (omega, n1, n2) with omega strictly
/// increasing.  Im eps(omega) = 2 n1 n2.
struct OpticalDataset {
  std::vector<double> omega;  // rad/s
  std::vector<double> n1;
  std::vector<double> n2;
  std::string provenance;

  std::size_t size() const { return omega.size(); }
  /// Throws load_error naming the first offending row.
  void validate() const;
};

struct IdealMetal {};

struct ConstantEps {
  double eps0;  // >= 1
};

/// eps = 1 + eta with eta << 1; evaluates like ConstantEps but selects the
/// closed-form dilute pipeline downstream.
struct DiluteEps {
  double eta;
};

struct NinhamParsegian {
  double c_ir;      // infrared absorption strength
  double omega_ir;  // rad/s
  double c_uv;      // ultraviolet absorption strength
  double omega_uv;  // rad/s, > omega_ir
};

struct DrudeMetal {
  DrudeParams params;
};

/// Tabulated data run through the dispersion integral.  Construction
/// precomputes eps(i xi) on a dense logarithmic grid (each node evaluated
/// with kramers_kronig); eval interpolates that grid.
class Tabulated {
 public:
  Tabulated(OpticalDataset data, std::optional<DrudeParams> extrapolation,
            const QuadratureSpec& spec = {});

  const OpticalDataset& data() const { return data_; }
  const std::optional<DrudeParams>& extrapolation() const { return drude_; }

  /// Lowest frequency at which the dataset alone is trusted.
  double trusted_min() const { return data_.omega.front(); }

  EpsValue eval(double xi) const;

 private:
  OpticalDataset data_;
  std::optional<DrudeParams> drude_;
  std::vector<double> log_xi_;   // cache grid
  std::vector<double> log_km1_;  // log(eps_data_part - 1 + ...) remainder, see .cpp
  double k_zero_ = 0.0;          // remainder at xi -> 0
};

using PermittivityModel =
    std::variant<IdealMetal, ConstantEps, DiluteEps, NinhamParsegian, DrudeMetal, Tabulated>;

/// eps(i xi) for xi >= 0.  IdealMetal (and Drude-type metals at xi = 0)
/// report the infinite sentinel.
EpsValue eval_epsilon(const PermittivityModel& model, double xi);

/// Validates model parameters (eps0 >= 1, 0 < eta <= 0.2, omega_ir < omega_uv, ...).
/// Returns a human-readable warning for soft violations (eta > 0.1), empty otherwise.
std::string validate_model(const PermittivityModel& model);

/// Im eps = 2 n1 n2 from the complex refraction index.
double im_eps_from_nk(double n1, double n2);

/// Sampled Im eps(omega) prepared for the dispersion integral: log-log linear
/// between samples, optional Drude form below the first sample, power-law
/// continuation of the last two samples above (cut off where Im eps < 1e-8).
struct ImEpsSamples {
  std::vector<double> omega;
  std::vector<double> im_eps;
  std::optional<DrudeParams> drude_below;
  bool power_tail_above = true;
};

ImEpsSamples im_eps_samples(const OpticalDataset& data, std::optional<DrudeParams> drude);

/// eps(i xi) = 1 + (2/pi) int_0^inf w Im eps(w) / (w^2 + xi^2) dw, xi > 0.
double kramers_kronig(const ImEpsSamples& samples, double xi, const QuadratureSpec& spec = {});

enum class FrequencyUnit { from_header, rad_per_s, hertz, ev };

/// CSV with header `omega,n1,n2` (rad/s) or `energy_ev,n1,n2`; `#` comments.
OpticalDataset load_optical_csv(const std::filesystem::path& path,
                                FrequencyUnit unit = FrequencyUnit::from_header);
void save_optical_csv(const OpticalDataset& data, const std::filesystem::path& path);

}  // namespace casimir
