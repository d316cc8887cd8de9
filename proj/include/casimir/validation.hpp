#pragma once

#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"

namespace casimir {

/// One validation check: measured value against a closed window.
struct CheckResult {
  std::string id;
  std::string description;
  double measured;
  double lo;
  double hi;
  bool passed;
  std::string note;
};

/// Exactly solvable ideal-metal / dilute-dielectric reproductions plus the
/// route-equivalence and thermodynamic-consistency property checks.
std::vector<CheckResult> validate_dilute(const SolverSettings& s = {});

/// Frequency-independent eps0 reproductions: sign structure of the thermal
/// correction, the entropy dip, and the low-temperature entropy coefficient.
std::vector<CheckResult> validate_const_eps(const SolverSettings& s = {});

/// Real-material (fallback models) shape reproductions.
std::vector<CheckResult> validate_materials(const SolverSettings& s = {});

std::vector<CheckResult> validate_all(const SolverSettings& s = {});

}  // namespace casimir
