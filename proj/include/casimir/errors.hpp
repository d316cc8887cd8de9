#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Requested tolerance could not be met; carries the best estimate obtained
/// so the caller can decide whether to degrade or abort.
class tolerance_error : public std::runtime_error {
 public:
  tolerance_error(const std::string& what, double best, double err_estimate)
      : std::runtime_error(what), best_estimate(best), error_estimate(err_estimate) {}
  double best_estimate;
  double error_estimate;
};

/// Malformed input file; row is 1-based (0 = whole file).
class load_error : public std::runtime_error {
 public:
  load_error(const std::string& what, long row_number)
      : std::runtime_error(what), row(row_number) {}
  long row;
};

/// Configuration outside the supported metal--dielectric scope.
class scope_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace casimir
