#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace chebcap {

/// Malformed or out-of-contract input (bad intervals, degree beyond the cap, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The inverse image of [-1,1] has no real points.
class EmptyImage : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Coefficients left the representable range.
class NumericOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An iterative solver stopped without meeting its tolerance. Carries the
/// last reference set and levelled error so callers can inspect the iterate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> last_reference,
                   double last_level, double last_gap)
      : std::runtime_error(what),
        last_reference_(std::move(last_reference)),
        last_level_(last_level),
        last_gap_(last_gap) {}

  const std::vector<double>& last_reference() const noexcept { return last_reference_; }
  double last_level() const noexcept { return last_level_; }
  double last_gap() const noexcept { return last_gap_; }

 private:
  std::vector<double> last_reference_;
  double last_level_;
  double last_gap_;
};

/// Degree cap shared by conversions, compositions and the Remez solver.
/// Defaults to 100; the environment variable CHEBCAP_MAX_DEGREE overrides it.
int degree_cap();

}  // namespace chebcap
