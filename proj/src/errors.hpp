// Exception taxonomy for the stirling core library.
//
// The C API translates these to status codes at the boundary; inside the
// C++ core they are ordinary exceptions.  The taxonomy mirrors the failure
// modes of the artifact:
//
//   UsageError          bad arguments (lengths, order mismatches, bad names)
//   DomainError         mathematically out of domain (x <= 0, a0 != 1, ...)
//   InsufficientOrder   a series was built too short for the requested
//                       derivative; caller must rebuild at higher order
//   ContourError        a contour failed its enclosure/branch preflight
//   AccuracyError       a quadrature hit its refinement cap before reaching
//                       tolerance; carries the best result and its estimate
//   IntegrityError      independent exact methods disagreed (should never
//                       happen; loud by design)

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace stirling {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct InsufficientOrderError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ContourError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Carries the best-effort result so callers can still inspect it.
struct AccuracyError : std::runtime_error {
  std::complex<double> value;
  double error_estimate;
  std::uint64_t evaluations;
  AccuracyError(const std::string& msg, std::complex<double> v, double err,
                std::uint64_t evals)
      : std::runtime_error(msg), value(v), error_estimate(err),
        evaluations(evals) {}
};

struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace stirling
