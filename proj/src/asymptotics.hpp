// The scaled gamma function, its Stirling partial sums, and three
// independent evaluations of the expansion remainder.
//
//   Gamma*(x) = Gamma(x) / (sqrt(2 pi) x^{x-1/2} e^{-x})
//             ~ sum_{n>=0} (-1)^n gamma_n x^{-n}        (x -> infinity)
//
//   R_m(x) = Gamma*(x) - sum_{n=0}^{m-1} (-1)^n gamma_n x^{-n}
//
// The three routes to R_m(x):
//   * difference:  Gamma*(x) via its own integral representation minus the
//     partial sum -- the oracle, accurate to ~1e-12 absolute but built on
//     catastrophic cancellation for large x (R_m shrinks like x^{-m});
//   * new double integral:
//       R_m(x) = x^{-m}/sqrt(2 pi) * int_0^inf e^{-w} w^{m+1/2}
//                  [ 1/(2 pi i) oint z h'(z) h(z)^{-m-1/2} / (h(z)-w/x) dz ]
//                dw,
//     inner contour = the rectangle [z_- - 1, z_+ + 1] x [-1, 1] around the
//     two real roots h(z_+-) = w/x;
//   * Boyd's double integral: same shape with outer weight w^{m-1/2} and
//     inner integrand h(z)^{-m+1/2} / (h(z)-w/x), no z h' factor.
//
// Fractional powers of h on the rectangles are evaluated in the g-form
// (h_function.hpp): h^{-m-+1/2} = 2^{m+-1/2} z^{-2m-+1} g^{-m-+1/2} -- the
// single-valued continuation; a literal principal h^alpha is discontinuous
// on these contours.
//
// Gamma*(x) itself comes from the saddle-point form of Euler's integral,
//   Gamma*(x) = 1/sqrt(2 pi x) * int_0^inf e^{-w} w^{-1/2} G(w) dw,
//   G(w) = sqrt(w) [ 1/(e^{z_+} - 1) + 1/(1 - e^{z_-}) ],  z_+- = roots of
//   h(z) = w/x;  G(0+) = sqrt(2x).
// This never overflows: it is usable at any x > 0, unlike Gamma itself.

#pragma once

#include "quadrature.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stirling::asym {

// Gamma(x) by the Euler integral (DE quadrature), for 0 < x <= 171.6
// (DomainError outside: the value overflows double; Gamma* does not).
// x < 1 is lifted through Gamma(x) = Gamma(x+1)/x.
double gamma_reference(double x, const quad::ExpWeightedOptions& opts = {});

// Gamma*(x) by the saddle integral; any x > 0.
double gamma_star_reference(double x,
                            const quad::ExpWeightedOptions& opts = {});

// sum_{n=0}^{m-1} (-1)^n gamma_n x^{-n}; m = 0 is the empty sum.
double partial_sum(int m, double x);

// Gamma*(x) minus the m-term partial sum -- the remainder oracle.
double remainder_by_difference(int m, double x);

struct RemainderOptions {
  quad::ExpWeightedOptions outer{.tol = 1e-11};
  quad::SegmentedOptions inner{.tol = 1e-13};
};

struct RemainderEstimate {
  double value = 0.0;
  double error_estimate = 0.0;     // composed: outer delta + inner mass +
                                   // imaginary leakage, all prefactored
  std::uint64_t evaluations = 0;   // inner integrand + outer g evaluations
};

// R_m(x) by the new double integral (m >= 1, x > 0).
RemainderEstimate remainder_new_integral(int m, double x,
                                         const RemainderOptions& opts = {});

// R_m(x) by Boyd's double integral (m >= 1, x > 0).
RemainderEstimate remainder_boyd_integral(int m, double x,
                                          const RemainderOptions& opts = {});

struct EquivalencePair {
  int m = 0;
  double x = 0.0;
};

struct EquivalenceRow {
  int m = 0;
  double x = 0.0;
  double r_difference = 0.0;
  double r_new = 0.0;
  double r_boyd = 0.0;
  // max |a - b| over the three route pairs, relative to the largest |route|.
  double max_pairwise_delta = 0.0;
  bool passed = false;
  std::string message; // "ok" or the failure description
};

// Runs all three routes for every pair; a row that throws is reported
// failed (message = reason, values NaN) and the batch continues.  A row
// passes when max_pairwise_delta <= tol.
std::vector<EquivalenceRow>
equivalence_report(const std::vector<EquivalencePair>& pairs, double tol,
                   const RemainderOptions& opts = {});

} // namespace stirling::asym
