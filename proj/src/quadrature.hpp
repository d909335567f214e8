// Deterministic quadrature for the two integral shapes in this library:
//
//  * complex contour integrals over piecewise paths (lines + circular arcs),
//    by composite 16-node Gauss-Legendre panels with a panel-doubling error
//    estimate (error = |change under the last doubling|);
//  * semi-infinite exponentially weighted integrals
//        I = int_0^inf e^{-w} w^p g(w) dw   (p > -1),
//    by the double-exponential map w = exp(s - exp(-s)) and the trapezoid
//    rule with level halving; the tails are truncated where the weighted
//    terms fall below 1e-18 of the accumulated L1 mass.
//
// Everything uses fixed node tables and fixed refinement schedules: rerunning
// an integral gives bit-identical results.  When a refinement cap is hit
// before the tolerance, an AccuracyError carrying the best result is thrown
// (the result is still inside the exception object).
//
// Also here: the real zero pair of h(z) = e^z - z - 1 = c, used both by the
// saddle representation of Gamma* and to place the remainder contours.

#pragma once

#include "errors.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <variant>
#include <vector>

namespace stirling::quad {

using Complex = std::complex<double>;

struct QuadResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  std::uint64_t evaluations = 0;
};

class ContourPath {
public:
  struct Line {
    Complex from, to;
  };
  struct Arc {
    Complex center;
    double radius;
    double angle_from, angle_to; // radians; may wrap past 2*pi
  };
  using Segment = std::variant<Line, Arc>;

  explicit ContourPath(std::vector<Segment> segments);

  // Full circle, counterclockwise, starting at angle 0.
  static ContourPath circle(Complex center, double radius);
  // Axis-aligned rectangle [x0,x1] x [y0,y1], counterclockwise from
  // (x0, y0).
  static ContourPath rectangle(double x0, double x1, double y0, double y1);

  const std::vector<Segment>& segments() const { return segments_; }
  bool closed() const { return closed_; }
  double length() const { return length_; }

  // Point and d(point)/d(tau) at local parameter tau in [0,1].
  static std::pair<Complex, Complex> at(const Segment& s, double tau);
  static double segment_length(const Segment& s);

private:
  std::vector<Segment> segments_;
  bool closed_ = false;
  double length_ = 0.0;
};

struct SegmentedOptions {
  int start_panels = 64;  // across the whole path, length-weighted
  int max_panels = 8192;  // refinement cap (total)
  double tol = 1e-12;     // converged when |delta| <= tol * max(1, |I|)
};

// Integral of f along the path (sum over segments).  Returns the refined
// value with error_estimate = |last doubling delta|.
QuadResult integrate_segmented(const std::function<Complex(Complex)>& f,
                               const ContourPath& path,
                               const SegmentedOptions& opts = {});

struct ExpWeightedOptions {
  // Converged when |delta| <= max(tol * max(|I|, floor), 64 eps * L1mass);
  // the L1 term accepts the rounding plateau of integrands whose value is
  // produced by internal cancellation.
  double tol = 1e-12;
  double floor = 0.0;      // absolute scale floor for the tolerance test
  int max_level = 9;       // finest step h = 0.5 / 2^max_level
  double term_cutoff = 1e-18; // tail truncation relative to the L1 mass
};

// int_0^inf e^{-w} w^{m_power} g(w) dw, m_power > -1.
QuadResult
integrate_exp_weighted(const std::function<double(double)>& g, double m_power,
                       const ExpWeightedOptions& opts = {});
// Same machinery for complex-valued g (used by the remainder double
// integrals, whose inner contour values carry a tiny imaginary part).
QuadResult
integrate_exp_weighted_complex(const std::function<Complex(double)>& g,
                               double m_power,
                               const ExpWeightedOptions& opts = {});

// Winding number of the path around p, by continuous argument tracking on a
// fixed sampling (512 samples per segment).
int winding_number(const ContourPath& path, Complex p);

// Winding number of the closed curve t -> f(z(t)) around the origin -- the
// argument-principle zero count when f is analytic inside.  Throws
// ContourError if a sample lands on (numerical) zero.
int winding_number_of_image(const ContourPath& path,
                            const std::function<Complex(Complex)>& f);

// Minimum of |f(z)| over the fixed path sampling.
double min_abs_on_path(const ContourPath& path,
                       const std::function<Complex(Complex)>& f);

// The two real solutions z_- < 0 < z_+ of e^z - z - 1 = c (c > 0), by
// safeguarded Newton on provable brackets z_+ in (0, sqrt(2c)] and
// z_- in [-(c+1), -sqrt(2c)].  c = 0 gives (0, 0).  Relative residual
// |h(z) - c| <= 1e-14 * c.
std::pair<double, double> real_zeros_of_h(double c);

} // namespace stirling::quad
