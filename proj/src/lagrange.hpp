// Lagrange inversion of t = u phi(t) with an explicit contour-integral
// remainder.
//
// For phi analytic at 0 with phi(0) != 0 the inverse branch through the
// origin has the series  t(u) = sum_{n>=1} a_n u^n  with
//   a_n = D^{n-1}[phi^n](0) / n!,
// and for every m >= 1 the exact finite identity
//   t(u) = sum_{n=1}^{m} a_n u^n
//          - u^m/(m-1)! * D^{m-1}[phi^m](0)
//          + Q_m(u),
//   Q_m(u) = u^m/(2 pi i) * contour integral of
//            (1 - u phi'(z)) phi(z)^m / ((z - u phi(z)) z^{m-1}) dz,
// valid whenever the (counterclockwise) contour winds once around 0 and
// encloses exactly one zero of psi(z) = z - u phi(z), namely t(u) itself.
// (Residues: psi'/psi contributes t/u^m at z = t; the z^{m-1} pole returns
// minus the truncated sum.  Both the m-term sum and the correction term are
// parts of one identity -- dropping either breaks reconstruction by a
// multiple of a_m u^m.)
//
// The module serves two callers:
//   * exact coefficient work (inversion_series_coeffs, dt_du_even_series)
//     over RationalSeries, used to cross-check the Stirling coefficients
//     through  gamma_n = (-2)^n (1/2)_n e_n;
//   * numeric reconstruction for the saddle map phi = g^{-1/2}, where
//     t(u) is also available independently as the real zero of
//     h(t) = u^2/2 (invert_h_newton), giving a closable loop:
//     series + correction + Q_m(u) must reproduce the Newton root.

#pragma once

#include "quadrature.hpp"
#include "rational.hpp"
#include "series.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace stirling::lagrange {

using quad::Complex;
using quad::ContourPath;
using quad::QuadResult;

// ---------------------------------------------------------------- exact ---

// a_1..a_m for t = u phi(t).  Requires m >= 1 (UsageError), phi(0) != 0
// (DomainError), and phi.order() >= m - 1 (InsufficientOrderError: the
// coefficient a_m reads [t^{m-1}] phi^m).
std::vector<exact::Rational>
inversion_series_coeffs(const exact::RationalSeries& phi, int m);

// c_m = -D^{m-1}[phi^m](0) / (m-1)! = -m a_m; the correction term in the
// m-term identity is c_m u^m.  Same validation as the coefficients.
exact::Rational correction_coefficient(const exact::RationalSeries& phi,
                                       int m);

// phi(t) = g(t)^{-1/2} truncated at the given order (order >= 0).
exact::RationalSeries phi_series(int order);

// Even-part coefficients of dt/du for the saddle map phi = g^{-1/2}:
//   e_n = D^{2n}[phi^{2n+1}](0) / (2n)!,   n = 0..n_max,
// the Watson's-lemma weights with  gamma_n = (-2)^n (1/2)_n e_n.
std::vector<exact::Rational> dt_du_even_series(int n_max);

// -------------------------------------------------------------- numeric ---

// A complex-analytic phi with derivative for contour evaluation.  The
// optional preflight hook runs extra path checks (the saddle phi verifies
// branch continuity of g); leave it empty for entire functions.
struct ComplexFunction {
  std::function<Complex(Complex)> value;
  std::function<Complex(Complex)> derivative;
  std::function<void(const ContourPath&)> preflight;
};

// Exact truncated polynomial, evaluated by Horner on the double images of
// the coefficients.  No branch issues: entire, no preflight hook.
ComplexFunction phi_from_polynomial(const exact::RationalSeries& poly);

// The saddle map phi(z) = g(z)^{-1/2} with its branch-continuity preflight.
ComplexFunction phi_gamma();

// Circle centered at t/2 with radius |t|/2 + 0.75: encloses 0 and t with
// clearance 0.75 on both, stays well inside the branch-safe neighbourhood
// of the saddle phi for the |u| <= 2 range the validation grid uses.
ContourPath default_qm_contour(double t);

struct QmOptions {
  quad::SegmentedOptions quad{};
  bool preflight = true; // path sanity checks before integrating
};

// Q_m(u) on the given counterclockwise contour.  u = 0 returns exact 0.
// Preflight (unless disabled): the contour must wind once around 0, pass
// no closer than 1e-3 to a zero of psi(z) = z - u phi(z), and enclose
// exactly one such zero (argument principle); phi's own hook runs first.
// Violations throw ContourError.
QuadResult remainder_qm(const ComplexFunction& phi, int m, double u,
                        const ContourPath& contour,
                        const QmOptions& options = {});

// The real inverse t(u) of the saddle map: the zero of h(t) = u^2/2 with
// sign(t) = sign(u) (h is increasing on t > 0, decreasing on t < 0).
double invert_h_newton(double u);

struct InversionResult {
  double series_value = 0.0; // sum_{n=1}^m a_n u^n
  double correction = 0.0;   // c_m u^m
  QuadResult remainder;      // Q_m(u)
  double newton_t = 0.0;     // independent root of h(t) = u^2/2
  double defect = 0.0;       // |series + correction + Q_m - newton_t|
};

// Full reconstruction for the saddle map at real u with m terms, on the
// default contour.  m >= 1 (UsageError); u must be finite (DomainError).
InversionResult invert_with_remainder(double u, int m,
                                      const QmOptions& options = {});

} // namespace stirling::lagrange
