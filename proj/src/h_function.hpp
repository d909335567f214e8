// Complex evaluation of the saddle functions
//   h(z)   = e^z - z - 1
//   g(z)   = 2 h(z) / z^2          (entire; g(0) = 1; g > 0 on the reals)
//   phi(z) = g(z)^{-1/2}           (principal branch; phi(0) = 1)
// and their derivatives.  Inside |z| <= 1 the Maclaurin series are used --
// the closed forms lose digits to cancellation near the origin -- and the
// closed forms outside.
//
// Fractional powers h^alpha on the remainder contours are evaluated through
// the factorization
//   h(z)^{-m -+ 1/2} = 2^{m +- 1/2} z^{-2m -+ 1} g(z)^{-m -+ 1/2},
// which is the single-valued analytic continuation anchored where the
// contour crosses the positive real axis.  (A literal principal branch of
// h^alpha is discontinuous on these contours: h itself crosses the negative
// real axis near s = +-0.173 + i even though the path encloses the reals.)
// Validity requires only that g stay off the closed ray (-inf, 0] along the
// path, which preflight_branch_safe verifies by dense sampling.

#pragma once

#include "quadrature.hpp"

#include <complex>

namespace stirling::hfun {

using quad::Complex;

Complex h(Complex z);
Complex h_prime(Complex z); // e^z - 1
Complex g(Complex z);
Complex g_prime(Complex z);
Complex phi(Complex z);       // g^{-1/2}, principal
Complex phi_prime(Complex z); // -g' / (2 g^{3/2})

// g^alpha with the principal log; callers must have preflighted the path.
Complex g_pow(Complex z, double alpha);

// Throws ContourError if g(z) touches the closed negative real axis or its
// argument jumps by >= pi/2 between adjacent samples along the path.
void preflight_branch_safe(const quad::ContourPath& path);

} // namespace stirling::hfun
