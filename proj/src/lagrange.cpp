#include "lagrange.hpp"

#include "errors.hpp"
#include "h_function.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace stirling::lagrange {

namespace {

using exact::Rational;
using exact::RationalSeries;

// Integer power by repeated squaring; exponent >= 0.
Complex cpow_int(Complex z, int k) {
  Complex acc{1.0, 0.0};
  Complex base = z;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1)
      acc *= base;
    base *= base;
  }
  return acc;
}

double rpow_int(double x, int k) {
  double acc = 1.0;
  double base = x;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1)
      acc *= base;
    base *= base;
  }
  return acc;
}

void validate_exact_inputs(const RationalSeries& phi, int m) {
  if (m < 1)
    throw UsageError("lagrange: m must be >= 1, got " + std::to_string(m));
  if (phi[0].is_zero())
    throw DomainError(
        "lagrange: phi(0) = 0 -- the map t = u phi(t) is not invertible "
        "at the origin");
  if (phi.order() < m - 1)
    throw InsufficientOrderError(
        "lagrange: a_" + std::to_string(m) + " needs phi through order " +
        std::to_string(m - 1) + ", series has order " +
        std::to_string(phi.order()));
}

} // namespace

std::vector<Rational> inversion_series_coeffs(const RationalSeries& phi,
                                              int m) {
  validate_exact_inputs(phi, m);
  std::vector<Rational> a;
  a.reserve(static_cast<std::size_t>(m));
  RationalSeries power = phi; // phi^n, built incrementally
  for (int n = 1; n <= m; ++n) {
    // a_n = D^{n-1}[phi^n](0)/n! = [t^{n-1}] phi^n / n.
    a.push_back(power[n - 1] / Rational(n));
    if (n < m)
      power = power * phi;
  }
  return a;
}

Rational correction_coefficient(const RationalSeries& phi, int m) {
  validate_exact_inputs(phi, m);
  // -D^{m-1}[phi^m](0)/(m-1)! = -[t^{m-1}] phi^m  (= -m a_m).
  return -phi.ipow(static_cast<unsigned>(m))[m - 1];
}

RationalSeries phi_series(int order) {
  return exact::g_series(order).pow_neg_half_shifted(0);
}

std::vector<Rational> dt_du_even_series(int n_max) {
  if (n_max < 0)
    throw UsageError("dt_du_even_series: n_max must be >= 0");
  const int order = 2 * n_max;
  const RationalSeries phi = phi_series(order);
  std::vector<Rational> e;
  e.reserve(static_cast<std::size_t>(n_max) + 1);
  RationalSeries power = phi; // phi^k
  for (int k = 1; k <= 2 * n_max + 1; ++k) {
    if (k % 2 == 1)
      e.push_back(power[k - 1]); // e_j = [t^{2j}] phi^{2j+1}, k = 2j+1
    if (k < 2 * n_max + 1)
      power = power * phi;
  }
  return e;
}

ComplexFunction phi_from_polynomial(const RationalSeries& poly) {
  std::vector<double> c(static_cast<std::size_t>(poly.order()) + 1);
  for (int k = 0; k <= poly.order(); ++k)
    c[static_cast<std::size_t>(k)] = poly[k].to_double();

  ComplexFunction f;
  f.value = [c](Complex z) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = c.size(); k-- > 0;)
      acc = acc * z + c[k];
    return acc;
  };
  f.derivative = [c](Complex z) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = c.size(); k-- > 1;)
      acc = acc * z + static_cast<double>(k) * c[k];
    return acc;
  };
  return f;
}

ComplexFunction phi_gamma() {
  ComplexFunction f;
  f.value = [](Complex z) { return hfun::phi(z); };
  f.derivative = [](Complex z) { return hfun::phi_prime(z); };
  f.preflight = [](const ContourPath& path) {
    hfun::preflight_branch_safe(path);
  };
  return f;
}

ContourPath default_qm_contour(double t) {
  return ContourPath::circle(Complex(t / 2.0, 0.0),
                             std::abs(t) / 2.0 + 0.75);
}

QuadResult remainder_qm(const ComplexFunction& phi, int m, double u,
                        const ContourPath& contour,
                        const QmOptions& options) {
  if (m < 1)
    throw UsageError("remainder_qm: m must be >= 1, got " +
                     std::to_string(m));
  if (!phi.value || !phi.derivative)
    throw UsageError("remainder_qm: phi must provide value and derivative");
  if (!std::isfinite(u))
    throw DomainError("remainder_qm: u must be finite");
  if (u == 0.0)
    return QuadResult{}; // Q_m carries a u^m prefactor

  const auto psi = [&phi, u](Complex z) { return z - u * phi.value(z); };

  if (options.preflight) {
    if (!contour.closed())
      throw ContourError("remainder_qm: contour is not closed");
    if (phi.preflight)
      phi.preflight(contour);
    const double clearance = quad::min_abs_on_path(contour, psi);
    if (!(clearance > 1e-3))
      throw ContourError(
          "remainder_qm: contour passes within 1e-3 of a zero of "
          "z - u phi(z); move the contour");
    if (quad::winding_number(contour, Complex(0.0, 0.0)) != 1)
      throw ContourError(
          "remainder_qm: contour must wind exactly once around 0");
    const int zeros = quad::winding_number_of_image(contour, psi);
    if (zeros != 1)
      throw ContourError(
          "remainder_qm: contour encloses " + std::to_string(zeros) +
          " zeros of z - u phi(z); the identity needs exactly the inverse "
          "point t(u)");
  }

  const auto integrand = [&phi, &psi, u, m](Complex z) {
    const Complex pv = phi.value(z);
    const Complex pd = phi.derivative(z);
    return (1.0 - u * pd) * cpow_int(pv, m) /
           (psi(z) * cpow_int(z, m - 1));
  };

  QuadResult raw = quad::integrate_segmented(integrand, contour,
                                             options.quad);
  const Complex factor =
      rpow_int(u, m) / Complex(0.0, 2.0 * std::numbers::pi);
  raw.value *= factor;
  raw.error_estimate *= std::abs(factor);
  return raw;
}

double invert_h_newton(double u) {
  if (!std::isfinite(u))
    throw DomainError("invert_h_newton: u must be finite");
  if (u == 0.0)
    return 0.0;
  const auto [zm, zp] = quad::real_zeros_of_h(u * u / 2.0);
  return u > 0.0 ? zp : zm;
}

InversionResult invert_with_remainder(double u, int m,
                                      const QmOptions& options) {
  if (m < 1)
    throw UsageError("invert_with_remainder: m must be >= 1, got " +
                     std::to_string(m));
  if (!std::isfinite(u))
    throw DomainError("invert_with_remainder: u must be finite");

  const RationalSeries phi = phi_series(m); // order m covers a_1..a_m + c_m
  const std::vector<Rational> a = inversion_series_coeffs(phi, m);
  const Rational c_m = correction_coefficient(phi, m);

  InversionResult out;
  // Horner in u over a_m..a_1, then one more factor of u.
  double acc = 0.0;
  for (int n = m; n >= 1; --n)
    acc = acc * u + a[static_cast<std::size_t>(n - 1)].to_double();
  out.series_value = acc * u;
  out.correction = c_m.to_double() * rpow_int(u, m);
  out.newton_t = invert_h_newton(u);
  out.remainder = remainder_qm(phi_gamma(), m, u,
                               default_qm_contour(out.newton_t), options);
  const Complex reconstructed =
      out.series_value + out.correction + out.remainder.value;
  out.defect = std::abs(reconstructed - out.newton_t);
  return out;
}

} // namespace stirling::lagrange
