// Dense truncated power series over exact rationals.
//
// A RationalSeries holds coefficients c[0..N] of sum c_k t^k + O(t^{N+1});
// N is the (explicit) truncation order.  Binary operations require equal
// orders -- silent truncation mismatches are the classic source of wrong
// high-order coefficients, so mixing orders is a hard error.
//
// The two series every caller needs:
//   g(t)      = 2(e^t - 1 - t)/t^2 = 1 + 2 sum_{r>=1} t^r/(r+2)!
//   Lambda(z) = 1 - 2 lambda(z),  lambda(z) = sum_{j>=1} (-z)^{j-1} z/(j+2)
//             = 1 - 2z/3 + z^2/2 - 2z^3/5 + ...
// and the powers phi^{2n+1} = g^{-n-1/2} obtained via pow_neg_half_shifted.

#pragma once

#include "rational.hpp"

#include <vector>

namespace stirling::exact {

class RationalSeries {
public:
  // Zero series of the given order (order >= 0).
  explicit RationalSeries(int order);
  // Coefficients c0..cN; order = coeffs.size() - 1.  Empty list is an error.
  explicit RationalSeries(std::vector<Rational> coeffs);

  static RationalSeries constant(const Rational& c, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const;
  void set(int k, Rational v);

  RationalSeries operator-() const;
  friend RationalSeries operator+(const RationalSeries& a,
                                  const RationalSeries& b);
  friend RationalSeries operator-(const RationalSeries& a,
                                  const RationalSeries& b);
  // Cauchy product truncated at the common order.
  friend RationalSeries operator*(const RationalSeries& a,
                                  const RationalSeries& b);
  RationalSeries scaled(const Rational& s) const;

  // a^k by repeated squaring (k >= 0; a^0 = 1).
  RationalSeries ipow(unsigned k) const;

  // a^{-n-1/2} for integer n >= 0, via the exact binomial series
  //   a^{-n-1/2} = sum_j C(-n-1/2, j) (a - 1)^j,
  // which terminates at the truncation order because a - 1 has no constant
  // term.  Requires a[0] == 1 (DomainError otherwise).
  RationalSeries pow_neg_half_shifted(unsigned n) const;

  // k! * c_k = value of the k-th derivative at 0.  k > order is an
  // InsufficientOrderError: the coefficient simply is not in the window.
  Rational derivative_at_zero(int k) const;

  friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
    return a.c_ == b.c_;
  }

private:
  std::vector<Rational> c_;
};

// g(t) = 1 + 2 sum_{r=1..N} t^r/(r+2)!   (the reduced saddle function
// 2h(t)/t^2 with h = e^t - t - 1), truncated at order N.
RationalSeries g_series(int order);

// Lambda(z) = 1 - 2z/3 + z^2/2 - 2z^3/5 + ... - alternating odd-tail series.
RationalSeries lambda_capital_series(int order);

} // namespace stirling::exact
