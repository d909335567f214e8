#include "series.hpp"

#include "errors.hpp"

#include <string>
#include <utility>

namespace stirling::exact {

RationalSeries::RationalSeries(int order) {
  if (order < 0)
    throw UsageError("RationalSeries: negative order");
  c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

RationalSeries::RationalSeries(std::vector<Rational> coeffs)
    : c_(std::move(coeffs)) {
  if (c_.empty())
    throw UsageError("RationalSeries: empty coefficient list");
}

RationalSeries RationalSeries::constant(const Rational& v, int order) {
  RationalSeries s(order);
  s.c_[0] = v;
  return s;
}

const Rational& RationalSeries::operator[](int k) const {
  if (k < 0 || k > order())
    throw UsageError("RationalSeries: coefficient index " + std::to_string(k) +
                     " outside order " + std::to_string(order()));
  return c_[static_cast<std::size_t>(k)];
}

void RationalSeries::set(int k, Rational v) {
  if (k < 0 || k > order())
    throw UsageError("RationalSeries::set: index outside order");
  c_[static_cast<std::size_t>(k)] = std::move(v);
}

static void check_same_order(const RationalSeries& a, const RationalSeries& b,
                             const char* op) {
  if (a.order() != b.order())
    throw UsageError(std::string("RationalSeries: order mismatch in ") + op +
                     " (" + std::to_string(a.order()) + " vs " +
                     std::to_string(b.order()) + ")");
}

RationalSeries RationalSeries::operator-() const {
  RationalSeries r = *this;
  for (auto& c : r.c_)
    c = -c;
  return r;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  check_same_order(a, b, "+");
  RationalSeries r = a;
  for (std::size_t k = 0; k < r.c_.size(); ++k)
    r.c_[k] += b.c_[k];
  return r;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
  check_same_order(a, b, "-");
  RationalSeries r = a;
  for (std::size_t k = 0; k < r.c_.size(); ++k)
    r.c_[k] -= b.c_[k];
  return r;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  check_same_order(a, b, "*");
  const int n = a.order();
  RationalSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[static_cast<std::size_t>(i)].is_zero())
      continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.c_[static_cast<std::size_t>(j)].is_zero())
        continue;
      r.c_[static_cast<std::size_t>(i + j)] +=
          a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

RationalSeries RationalSeries::scaled(const Rational& s) const {
  RationalSeries r = *this;
  for (auto& c : r.c_)
    c *= s;
  return r;
}

RationalSeries RationalSeries::ipow(unsigned k) const {
  RationalSeries result = constant(1, order());
  RationalSeries base = *this;
  while (k > 0) {
    if (k & 1u)
      result = result * base;
    base = (k >>= 1) ? base * base : base;
  }
  return result;
}

RationalSeries RationalSeries::pow_neg_half_shifted(unsigned n) const {
  if (c_[0] != Rational(1))
    throw DomainError(
        "pow_neg_half_shifted: constant term must be exactly 1, got " +
        c_[0].str());
  const int N = order();
  const Rational exponent(-(2 * static_cast<long long>(n) + 1), 2);
  RationalSeries eps = *this;            // eps = a - 1, no constant term
  eps.c_[0] = Rational(0);
  RationalSeries acc = constant(1, N);   // j = 0 term
  RationalSeries eps_pow = constant(1, N);
  for (int j = 1; j <= N; ++j) {
    eps_pow = eps_pow * eps;
    acc = acc + eps_pow.scaled(binomial_general(exponent, static_cast<unsigned>(j)));
  }
  return acc;
}

Rational RationalSeries::derivative_at_zero(int k) const {
  if (k < 0)
    throw UsageError("derivative_at_zero: negative derivative index");
  if (k > order())
    throw InsufficientOrderError(
        "derivative_at_zero: need order >= " + std::to_string(k) +
        " but series has order " + std::to_string(order()) +
        "; rebuild the series at higher order");
  return c_[static_cast<std::size_t>(k)] * Rational(factorial(static_cast<unsigned>(k)));
}

RationalSeries g_series(int order) {
  RationalSeries g(order);
  g.set(0, Rational(1));
  for (int r = 1; r <= order; ++r)
    g.set(r, Rational(2, factorial(static_cast<unsigned>(r) + 2)));
  return g;
}

RationalSeries lambda_capital_series(int order) {
  // lambda(z) = z/3 - z^2/4 + z^3/5 - ...; Lambda = 1 - 2*lambda.
  RationalSeries L(order);
  L.set(0, Rational(1));
  for (int j = 1; j <= order; ++j) {
    Rational lam_j = Rational(j % 2 == 1 ? 1 : -1, j + 2);
    L.set(j, Rational(-2) * lam_j);
  }
  return L;
}

} // namespace stirling::exact
