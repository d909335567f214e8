// Rational arithmetic and truncated-series engine: ring behavior, the
// generating series g and Lambda, and the shifted negative-half powers that
// feed both coefficient routes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "series.hpp"

using stirling::DomainError;
using stirling::InsufficientOrderError;
using stirling::UsageError;
using stirling::exact::BigInt;
using stirling::exact::Rational;
using stirling::exact::RationalSeries;

namespace {
Rational rat(long long p, long long q) { return {BigInt(p), BigInt(q)}; }
} // namespace

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(1, -3) == rat(-1, 3));
  CHECK(rat(0, 7) == Rational(0));
  CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
  CHECK(rat(1, 3) * rat(3, 5) == rat(1, 5));
  CHECK(rat(1, 3) - rat(1, 3) == Rational(0));
  CHECK((rat(-7, 8)).abs() == rat(7, 8));
  CHECK(rat(22, 7).to_double() == doctest::Approx(22.0 / 7.0).epsilon(1e-15));
}

TEST_CASE("rational string round-trip p/q") {
  CHECK(rat(139, 51840).str() == "139/51840");
  CHECK(rat(-571, 2488320).str() == "-571/2488320");
  CHECK(Rational(1).str() == "1");
  CHECK(rat(-1, 12).str() == "-1/12");
}

TEST_CASE("factorial, binomial, pochhammer") {
  using stirling::exact::binomial;
  using stirling::exact::factorial;
  using stirling::exact::pochhammer_half;
  CHECK(factorial(0) == BigInt(1));
  CHECK(factorial(6) == BigInt(720));
  CHECK(binomial(6, 2) == BigInt(15));
  CHECK(binomial(4, 3) == BigInt(4));
  // (1/2)_n = (2n)! / (4^n n!)
  CHECK(pochhammer_half(3) == rat(15, 8));
  CHECK(pochhammer_half(4) == rat(105, 16));
  CHECK(pochhammer_half(5) == rat(945, 32));
  CHECK(pochhammer_half(6) == rat(10395, 64));
}

TEST_CASE("series ring axioms at fixed order") {
  RationalSeries a(4), b(4), c(4);
  for (int k = 0; k <= 4; ++k) {
    a.set(k, rat(k + 1, 3));
    b.set(k, rat(2 * k - 3, 5));
    c.set(k, rat(1, k + 2));
  }
  CHECK((a + b) * c == a * c + b * c);
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a - a == RationalSeries(4));
  CHECK(-a == RationalSeries(4) - a);
  CHECK(a.scaled(rat(3, 2)) == a * RationalSeries::constant(rat(3, 2), 4));
  CHECK(a.ipow(3) == a * a * a);
}

TEST_CASE("order mismatch and bad construction throw UsageError") {
  RationalSeries a(3), b(4);
  CHECK_THROWS_AS((void)(a + b), UsageError);
  CHECK_THROWS_AS((void)(a * b), UsageError);
  CHECK_THROWS_AS(RationalSeries(-1), UsageError);
  CHECK_THROWS_AS(a.set(7, Rational(1)), UsageError);
  CHECK_THROWS_AS((void)a[9], UsageError);
}

TEST_CASE("g series: g(z) = 2(e^z - z - 1)/z^2") {
  // g = 1 + z/3 + z^2/12 + z^3/60 + ...  i.e. g_k = 2/(k+2)!
  const auto g = stirling::exact::g_series(6);
  for (int k = 0; k <= 6; ++k)
    CHECK(g[k] == Rational(BigInt(2), stirling::exact::factorial(
                                          static_cast<unsigned>(k) + 2)));
}

TEST_CASE("phi = g^{-1/2}: leading terms and the vanishing t^2 term") {
  const auto phi = stirling::exact::g_series(6).pow_neg_half_shifted(0);
  CHECK(phi[0] == Rational(1));
  CHECK(phi[1] == rat(-1, 6));
  CHECK(phi[2] == Rational(0)); // the quadratic term cancels exactly
  // phi^3 = g^{-3/2} = 1 - z/2 + z^2/12 + ..., so D^2[phi^3](0) = 1/6.
  const auto phi3 = stirling::exact::g_series(6).pow_neg_half_shifted(1);
  CHECK(phi3[0] == Rational(1));
  CHECK(phi3[1] == rat(-1, 2));
  CHECK(phi3[2] == rat(1, 12));
  CHECK(phi3.derivative_at_zero(2) == rat(1, 6));
  // Consistency: (g^{-1/2})^3 equals g^{-3/2} term by term.
  CHECK(phi.ipow(3) == phi3);
}

TEST_CASE("pow_neg_half_shifted requires unit constant term") {
  RationalSeries s(3);
  s.set(0, rat(1, 2));
  CHECK_THROWS_AS((void)s.pow_neg_half_shifted(0), DomainError);
}

TEST_CASE("Lambda series and Lambda^{-3/2}") {
  const auto lam = stirling::exact::lambda_capital_series(5);
  CHECK(lam[0] == Rational(1));
  const auto lam32 = lam.pow_neg_half_shifted(1); // Lambda^{-3/2}
  CHECK(lam32[0] == Rational(1));
  CHECK(lam32[1] == Rational(1));
  CHECK(lam32[2] == rat(1, 12));
}

TEST_CASE("derivative_at_zero bounds") {
  RationalSeries s(3);
  s.set(3, rat(5, 7));
  CHECK(s.derivative_at_zero(3) ==
        rat(5, 7) * Rational(stirling::exact::factorial(3), BigInt(1)));
  CHECK_THROWS_AS((void)s.derivative_at_zero(4), InsufficientOrderError);
  CHECK_THROWS_AS((void)s.derivative_at_zero(-1), UsageError);
}
