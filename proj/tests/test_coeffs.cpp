// Stirling coefficients: the published values, the d-recurrence, exact
// seven-way agreement through n = 12, and the n = 2 partition-sum assembly
// reproduced term by term.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coefficients.hpp"
#include "combinatorics.hpp"
#include "errors.hpp"

#include <vector>

using namespace stirling::coeffs;
using stirling::InsufficientOrderError;
using stirling::UsageError;
using stirling::exact::BigInt;
using stirling::exact::pochhammer_half;
using stirling::exact::Rational;

namespace {
Rational rat(long long p, long long q) { return {BigInt(p), BigInt(q)}; }

const std::vector<Rational>& known_gammas() {
  static const std::vector<Rational> g = {
      Rational(1), rat(-1, 12), rat(1, 288), rat(139, 51840),
      rat(-571, 2488320)};
  return g;
}
} // namespace

TEST_CASE("gamma_0..gamma_4 for every method match the published values") {
  for (int n = 0; n <= 4; ++n)
    for (Method m : all_methods()) {
      INFO("n = ", n, ", method = ", method_name(m));
      CHECK(gamma_coefficient(n, m) == known_gammas()[(size_t)n]);
    }
}

TEST_CASE("d-recurrence start values") {
  CHECK(recurrence_d(0) == Rational(1));
  CHECK(recurrence_d(1) == rat(2, 3));
  CHECK(recurrence_d(2) == rat(1, 12));
  CHECK(recurrence_d(3) == rat(-2, 135));
  CHECK(recurrence_d(4) == rat(1, 864));
}

TEST_CASE("seven-way exact agreement through n = 12") {
  const auto table = coefficient_table(12); // IntegrityError on any mismatch
  CHECK(table.size() == 13u * (size_t)kMethodCount);
  // Reference column: the recurrence route.
  for (const auto& rec : table) {
    INFO("n = ", rec.n, ", method = ", method_name(rec.method));
    CHECK(rec.value == gamma_via_recurrence(rec.n));
  }
}

TEST_CASE("sign pattern: gamma_n alternates in pairs (+ + - -) after n = 0") {
  // 1, -1/12, 1/288, 139/51840, -571/2488320, -163879/..., +...
  // Known signs for n = 0..12: + - + + - - + + - - + + -
  const std::vector<int> signs = {1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1};
  for (int n = 0; n <= 12; ++n) {
    const Rational g = gamma_via_recurrence(n);
    CHECK(g.num() * BigInt(signs[(size_t)n]) > 0);
  }
}

TEST_CASE("n = 2 partition assembly: the four grouped terms and 1/288") {
  const auto parts = stirling::comb::enumerate_partitions(4);
  REQUIRE(parts.size() == 5);
  // Per-partition term: (-2)^m * C_m * (1/2)_{m+2} / prod_k ((k+1)(k+2))^{m_k}
  std::vector<Rational> terms;
  for (const auto& p : parts) {
    const unsigned m = p.parts_total();
    Rational t(stirling::comb::multinomial_m3(p), BigInt(1));
    Rational minus2_m(1);
    for (unsigned i = 0; i < m; ++i)
      minus2_m = minus2_m * Rational(-2);
    t = t * minus2_m * pochhammer_half(m + 2);
    for (unsigned k = 1; k <= p.multiplicities.size(); ++k)
      for (unsigned rep = 0; rep < p.multiplicities[k - 1]; ++rep)
        t = t / Rational(BigInt((k + 1) * (k + 2)), BigInt(1));
    terms.push_back(t);
  }
  // Grouped as printed: the two m = 2 partitions appear combined.
  CHECK(terms[0] == rat(-1, 8));
  CHECK(terms[1] + terms[2] == rat(91, 64));
  CHECK(terms[3] == rat(-105, 32));
  CHECK(terms[4] == rat(1155, 576));

  Rational total(0);
  for (const auto& t : terms)
    total = total + t;
  CHECK(total == rat(1, 48));

  const Rational gamma2 = rat(4, 24) * total; // 2^2 / 4!
  CHECK(gamma2 == rat(1, 288));
  CHECK(gamma2 == gamma_via_partition_alt(2));
  CHECK(gamma2 == gamma_via_partition(2));
}

TEST_CASE("method name round trip") {
  for (Method m : all_methods()) {
    const auto back = method_from_name(method_name(m));
    REQUIRE(back.has_value());
    CHECK(*back == m);
  }
  CHECK_FALSE(method_from_name("nonsense").has_value());
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS((void)gamma_via_recurrence(-1), UsageError);
  CHECK_THROWS_AS((void)recurrence_d(-2), UsageError);
  CHECK_THROWS_AS((void)gamma_via_series(3, 2), InsufficientOrderError);
  CHECK_THROWS_AS((void)coefficient_table(4, {}), UsageError);
}

TEST_CASE("series order override: any order >= 2n reproduces the value") {
  CHECK(gamma_via_series(3, 6) == known_gammas()[3]);
  CHECK(gamma_via_series(3, 11) == known_gammas()[3]);
  CHECK(gamma_via_lambda(2, 9) == known_gammas()[2]);
}
