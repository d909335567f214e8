// Partition enumeration, the M3 multinomial weights, Faa di Bruno, and the
// two Stirling-number families, each pinned against hand-checkable oracles.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "combinatorics.hpp"
#include "errors.hpp"

#include <vector>

using stirling::UsageError;
using stirling::comb::assoc_stirling_3;
using stirling::comb::enumerate_partitions;
using stirling::comb::faa_di_bruno;
using stirling::comb::multinomial_m3;
using stirling::comb::Partition;
using stirling::comb::stirling_first_kind;
using stirling::exact::BigInt;
using stirling::exact::Rational;

namespace {

// p(n) by Euler's pentagonal-number recurrence, as an independent oracle.
std::vector<BigInt> partition_counts(unsigned n_max) {
  std::vector<BigInt> p(n_max + 1, BigInt(0));
  p[0] = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (unsigned k = 1;; ++k) {
      const unsigned g1 = k * (3 * k - 1) / 2;
      const unsigned g2 = k * (3 * k + 1) / 2;
      if (g1 > n)
        break;
      const BigInt sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[n - g1];
      if (g2 <= n)
        acc += sign * p[n - g2];
    }
    p[n] = acc;
  }
  return p;
}

} // namespace

TEST_CASE("partitions of 4: exact tuples in documented order") {
  const auto parts = enumerate_partitions(4);
  REQUIRE(parts.size() == 5);
  const std::vector<std::vector<unsigned>> expected = {
      {0, 0, 0, 1}, {1, 0, 1, 0}, {0, 2, 0, 0}, {2, 1, 0, 0}, {4, 0, 0, 0}};
  for (size_t i = 0; i < expected.size(); ++i) {
    CHECK(parts[i].multiplicities == expected[i]);
    CHECK(parts[i].target == 4);
    CHECK(parts[i].valid());
  }
  const std::vector<long long> weights = {1, 4, 3, 6, 1};
  for (size_t i = 0; i < weights.size(); ++i)
    CHECK(multinomial_m3(parts[i]) == BigInt(weights[i]));
}

TEST_CASE("partition counts match the pentagonal recurrence up to 40") {
  const auto p = partition_counts(40);
  CHECK(p[10] == BigInt(42));      // classical spot value
  CHECK(p[40] == BigInt(37338));   // classical spot value
  for (unsigned n = 0; n <= 40; ++n)
    CHECK(BigInt(enumerate_partitions(n).size()) == p[n]);
}

TEST_CASE("every enumerated partition is valid and parts_total is the part count") {
  for (unsigned n : {0u, 1u, 7u, 12u}) {
    for (const auto& part : enumerate_partitions(n)) {
      CHECK(part.valid());
      unsigned sum = 0, count = 0;
      for (unsigned k = 1; k <= part.multiplicities.size(); ++k) {
        sum += k * part.multiplicities[k - 1];
        count += part.multiplicities[k - 1];
      }
      CHECK(sum == n);
      CHECK(part.parts_total() == count);
    }
  }
}

TEST_CASE("multinomial weights sum to the Bell numbers") {
  // sum over partitions of N of M3 = number of set partitions = Bell(N).
  const std::vector<long long> bell = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (unsigned n = 0; n < bell.size(); ++n) {
    BigInt total = 0;
    for (const auto& part : enumerate_partitions(n))
      total += multinomial_m3(part);
    CHECK(total == BigInt(bell[n]));
  }
}

TEST_CASE("multinomial rejects inconsistent partitions") {
  Partition bogus;
  bogus.multiplicities = {1, 1}; // 1*1 + 2*1 = 3 != target
  bogus.target = 4;
  CHECK_THROWS_AS((void)multinomial_m3(bogus), UsageError);
}

TEST_CASE("3-associated Stirling numbers of the second kind") {
  CHECK(assoc_stirling_3(0, 0) == BigInt(1));
  CHECK(assoc_stirling_3(2, 1) == BigInt(0)); // blocks need size >= 3
  CHECK(assoc_stirling_3(3, 1) == BigInt(1));
  CHECK(assoc_stirling_3(4, 1) == BigInt(1));
  CHECK(assoc_stirling_3(5, 2) == BigInt(0)); // 5 < 2*3
  CHECK(assoc_stirling_3(6, 2) == BigInt(10));   // C(6,3)/2
  CHECK(assoc_stirling_3(9, 3) == BigInt(280));  // 9!/((3!)^3 3!)
  CHECK(assoc_stirling_3(7, 2) == BigInt(35));   // C(7,3): one 3-block, one 4-block
}

TEST_CASE("signed Stirling numbers of the first kind vs falling factorial") {
  // x(x-1)(x-2)(x-3) = x^4 - 6x^3 + 11x^2 - 6x
  CHECK(stirling_first_kind(4, 4) == BigInt(1));
  CHECK(stirling_first_kind(4, 3) == BigInt(-6));
  CHECK(stirling_first_kind(4, 2) == BigInt(11));
  CHECK(stirling_first_kind(4, 1) == BigInt(-6));
  CHECK(stirling_first_kind(4, 0) == BigInt(0));

  // General check k <= 10: expand prod_{j=0}^{k-1}(x - j) exactly.
  for (unsigned k = 0; k <= 10; ++k) {
    std::vector<BigInt> poly = {BigInt(1)}; // coefficients, low to high
    for (unsigned j = 0; j < k; ++j) {
      std::vector<BigInt> next(poly.size() + 1, BigInt(0));
      for (size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] += poly[i];
        next[i] -= BigInt(j) * poly[i];
      }
      poly = next;
    }
    for (unsigned m = 0; m <= k; ++m)
      CHECK(stirling_first_kind(k, m) == poly[m]);
  }
}

TEST_CASE("Faa di Bruno: Bell numbers from exp(e^t - 1)") {
  const std::vector<long long> bell = {1, 1, 2, 5, 15, 52, 203};
  for (unsigned n = 0; n < bell.size(); ++n) {
    std::vector<Rational> f(n + 1, Rational(1)); // exp derivs at g(0)=0
    std::vector<Rational> g(std::max(n, 1u), Rational(1)); // (e^t-1)^{(k)}(0)
    CHECK(faa_di_bruno(f, g, n) == Rational(bell[n]));
  }
}

TEST_CASE("Faa di Bruno: log(1 + (e^t - 1)) collapses to t") {
  for (unsigned n = 1; n <= 8; ++n) {
    std::vector<Rational> f(n + 1);
    f[0] = Rational(0); // log(1+y) at y=0
    BigInt fact = 1;
    for (unsigned m = 1; m <= n; ++m) {
      // d^m/dy^m log(1+y) |_0 = (-1)^{m-1} (m-1)!
      f[m] = Rational((m % 2 == 1) ? fact : -fact, BigInt(1));
      fact *= m;
    }
    std::vector<Rational> g(n, Rational(1));
    CHECK(faa_di_bruno(f, g, n) == (n == 1 ? Rational(1) : Rational(0)));
  }
}

TEST_CASE("Faa di Bruno argument validation") {
  std::vector<Rational> f(2, Rational(1));
  std::vector<Rational> g(1, Rational(1));
  CHECK_THROWS_AS((void)faa_di_bruno(f, g, 3), UsageError); // f too short
  std::vector<Rational> f4(5, Rational(1));
  CHECK_THROWS_AS((void)faa_di_bruno(f4, g, 4), UsageError); // g too short
}
