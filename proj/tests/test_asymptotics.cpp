// Gamma oracles, the scaled-gamma saddle integral, partial sums, and the
// three remainder routes with their cross-validation report.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asymptotics.hpp"
#include "errors.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace stirling::asym;
using stirling::DomainError;
using stirling::UsageError;

namespace {
constexpr double kPi = std::numbers::pi;

// Independent gamma-star oracle from the libm lgamma.
double gamma_star_lgamma(double x) {
  return std::exp(std::lgamma(x) - 0.5 * std::log(2.0 * kPi) -
                  (x - 0.5) * std::log(x) + x);
}
} // namespace

TEST_CASE("gamma_reference closed forms") {
  CHECK(gamma_reference(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(gamma_reference(0.5) ==
        doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));
  CHECK(gamma_reference(6.0) == doctest::Approx(120.0).epsilon(1e-12));
  CHECK(gamma_reference(8.0) == doctest::Approx(5040.0).epsilon(1e-12));
  // Reflection-free small arguments go through the recurrence lift.
  CHECK(gamma_reference(1.5) ==
        doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-12));
}

TEST_CASE("gamma_reference domain") {
  CHECK_THROWS_AS((void)gamma_reference(0.0), DomainError);
  CHECK_THROWS_AS((void)gamma_reference(-3.5), DomainError);
  CHECK_THROWS_AS((void)gamma_reference(200.0), DomainError); // overflow
  CHECK_THROWS_AS((void)gamma_star_reference(-1.0), DomainError);
}

TEST_CASE("gamma_star agrees with lgamma across a grid") {
  for (double x : {2.0, 3.5, 8.0, 20.0, 50.0, 120.0, 171.0})
    CHECK(gamma_star_reference(x) ==
          doctest::Approx(gamma_star_lgamma(x)).epsilon(5e-12));
}

TEST_CASE("gamma_star frozen value at x = 8 and the large-x limit") {
  CHECK(gamma_star_reference(8.0) ==
        doctest::Approx(1.01046565106195).epsilon(1e-12));
  // Gamma*(1) = e / sqrt(2 pi).
  CHECK(gamma_star_reference(1.0) ==
        doctest::Approx(std::exp(1.0) / std::sqrt(2.0 * kPi))
            .epsilon(1e-12));
  // At x = 1e6 the three-term series is accurate to ~1e-21.
  const double x = 1e6;
  const double series3 =
      1.0 + 1.0 / (12.0 * x) + 1.0 / (288.0 * x * x);
  CHECK(gamma_star_reference(x) == doctest::Approx(series3).epsilon(1e-12));
}

TEST_CASE("partial sums in 1/x") {
  CHECK(partial_sum(0, 8.0) == 0.0);
  CHECK(partial_sum(1, 8.0) == 1.0);
  CHECK(partial_sum(2, 8.0) == doctest::Approx(1.0 + 1.0 / 96.0).epsilon(1e-15));
  CHECK(partial_sum(3, 8.0) ==
        doctest::Approx(1.0 + 1.0 / 96.0 + 1.0 / (288.0 * 64.0))
            .epsilon(1e-15));
  CHECK_THROWS_AS((void)partial_sum(-1, 8.0), UsageError);
}

TEST_CASE("remainder by difference: frozen value at (m, x) = (2, 8)") {
  const double r = remainder_by_difference(2, 8.0);
  CHECK(r == doctest::Approx(4.898439527909e-05).epsilon(1e-8));
  // m = 0 remainder is gamma_star itself.
  CHECK(remainder_by_difference(0, 8.0) ==
        doctest::Approx(gamma_star_reference(8.0)).epsilon(1e-13));
}

TEST_CASE("both integral routes hit the frozen value at (2, 8)") {
  const auto rn = remainder_new_integral(2, 8.0);
  const auto rb = remainder_boyd_integral(2, 8.0);
  CHECK(rn.value == doctest::Approx(4.898439527909e-05).epsilon(1e-8));
  CHECK(rb.value == doctest::Approx(4.898439527909e-05).epsilon(1e-8));
  // The two contour routes agree far more tightly than either matches
  // the difference oracle.
  CHECK(std::abs(rn.value - rb.value) <= 1e-10 * std::abs(rn.value));
  CHECK(rn.error_estimate < 1e-12);
  CHECK(rb.error_estimate < 1e-12);
  CHECK(rn.evaluations > 0);
}

TEST_CASE("integral routes track the difference oracle on a small grid") {
  for (int m : {1, 2})
    for (double x : {5.0, 8.0}) {
      const double oracle = remainder_by_difference(m, x);
      const auto rn = remainder_new_integral(m, x);
      INFO("m = ", m, ", x = ", x);
      const double tol = std::max(1e-10, 1e-6 * std::abs(oracle));
      CHECK(std::abs(rn.value - oracle) <= tol);
    }
}

TEST_CASE("equivalence report over the full grid") {
  std::vector<EquivalencePair> pairs;
  for (int m : {1, 2, 3})
    for (double x : {5.0, 8.0, 12.0, 20.0})
      pairs.push_back({m, x});
  const auto rows = equivalence_report(pairs, 1e-6);
  REQUIRE(rows.size() == pairs.size());
  for (const auto& row : rows) {
    INFO("m = ", row.m, ", x = ", row.x, ": ", row.message);
    CHECK(row.passed);
    CHECK(row.max_pairwise_delta < 1e-6);
    CHECK(row.message == "ok");
    CHECK(std::isfinite(row.r_difference));
    CHECK(std::isfinite(row.r_new));
    CHECK(std::isfinite(row.r_boyd));
  }
}

TEST_CASE("equivalence report: one bad row does not sink the batch") {
  const std::vector<EquivalencePair> pairs = {{2, 8.0}, {2, -1.0}};
  const auto rows = equivalence_report(pairs, 1e-6);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].passed);
  CHECK(rows[0].message == "ok");
  CHECK_FALSE(rows[1].passed);
  CHECK(rows[1].message != "ok");
  CHECK_FALSE(std::isfinite(rows[1].r_new));
  CHECK_THROWS_AS((void)equivalence_report(pairs, 0.0), UsageError);
}

TEST_CASE("remainder argument validation") {
  CHECK_THROWS_AS((void)remainder_by_difference(-1, 8.0), UsageError);
  CHECK_THROWS_AS((void)remainder_new_integral(0, 8.0), UsageError);
  CHECK_THROWS_AS((void)remainder_new_integral(2, -8.0), DomainError);
  CHECK_THROWS_AS((void)remainder_boyd_integral(2, 0.0), DomainError);
}
