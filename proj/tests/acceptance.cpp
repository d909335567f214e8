// Acceptance harness: eight go/no-go criteria, each printed as a single
// [PASS]/[FAIL] line with the measured numbers and its runtime budget.
// Exit code is the number of failed criteria.

#include "asymptotics.hpp"
#include "coefficients.hpp"
#include "combinatorics.hpp"
#include "lagrange.hpp"
#include "series.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

using namespace stirling;
using exact::BigInt;
using exact::Rational;

namespace {

int failures = 0;

void report(int index, bool ok, double seconds, double budget,
            const std::string& detail) {
  const bool within = seconds < budget;
  if (!ok || !within)
    ++failures;
  std::printf("[%s] criterion %d: %s (%.2f s, budget %.0f s)\n",
              (ok && within) ? "PASS" : "FAIL", index, detail.c_str(),
              seconds, budget);
}

void run(int index, double budget, const std::function<bool(std::string&)>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail += std::string(" threw: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  report(index, ok, secs, budget, detail);
}

Rational rat(long long p, long long q) { return {BigInt(p), BigInt(q)}; }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

} // namespace

int main() {
  // 1. Exact reproduction of gamma_0..gamma_4 by every method.
  run(1, 1.0, [](std::string& d) {
    const std::vector<Rational> expected = {Rational(1), rat(-1, 12),
                                            rat(1, 288), rat(139, 51840),
                                            rat(-571, 2488320)};
    bool ok = true;
    for (int n = 0; n <= 4; ++n)
      for (coeffs::Method m : coeffs::all_methods())
        ok = ok && coeffs::gamma_coefficient(n, m) == expected[(size_t)n];
    d = "gamma_0..gamma_4 exact for all 7 methods";
    return ok;
  });

  // 2. Exact all-method agreement through n = 12.
  run(2, 30.0, [](std::string& d) {
    const auto table = coeffs::coefficient_table(12); // throws on mismatch
    d = "all 7 methods agree exactly for n <= 12 (" +
        std::to_string(table.size()) + " records)";
    return table.size() == 13u * (size_t)coeffs::kMethodCount;
  });

  // 3. The n = 2 worked example: partitions, weights, assembly to 1/288.
  run(3, 1.0, [](std::string& d) {
    const auto parts = comb::enumerate_partitions(4);
    const std::vector<std::vector<unsigned>> tuples = {{0, 0, 0, 1},
                                                       {1, 0, 1, 0},
                                                       {0, 2, 0, 0},
                                                       {2, 1, 0, 0},
                                                       {4, 0, 0, 0}};
    const std::vector<long long> weights = {1, 4, 3, 6, 1};
    bool ok = parts.size() == 5;
    Rational total(0);
    for (size_t i = 0; ok && i < parts.size(); ++i) {
      ok = parts[i].multiplicities == tuples[i] &&
           comb::multinomial_m3(parts[i]) == BigInt(weights[i]);
      const unsigned m = parts[i].parts_total();
      Rational term(comb::multinomial_m3(parts[i]), BigInt(1));
      for (unsigned j = 0; j < m; ++j)
        term = term * Rational(-2);
      term = term * exact::pochhammer_half(m + 2);
      for (unsigned k = 1; k <= parts[i].multiplicities.size(); ++k)
        for (unsigned rep = 0; rep < parts[i].multiplicities[k - 1]; ++rep)
          term = term / Rational(BigInt((k + 1) * (k + 2)), BigInt(1));
      total = total + term;
    }
    const Rational gamma2 = rat(4, 24) * total;
    ok = ok && gamma2 == rat(1, 288) &&
         gamma2 == coeffs::gamma_via_partition_alt(2);
    d = "partition tuples, weights {1,4,3,6,1}, assembly = 1/288";
    return ok;
  });

  // 4. Remainder route agreement at (m, x) = (2, 8).
  run(4, 60.0, [](std::string& d) {
    const double diff = asym::remainder_by_difference(2, 8.0);
    const auto rn = asym::remainder_new_integral(2, 8.0);
    const auto rb = asym::remainder_boyd_integral(2, 8.0);
    const double pair_rel = std::abs(rn.value - rb.value) / std::abs(diff);
    const double new_rel = std::abs(rn.value - diff) / std::abs(diff);
    const double boyd_rel = std::abs(rb.value - diff) / std::abs(diff);
    d = "R_2(8): |new-boyd| rel " + fmt(pair_rel) + " < 1e-8; vs difference " +
        fmt(new_rel) + ", " + fmt(boyd_rel) + " < 1e-6";
    return pair_rel < 1e-8 && new_rel < 1e-6 && boyd_rel < 1e-6;
  });

  // 5. Asymptotic scaling x^m R_m(x) / ((-1)^m gamma_m) -> 1 at x = 100.
  run(5, 5.0, [](std::string& d) {
    bool ok = true;
    d = "x = 100 scaled remainders:";
    for (int m = 1; m <= 3; ++m) {
      const double gm = coeffs::gamma_via_recurrence(m).to_double();
      const double gm1 = coeffs::gamma_via_recurrence(m + 1).to_double();
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      const double ratio = std::pow(100.0, m) *
                           asym::remainder_by_difference(m, 100.0) /
                           (sign * gm);
      const double width = 2.0 * std::abs(gm1 / (gm * 100.0));
      ok = ok && ratio > 1.0 - width && ratio < 1.0 + width;
      d += " m=" + std::to_string(m) + ": " + fmt(ratio) + " in 1+-" +
           fmt(width) + ";";
    }
    return ok;
  });

  // 6. Lagrange reconstruction defect over the grid.
  run(6, 30.0, [](std::string& d) {
    double worst = 0.0;
    for (double u : {0.25, 0.5, 1.0, 2.0})
      for (int m = 2; m <= 6; ++m)
        worst = std::max(worst,
                         lagrange::invert_with_remainder(u, m).defect);
    d = "max |series + correction + Q_m - t| = " + fmt(worst) + " < 1e-10";
    return worst < 1e-10;
  });

  // 7. Convergence-radius signature |a_60|^{-1/60} near 2 sqrt(pi).
  run(7, 10.0, [](std::string& d) {
    const auto phi = lagrange::phi_series(60);
    const auto a = lagrange::inversion_series_coeffs(phi, 60);
    const double radius =
        std::pow(a.back().abs().to_double(), -1.0 / 60.0);
    const double target = 2.0 * std::sqrt(std::numbers::pi);
    const double rel = std::abs(radius - target) / target;
    d = "|a_60|^(-1/60) = " + fmt(radius) + " vs 2 sqrt(pi) = " +
        fmt(target) + " (off " + fmt(100.0 * rel) + "%)";
    return rel < 0.10;
  });

  // 8. Gamma oracle closed forms.
  run(8, 1.0, [](std::string& d) {
    const double g1 = asym::gamma_reference(1.0);
    const double gh = asym::gamma_reference(0.5);
    const double g6 = asym::gamma_reference(6.0);
    const double e1 = std::abs(g1 - 1.0);
    const double eh = std::abs(gh - std::sqrt(std::numbers::pi)) /
                      std::sqrt(std::numbers::pi);
    const double e6 = std::abs(g6 - 120.0) / 120.0;
    d = "Gamma(1), Gamma(1/2), Gamma(6) rel errors " + fmt(e1) + ", " +
        fmt(eh) + ", " + fmt(e6) + " < 1e-12";
    return e1 < 1e-12 && eh < 1e-12 && e6 < 1e-12;
  });

  if (failures == 0)
    std::printf("acceptance: all 8 criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures;
}
