// The Stirling coefficients gamma_n of the asymptotic expansion
//   Gamma*(x) ~ sum_{n>=0} (-1)^n gamma_n / x^n,
//   Gamma*(x) = Gamma(x) / (sqrt(2 pi) x^{x-1/2} e^{-x}),
// computed exactly (as rationals) by seven independent routes:
//
//   series        gamma_n = (-1)^n/(2^n n!) * D^{2n} phi^{2n+1}(0),
//                 phi^{2n+1} = g^{-n-1/2} from the series engine
//   recurrence    gamma_n = (-2)^n (1/2)_n d_{2n} with the quadratic
//                 d-recurrence
//   partition     sum over partitions of 2n with (-2)^m (1/2)_{m+n} weights
//                 and m_k!((k+2)!)^{m_k} denominators, prefactor (-2)^n
//   partition_alt same sum re-grouped through the multinomial M3 weights
//                 C_m and ((k+1)(k+2))^{m_k} denominators
//   assoc3        alternating sum of 3-associated Stirling numbers
//                 S3(2j+2n, j), prefactor (-1)^n
//   first_kind    triple sum over signed Stirling numbers of the first kind
//   lambda        same derivative formula applied to Lambda(z) = 1-2lambda(z)
//                 from the log-transform route
//
// All methods agree exactly; coefficient_table cross-checks them and throws
// IntegrityError naming the offenders on any mismatch.
//
// First values: 1, -1/12, 1/288, 139/51840, -571/2488320.

#pragma once

#include "rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stirling::coeffs {

using exact::Rational;

enum class Method {
  series = 0,
  recurrence,
  partition,
  partition_alt,
  assoc3,
  first_kind,
  lambda,
};

inline constexpr int kMethodCount = 7;

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

// order_override: series truncation order for the series/lambda methods
// (>= 2n required; default exactly 2n).  Ignored by the closed-form methods.
Rational gamma_via_series(int n, int order_override = -1);
Rational gamma_via_recurrence(int n);
Rational gamma_via_partition(int n);
Rational gamma_via_partition_alt(int n);
Rational gamma_via_assoc3(int n);
Rational gamma_via_first_kind(int n);
Rational gamma_via_lambda(int n, int order_override = -1);

Rational gamma_coefficient(int n, Method m);

// d_k of the recurrence (d_0 = 1, d_1 = 2/3, d_2 = 1/12, d_3 = -2/135, ...).
Rational recurrence_d(int k);

struct CoefficientRecord {
  int n = 0;
  Method method = Method::series;
  Rational value;
  int order_used = 0; // internal expansion depth (series order or 2n)
};

const std::vector<Method>& all_methods();

// Records for n = 0..n_max, every requested method, ordered by n then by
// Method enum order.  Verifies pairwise equality per n; IntegrityError on
// any disagreement (message names both methods and both values).
std::vector<CoefficientRecord>
coefficient_table(int n_max, const std::vector<Method>& methods = all_methods());

} // namespace stirling::coeffs
