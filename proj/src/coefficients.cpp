#include "coefficients.hpp"

#include "combinatorics.hpp"
#include "errors.hpp"
#include "series.hpp"

#include <string>

namespace stirling::coeffs {

using exact::BigInt;
using exact::RationalSeries;

const char* method_name(Method m) {
  switch (m) {
  case Method::series:        return "series";
  case Method::recurrence:    return "recurrence";
  case Method::partition:     return "partition";
  case Method::partition_alt: return "partition_alt";
  case Method::assoc3:        return "assoc3";
  case Method::first_kind:    return "first_kind";
  case Method::lambda:        return "lambda";
  }
  return "unknown";
}

std::optional<Method> method_from_name(const std::string& name) {
  for (int i = 0; i < kMethodCount; ++i) {
    Method m = static_cast<Method>(i);
    if (name == method_name(m))
      return m;
  }
  return std::nullopt;
}

const std::vector<Method>& all_methods() {
  static const std::vector<Method> all = {
      Method::series,     Method::recurrence, Method::partition,
      Method::partition_alt, Method::assoc3,  Method::first_kind,
      Method::lambda,
  };
  return all;
}

static void check_n(int n) {
  if (n < 0)
    throw UsageError("gamma coefficient index must be >= 0, got " +
                     std::to_string(n));
}

static int resolve_order(int n, int order_override) {
  if (order_override < 0)
    return 2 * n;
  if (order_override < 2 * n)
    throw InsufficientOrderError(
        "series order " + std::to_string(order_override) +
        " too small for gamma_" + std::to_string(n) + " (need >= " +
        std::to_string(2 * n) + ")");
  return order_override;
}

// gamma_n = (-1)^n / (2^n n!) * D^{2n} phi^{2n+1}(0) applied to the series a,
// where phi^{2n+1} = a^{-n-1/2}.  Shared by the series and lambda methods.
static Rational gamma_from_sqrt_series(int n, const RationalSeries& a) {
  Rational d2n = a.pow_neg_half_shifted(static_cast<unsigned>(n))
                     .derivative_at_zero(2 * n);
  Rational pref(BigInt(n % 2 == 0 ? 1 : -1),
                (BigInt(1) << n) * exact::factorial(static_cast<unsigned>(n)));
  return pref * d2n;
}

Rational gamma_via_series(int n, int order_override) {
  check_n(n);
  const int order = resolve_order(n, order_override);
  return gamma_from_sqrt_series(n, exact::g_series(order));
}

Rational gamma_via_lambda(int n, int order_override) {
  check_n(n);
  const int order = resolve_order(n, order_override);
  return gamma_from_sqrt_series(n, exact::lambda_capital_series(order));
}

Rational recurrence_d(int k) {
  if (k < 0)
    throw UsageError("recurrence_d: negative index");
  std::vector<Rational> d(static_cast<std::size_t>(k) + 1);
  d[0] = 1;
  for (int nn = 1; nn <= k; ++nn) {
    Rational sum = 0;
    for (int j = 1; j <= nn - 1; ++j)
      sum += d[static_cast<std::size_t>(j)] *
             d[static_cast<std::size_t>(nn - j)] / Rational(j + 1);
    Rational inner = d[static_cast<std::size_t>(nn - 1)] / Rational(nn) - sum;
    d[static_cast<std::size_t>(nn)] = Rational(nn + 1, nn + 2) * inner;
  }
  return d[static_cast<std::size_t>(k)];
}

Rational gamma_via_recurrence(int n) {
  check_n(n);
  // gamma_n = (-2)^n (1/2)_n d_{2n}
  Rational sign(BigInt(n % 2 == 0 ? 1 : -1) * (BigInt(1) << n));
  return sign * exact::pochhammer_half(static_cast<unsigned>(n)) *
         recurrence_d(2 * n);
}

Rational gamma_via_partition(int n) {
  check_n(n);
  Rational sum = 0;
  for (const comb::Partition& p :
       comb::enumerate_partitions(static_cast<unsigned>(2 * n))) {
    unsigned m = p.parts_total();
    BigInt denom = 1;
    for (std::size_t k = 0; k < p.multiplicities.size(); ++k) {
      unsigned mk = p.multiplicities[k];
      if (mk == 0)
        continue;
      denom *= exact::factorial(mk);
      BigInt f = exact::factorial(static_cast<unsigned>(k) + 3); // (k+2)!
      for (unsigned i = 0; i < mk; ++i)
        denom *= f;
    }
    Rational w(BigInt(m % 2 == 0 ? 1 : -1) * (BigInt(1) << m), denom);
    sum += w * exact::pochhammer_half(m + static_cast<unsigned>(n));
  }
  Rational pref(BigInt(n % 2 == 0 ? 1 : -1) * (BigInt(1) << n));
  return pref * sum;
}

Rational gamma_via_partition_alt(int n) {
  check_n(n);
  Rational sum = 0;
  for (const comb::Partition& p :
       comb::enumerate_partitions(static_cast<unsigned>(2 * n))) {
    unsigned m = p.parts_total();
    BigInt denom = 1;
    for (std::size_t k = 0; k < p.multiplicities.size(); ++k) {
      unsigned mk = p.multiplicities[k];
      if (mk == 0)
        continue;
      BigInt f = BigInt((k + 2) * (k + 3)); // (k+1)(k+2) with k 1-based
      for (unsigned i = 0; i < mk; ++i)
        denom *= f;
    }
    Rational w(BigInt(m % 2 == 0 ? 1 : -1) * (BigInt(1) << m) *
                   comb::multinomial_m3(p),
               denom);
    sum += w * exact::pochhammer_half(m + static_cast<unsigned>(n));
  }
  Rational pref(BigInt(n % 2 == 0 ? 1 : -1) * (BigInt(1) << n),
                exact::factorial(static_cast<unsigned>(2 * n)));
  return pref * sum;
}

Rational gamma_via_assoc3(int n) {
  check_n(n);
  Rational sum = 0;
  for (int j = 0; j <= 2 * n; ++j) {
    BigInt s3 = comb::assoc_stirling_3(static_cast<unsigned>(2 * j + 2 * n),
                                       static_cast<unsigned>(j));
    if (s3 == 0)
      continue;
    BigInt denom = (BigInt(1) << (j + n)) *
                   exact::factorial(static_cast<unsigned>(j + n));
    sum += Rational(BigInt(j % 2 == 0 ? 1 : -1) * s3, denom);
  }
  // (-1)^n restores the section-1 sign convention (gamma_1 = -1/12).
  return (n % 2 == 0 ? sum : -sum);
}

Rational gamma_via_first_kind(int n) {
  check_n(n);
  Rational total = 0;
  for (int m = 0; m <= 2 * n; ++m) {
    Rational ph = exact::pochhammer_half(static_cast<unsigned>(m + n));
    for (int r = 0; r <= m; ++r) {
      // (1/2)_{m+n} * 2^{m+n-r} / r!
      Rational outer =
          ph * Rational((BigInt(1) << (m + n - r)),
                        exact::factorial(static_cast<unsigned>(r)));
      Rational inner = 0;
      for (int j = 0; j <= m - r; ++j) {
        int k_idx = 2 * m + 2 * n - 2 * r - j;
        int m_idx = m - r - j;
        BigInt s = comb::stirling_first_kind(static_cast<unsigned>(k_idx),
                                             static_cast<unsigned>(m_idx));
        if (s == 0)
          continue;
        BigInt denom = exact::factorial(static_cast<unsigned>(j)) *
                       exact::factorial(static_cast<unsigned>(k_idx));
        Rational term(BigInt((j + n) % 2 == 0 ? 1 : -1) * s, denom);
        inner += term;
      }
      total += outer * inner;
    }
  }
  return total;
}

Rational gamma_coefficient(int n, Method m) {
  switch (m) {
  case Method::series:        return gamma_via_series(n);
  case Method::recurrence:    return gamma_via_recurrence(n);
  case Method::partition:     return gamma_via_partition(n);
  case Method::partition_alt: return gamma_via_partition_alt(n);
  case Method::assoc3:        return gamma_via_assoc3(n);
  case Method::first_kind:    return gamma_via_first_kind(n);
  case Method::lambda:        return gamma_via_lambda(n);
  }
  throw UsageError("gamma_coefficient: unknown method");
}

std::vector<CoefficientRecord>
coefficient_table(int n_max, const std::vector<Method>& methods) {
  check_n(n_max);
  if (methods.empty())
    throw UsageError("coefficient_table: no methods selected");
  std::vector<CoefficientRecord> out;
  for (int n = 0; n <= n_max; ++n) {
    std::size_t first_of_n = out.size();
    for (Method m : methods) {
      CoefficientRecord rec;
      rec.n = n;
      rec.method = m;
      rec.value = gamma_coefficient(n, m);
      rec.order_used = 2 * n;
      out.push_back(std::move(rec));
    }
    // Integrity: every method must reproduce the first method's value.
    for (std::size_t i = first_of_n + 1; i < out.size(); ++i) {
      if (out[i].value != out[first_of_n].value)
        throw IntegrityError(
            "coefficient_table: methods disagree at n=" + std::to_string(n) +
            ": " + method_name(out[first_of_n].method) + " gives " +
            out[first_of_n].value.str() + " but " + method_name(out[i].method) +
            " gives " + out[i].value.str());
    }
  }
  return out;
}

} // namespace stirling::coeffs
