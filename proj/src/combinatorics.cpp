#include "combinatorics.hpp"

#include "errors.hpp"

#include <string>

namespace stirling::comb {

unsigned Partition::parts_total() const {
  unsigned m = 0;
  for (unsigned mk : multiplicities)
    m += mk;
  return m;
}

bool Partition::valid() const {
  if (multiplicities.size() != target)
    return false;
  unsigned long long sum = 0;
  for (std::size_t k = 0; k < multiplicities.size(); ++k)
    sum += (k + 1) * static_cast<unsigned long long>(multiplicities[k]);
  return sum == target;
}

std::vector<Partition> enumerate_partitions(unsigned N) {
  std::vector<Partition> out;
  if (N == 0) {
    out.push_back(Partition{{}, 0});
    return out;
  }
  // Recursive descent, parts non-increasing, largest part first.  Trying
  // larger parts first yields exactly the documented order: [4] before
  // [3,1] before [2,2] before [2,1,1] before [1,1,1,1].
  std::vector<unsigned> parts;
  auto emit = [&]() {
    Partition p;
    p.target = N;
    p.multiplicities.assign(N, 0);
    for (unsigned part : parts)
      ++p.multiplicities[part - 1];
    out.push_back(std::move(p));
  };
  auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      self(self, remaining - part, part);
      parts.pop_back();
    }
  };
  rec(rec, N, N);
  return out;
}

BigInt multinomial_m3(const Partition& p) {
  if (!p.valid())
    throw UsageError("multinomial_m3: invalid partition");
  BigInt denom = 1;
  for (std::size_t k = 0; k < p.multiplicities.size(); ++k) {
    unsigned mk = p.multiplicities[k];
    if (mk == 0)
      continue;
    denom *= exact::factorial(mk);
    BigInt kfac = exact::factorial(static_cast<unsigned>(k) + 1);
    for (unsigned i = 0; i < mk; ++i)
      denom *= kfac;
  }
  BigInt num = exact::factorial(p.target);
  // Exact by construction (the weight counts set partitions).
  return num / denom;
}

Rational faa_di_bruno(std::span<const Rational> f_derivs,
                      std::span<const Rational> g_derivs, unsigned n) {
  if (f_derivs.size() < n + 1)
    throw UsageError("faa_di_bruno: need f^(0..n), got " +
                     std::to_string(f_derivs.size()) + " values for n=" +
                     std::to_string(n));
  if (g_derivs.size() < n)
    throw UsageError("faa_di_bruno: need g^(1..n), got " +
                     std::to_string(g_derivs.size()) + " values for n=" +
                     std::to_string(n));
  if (n == 0)
    return f_derivs[0];
  Rational total = 0;
  for (const Partition& p : enumerate_partitions(n)) {
    Rational term = f_derivs[p.parts_total()];
    for (std::size_t k = 0; k < p.multiplicities.size(); ++k) {
      unsigned mk = p.multiplicities[k];
      if (mk == 0)
        continue;
      Rational base = g_derivs[k] /
                      Rational(exact::factorial(static_cast<unsigned>(k) + 1));
      Rational pw = 1;
      for (unsigned i = 0; i < mk; ++i)
        pw *= base;
      term *= pw / Rational(exact::factorial(mk));
    }
    total += term;
  }
  return total * Rational(exact::factorial(n));
}

BigInt assoc_stirling_3(unsigned l, unsigned k) {
  if (l == 0 && k == 0)
    return 1;
  if (k == 0 || l < 3 * k)
    return 0;
  // Triangular table via the recurrence; rows l, columns k <= l/3.
  std::vector<std::vector<BigInt>> S(l + 1);
  for (unsigned i = 0; i <= l; ++i)
    S[i].assign(k + 1, BigInt(0));
  S[0][0] = 1;
  for (unsigned i = 0; i < l; ++i) {
    // S(i+1, j) = j*S(i, j) + C(i,2)*S(i-2, j-1)
    for (unsigned j = 1; j <= k; ++j) {
      BigInt v = BigInt(j) * S[i][j];
      if (i >= 2 && j >= 1)
        v += exact::binomial(i, 2) * S[i - 2][j - 1];
      S[i + 1][j] = std::move(v);
    }
  }
  return S[l][k];
}

BigInt stirling_first_kind(unsigned k, unsigned m) {
  if (m > k)
    return 0;
  if (k == 0)
    return 1; // S_0^{(0)}
  std::vector<BigInt> row(k + 1, BigInt(0)); // row for current k, index m
  row[0] = 1;                                // k = 0
  for (unsigned kk = 0; kk < k; ++kk) {
    // next[m] = row[m-1] - kk*row[m]
    std::vector<BigInt> next(k + 1, BigInt(0));
    for (unsigned mm = 0; mm <= std::min(kk + 1, k); ++mm) {
      BigInt v = -BigInt(kk) * row[mm];
      if (mm >= 1)
        v += row[mm - 1];
      next[mm] = std::move(v);
    }
    row = std::move(next);
  }
  return row[m];
}

} // namespace stirling::comb
