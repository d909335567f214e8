// Integer partitions in multiplicity form, the multinomial weight used by
// the Faa di Bruno / set-partition formulas, and the two Stirling-number
// families needed by the closed-form coefficient methods:
//
//   * 3-associated Stirling numbers of the second kind S3(l, k): partitions
//     of an l-set into k blocks, every block of size >= 3.  EGF:
//     exp[u (e^t - 1 - t - t^2/2)] = sum S3(l,k) u^k t^l / l!.
//   * Signed Stirling numbers of the first kind S_k^{(m)} defined by
//     x(x-1)...(x-k+1) = sum_m S_k^{(m)} x^m.
//
// A Partition stores multiplicities m_1..m_N with sum k*m_k = N; the
// enumeration order is lexicographic on the part lists written largest part
// first, descending (e.g. N=4: [4], [3,1], [2,2], [2,1,1], [1,1,1,1]).

#pragma once

#include "rational.hpp"

#include <span>
#include <vector>

namespace stirling::comb {

using exact::BigInt;
using exact::Rational;

struct Partition {
  // multiplicities[k-1] = m_k = number of parts equal to k; size() == target.
  std::vector<unsigned> multiplicities;
  unsigned target = 0; // N

  // m = total number of parts.
  unsigned parts_total() const;
  bool valid() const; // sum k*m_k == target
};

// All partitions of N (N >= 0; N = 0 yields the single empty partition),
// in the documented deterministic order.
std::vector<Partition> enumerate_partitions(unsigned N);

// N! / prod_k [ m_k! * (k!)^{m_k} ]: the number of set partitions of an
// N-set whose block-size multiset matches p.
BigInt multinomial_m3(const Partition& p);

// n-th derivative at 0 of f(g(t)) via Faa di Bruno's formula.
//   f_derivs: f^{(m)}(g(0)) for m = 0..n   (length >= n+1)
//   g_derivs: g^{(k)}(0)    for k = 1..n   (length >= n; index 0 is g')
// Returns sum over partitions of n of
//   n! * f^{(m)}(g0) * prod_k (1/m_k!) (g^{(k)}(0)/k!)^{m_k}.
Rational faa_di_bruno(std::span<const Rational> f_derivs,
                      std::span<const Rational> g_derivs, unsigned n);

// 3-associated Stirling number of the second kind; 0 when l < 3k, except
// S3(0,0) = 1.  Recurrence: S3(l+1, k) = k S3(l, k) + C(l,2) S3(l-2, k-1).
BigInt assoc_stirling_3(unsigned l, unsigned k);

// Signed Stirling number of the first kind S_k^{(m)};
// S_{k+1}^{(m)} = S_k^{(m-1)} - k S_k^{(m)}, S_0^{(0)} = 1.
BigInt stirling_first_kind(unsigned k, unsigned m);

} // namespace stirling::comb
