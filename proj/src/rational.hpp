// Exact rational arithmetic on arbitrary-precision integers.
//
// Canonical form invariant: gcd(|num|, den) == 1 and den > 0 at all times;
// zero is 0/1.  All arithmetic preserves the invariant.  Serialization is
// "p/q" in lowest terms, or just "p" when q == 1.
//
// The heavy lifting (bignum arithmetic, gcd) is boost::multiprecision's
// cpp_int; this type adds the canonical form, parsing/printing, and the
// handful of exact combinatorial helpers the rest of the library needs.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace stirling::exact {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}          // NOLINT: implicit ok
  explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);                    // canonicalizes

  // Parses "p", "-p", "p/q" (whitespace-free).  Throws UsageError on junk,
  // DomainError on zero denominator.
  static Rational parse(std::string_view s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);             // throws on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // "p/q" lowest terms; "p" when q == 1.
  std::string str() const;
  double to_double() const;

private:
  void normalize();
  BigInt num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// --- exact combinatorial helpers ------------------------------------------

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned k);

// (1/2)_n, which also equals (2n)! / (4^n n!).
Rational pochhammer_half(unsigned n);

// Generalized binomial coefficient C(a, k) = (a)(a-1)...(a-k+1)/k!.
Rational binomial_general(const Rational& a, unsigned k);

} // namespace stirling::exact
