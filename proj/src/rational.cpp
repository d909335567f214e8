#include "rational.hpp"

#include "errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <utility>

namespace stirling::exact {

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0)
    throw DomainError("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view s) {
  auto parse_int = [](std::string_view t) -> BigInt {
    if (t.empty())
      throw UsageError("Rational::parse: empty integer");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size())
      throw UsageError("Rational::parse: sign without digits");
    for (std::size_t k = i; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9')
        throw UsageError("Rational::parse: bad character in '" +
                         std::string(t) + "'");
    return BigInt(std::string(t));
  };
  std::size_t slash = s.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(s));
  BigInt p = parse_int(s.substr(0, slash));
  BigInt q = parse_int(s.substr(slash + 1));
  if (q == 0)
    throw DomainError("Rational::parse: zero denominator in '" +
                      std::string(s) + "'");
  return Rational(std::move(p), std::move(q));
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0)
    throw DomainError("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string Rational::str() const {
  if (den_ == 1)
    return num_.str();
  return num_.str() + "/" + den_.str();
}

double Rational::to_double() const {
  // num/den are canonical, so the two-argument cpp_rational ctor is safe.
  boost::multiprecision::cpp_rational r(num_, den_);
  return r.convert_to<double>();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k)
    f *= k;
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  BigInt b = 1;
  for (unsigned i = 0; i < k; ++i) {
    b *= n - i;
    b /= i + 1; // exact at each step: product of i+1 consecutive ints
  }
  return b;
}

Rational pochhammer(const Rational& a, unsigned k) {
  Rational p = 1;
  Rational term = a;
  for (unsigned i = 0; i < k; ++i) {
    p *= term;
    term += 1;
  }
  return p;
}

Rational pochhammer_half(unsigned n) {
  // (1/2)_n = (2n)! / (4^n n!)
  return pochhammer(Rational(1, 2), n);
}

Rational binomial_general(const Rational& a, unsigned k) {
  Rational p = 1;
  Rational term = a;
  for (unsigned i = 0; i < k; ++i) {
    p *= term;
    term -= 1;
  }
  return p / Rational(factorial(k));
}

} // namespace stirling::exact
