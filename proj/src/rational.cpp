#include "riordan/rational.hpp"

#include <ostream>

#include "riordan/errors.hpp"

namespace riordan {

Rational::Rational(long long n) : v_(mpz_class(std::to_string(n))) {}

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw NotAUnit("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) : v_(std::move(num), std::move(den)) {
  if (v_.get_den() == 0) throw NotAUnit("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s));
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    return Rational(std::move(num), std::move(den));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: '" + s + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw NotAUnit("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational factorial(long n) {
  if (n < 0) throw Error("factorial of negative integer");
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(z);
}

Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  if (n >= 0) {
    if (k > n) return Rational(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rational(z);
  }
  // C(n,k) = (-1)^k C(k-n-1, k) for n < 0
  Rational c = binomial(k - n - 1, k);
  return (k % 2 == 0) ? c : -c;
}

Rational pow(const Rational& base, long e) {
  if (e < 0) {
    if (base.is_zero()) throw NotAUnit("0 raised to a negative power");
    return Rational(1) / pow(base, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(),
             static_cast<unsigned long>(e));
  return Rational(std::move(num), std::move(den));
}

}  // namespace riordan
