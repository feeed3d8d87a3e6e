#ifndef RIORDAN_RATIONAL_HPP
#define RIORDAN_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace riordan {

/// Exact rational scalar. Always kept in canonical form: reduced to lowest
/// terms with positive denominator, so operator== is plain value equality.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}          // NOLINT: implicit by design
  Rational(long n) : v_(n) {}         // NOLINT
  Rational(long long n);
  Rational(long num, long den);
  explicit Rational(const mpz_class& z) : v_(z) {}
  explicit Rational(mpz_class num, mpz_class den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p/q" or "p" (optional leading '-').
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return v_.get_num(); }
  const mpz_class& denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

/// n! as an exact value. n must be nonnegative.
Rational factorial(long n);

/// Generalized binomial coefficient. k < 0 (or k > n for n >= 0) gives 0;
/// a negative upper index follows C(n,k) = (-1)^k C(k-n-1, k).
Rational binomial(long n, long k);

/// Exact integer power with a (possibly negative) integer exponent.
Rational pow(const Rational& base, long e);

}  // namespace riordan

#endif
