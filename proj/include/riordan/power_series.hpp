#ifndef RIORDAN_POWER_SERIES_HPP
#define RIORDAN_POWER_SERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

/// Truncated formal power series over Rational with an explicit truncation
/// order N: exactly the coefficients of x^0..x^N are stored. Binary
/// operations on mismatched orders truncate to the smaller order; reading a
/// coefficient past the truncation order throws OrderExceeded rather than
/// returning a silent zero.
class PowerSeries {
 public:
  /// The zero series of the given order.
  explicit PowerSeries(std::size_t order) : c_(order + 1) {}
  /// Series with the given low-order coefficients, zero-padded to `order`.
  PowerSeries(std::initializer_list<Rational> coeffs, std::size_t order);
  PowerSeries(std::vector<Rational> coeffs, std::size_t order);

  static PowerSeries constant(const Rational& value, std::size_t order);
  static PowerSeries one(std::size_t order) { return constant(1, order); }
  static PowerSeries identity(std::size_t order);  // the series x
  /// 1/(c0 + c1 x + ... ) for a polynomial given by its coefficients.
  static PowerSeries inverse_poly(std::vector<Rational> poly, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const Rational& coefficient(std::size_t n) const;
  const Rational& operator[](std::size_t n) const { return coefficient(n); }
  void set_coefficient(std::size_t n, Rational value);
  const std::vector<Rational>& coefficients() const { return c_; }

  /// Copy truncated (or zero-extended is not allowed: new_order <= order()).
  PowerSeries truncate(std::size_t new_order) const;

  bool is_zero() const;
  bool is_unit() const { return !c_[0].is_zero(); }

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  /// Exact division; if b has valuation v then a must too, and the quotient
  /// order drops by v.
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& c, PowerSeries s);

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.c_ == b.c_;
  }

  /// outer(inner(x)); requires inner(0) = 0.
  PowerSeries compose(const PowerSeries& inner) const;
  /// Compositional inverse; requires f(0) = 0 and [x^1]f != 0.
  PowerSeries revert() const;
  /// Square root with constant term the square of a rational.
  PowerSeries sqrt() const;
  /// Formal exponential; requires s(0) = 0.
  PowerSeries exp() const;
  /// Formal logarithm; requires s(0) = 1.
  PowerSeries log() const;
  /// Formal derivative; result order is one less (constants map to order 0).
  PowerSeries derivative() const;
  /// Formal antiderivative with constant term 0; result order is one more.
  PowerSeries integral() const;
  /// Interleaves coefficients with zeros, i.e. s(x^2), truncated to order().
  PowerSeries aerate() const;

  /// Multiply by x (coefficients shift up, tail truncated).
  PowerSeries shift_up() const;
  /// Divide by x; requires zero constant term. Result order is one less.
  PowerSeries shift_down() const;

  /// Comma-separated coefficient list, e.g. "1,1/2,0,-2".
  std::string str() const;
  static PowerSeries parse_list(const std::string& text);

 private:
  std::vector<Rational> c_;
};

}  // namespace riordan

#endif
