#include "riordan/power_series.hpp"

#include <algorithm>
#include <sstream>

#include "riordan/errors.hpp"

namespace riordan {

PowerSeries::PowerSeries(std::initializer_list<Rational> coeffs, std::size_t order)
    : PowerSeries(std::vector<Rational>(coeffs), order) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs, std::size_t order) : c_(std::move(coeffs)) {
  if (c_.size() > order + 1)
    throw OrderExceeded("coefficient list longer than truncation order allows");
  c_.resize(order + 1);
}

PowerSeries PowerSeries::constant(const Rational& value, std::size_t order) {
  PowerSeries s(order);
  s.c_[0] = value;
  return s;
}

PowerSeries PowerSeries::identity(std::size_t order) {
  if (order < 1) throw OrderExceeded("series x needs order >= 1");
  PowerSeries s(order);
  s.c_[1] = 1;
  return s;
}

PowerSeries PowerSeries::inverse_poly(std::vector<Rational> poly, std::size_t order) {
  return PowerSeries::one(order) / PowerSeries(std::move(poly), order);
}

const Rational& PowerSeries::coefficient(std::size_t n) const {
  if (n >= c_.size())
    throw OrderExceeded("coefficient index " + std::to_string(n) +
                        " beyond truncation order " + std::to_string(order()));
  return c_[n];
}

void PowerSeries::set_coefficient(std::size_t n, Rational value) {
  if (n >= c_.size()) throw OrderExceeded("coefficient index beyond truncation order");
  c_[n] = std::move(value);
}

PowerSeries PowerSeries::truncate(std::size_t new_order) const {
  if (new_order > order()) throw OrderExceeded("cannot extend a truncated series");
  PowerSeries r(new_order);
  std::copy(c_.begin(), c_.begin() + new_order + 1, r.c_.begin());
  return r;
}

bool PowerSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r(order());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  PowerSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  PowerSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  PowerSeries r(n);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j + i <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  return r;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  // Exact division: if b = x^v * u with u a unit, a must also be divisible
  // by x^v; the quotient loses v coefficients of precision.
  std::size_t v = 0;
  while (v <= b.order() && b.c_[v].is_zero()) ++v;
  if (v > b.order() || v > std::min(a.order(), b.order()))
    throw NotAUnit("division by series with zero constant term");
  for (std::size_t i = 0; i < v; ++i)
    if (!a.c_[i].is_zero())
      throw NotAUnit("division by series with zero constant term");
  std::size_t n = std::min(a.order(), b.order()) - v;
  PowerSeries q(n);
  for (std::size_t i = 0; i <= n; ++i) {
    Rational acc = a.c_[i + v];
    for (std::size_t j = 0; j < i; ++j) acc -= q.c_[j] * b.c_[i - j + v];
    q.c_[i] = acc / b.c_[v];
  }
  return q;
}

PowerSeries operator*(const Rational& c, PowerSeries s) {
  for (std::size_t i = 0; i <= s.order(); ++i) s.c_[i] *= c;
  return s;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
  if (!inner.c_[0].is_zero())
    throw CompositionDomain("inner series must have zero constant term");
  std::size_t n = std::min(order(), inner.order());
  PowerSeries in = inner.truncate(n);
  // Horner evaluation from the top coefficient down.
  PowerSeries r = PowerSeries::constant(c_[std::min(order(), n)], n);
  for (std::size_t k = n; k-- > 0;) {
    r = r * in;
    r.c_[0] += c_[k];
  }
  return r;
}

PowerSeries PowerSeries::revert() const {
  if (!c_[0].is_zero() || order() < 1 || c_[1].is_zero())
    throw NotRevertible("reversion needs f(0)=0 and nonzero linear coefficient");
  std::size_t n = order();
  PowerSeries b(n);
  b.c_[1] = Rational(1) / c_[1];
  // Solve f(b(x)) = x one coefficient at a time: with b known through
  // x^(m-1) and b_m = 0, the residual at x^m is linear in b_m with slope f_1.
  for (std::size_t m = 2; m <= n; ++m) {
    PowerSeries e = truncate(m).compose(b.truncate(m));
    b.c_[m] = -e.coefficient(m) / c_[1];
  }
  return b;
}

namespace {
// Exact square root of a rational that must be a perfect square.
Rational rational_sqrt(const Rational& r) {
  if (r.sign() < 0) throw NoSeriesSqrt("constant term is negative");
  if (mpz_perfect_square_p(r.numerator().get_mpz_t()) == 0 ||
      mpz_perfect_square_p(r.denominator().get_mpz_t()) == 0)
    throw NoSeriesSqrt("constant term is not the square of a rational");
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), r.numerator().get_mpz_t());
  mpz_sqrt(den.get_mpz_t(), r.denominator().get_mpz_t());
  return Rational(std::move(num), std::move(den));
}
}  // namespace

PowerSeries PowerSeries::sqrt() const {
  Rational t0 = rational_sqrt(c_[0]);
  if (t0.is_zero()) throw NoSeriesSqrt("sqrt of series with zero constant term");
  std::size_t n = order();
  PowerSeries t(n);
  t.c_[0] = t0;
  Rational two_t0 = Rational(2) * t0;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = c_[m];
    for (std::size_t i = 1; i < m; ++i) acc -= t.c_[i] * t.c_[m - i];
    t.c_[m] = acc / two_t0;
  }
  return t;
}

PowerSeries PowerSeries::exp() const {
  if (!c_[0].is_zero()) throw ExpDomain("exp needs zero constant term");
  std::size_t n = order();
  PowerSeries e(n);
  e.c_[0] = 1;
  // n E_n = sum_{k=1..n} k s_k E_{n-k}, from E' = s' E.
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= m; ++k)
      acc += Rational(static_cast<long>(k)) * c_[k] * e.c_[m - k];
    e.c_[m] = acc / Rational(static_cast<long>(m));
  }
  return e;
}

PowerSeries PowerSeries::log() const {
  if (c_[0] != Rational(1)) throw LogDomain("log needs constant term 1");
  if (order() == 0) return PowerSeries(0);
  // log(s) = integral(s'/s); done at full order via the coefficient recurrence
  // m L_m = m s_m - sum_{k=1..m-1} k L_k s_{m-k}.
  std::size_t n = order();
  PowerSeries l(n);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = Rational(static_cast<long>(m)) * c_[m];
    for (std::size_t k = 1; k < m; ++k)
      acc -= Rational(static_cast<long>(k)) * l.c_[k] * c_[m - k];
    l.c_[m] = acc / Rational(static_cast<long>(m));
  }
  return l;
}

PowerSeries PowerSeries::derivative() const {
  if (order() == 0) return PowerSeries(0);
  PowerSeries d(order() - 1);
  for (std::size_t i = 1; i <= order(); ++i)
    d.c_[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return d;
}

PowerSeries PowerSeries::integral() const {
  PowerSeries s(order() + 1);
  for (std::size_t i = 0; i <= order(); ++i)
    s.c_[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
  return s;
}

PowerSeries PowerSeries::aerate() const {
  PowerSeries r(order());
  for (std::size_t i = 0; 2 * i <= order(); ++i) r.c_[2 * i] = c_[i];
  return r;
}

PowerSeries PowerSeries::shift_up() const {
  PowerSeries r(order());
  for (std::size_t i = 0; i + 1 <= order(); ++i) r.c_[i + 1] = c_[i];
  return r;
}

PowerSeries PowerSeries::shift_down() const {
  if (!c_[0].is_zero()) throw Error("shift_down of series with nonzero constant term");
  if (order() == 0) return PowerSeries(0);
  PowerSeries r(order() - 1);
  for (std::size_t i = 1; i <= order(); ++i) r.c_[i - 1] = c_[i];
  return r;
}

std::string PowerSeries::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  return os.str();
}

PowerSeries PowerSeries::parse_list(const std::string& text) {
  std::vector<Rational> coeffs;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    // trim spaces
    auto b = item.find_first_not_of(" \t\n\r");
    auto e = item.find_last_not_of(" \t\n\r");
    if (b == std::string::npos) throw ParseError("empty entry in coefficient list");
    coeffs.push_back(Rational::parse(item.substr(b, e - b + 1)));
  }
  if (coeffs.empty()) throw ParseError("empty coefficient list");
  std::size_t n = coeffs.size() - 1;
  return PowerSeries(std::move(coeffs), n);
}

}  // namespace riordan
