#include "riordan/orthopoly.hpp"

#include <sstream>

#include "riordan/errors.hpp"
#include "riordan/exp_riordan.hpp"
#include "riordan/power_series.hpp"
#include "riordan/riordan_array.hpp"

namespace riordan {

const Rational& MomentSequence::at(std::size_t n) const {
  if (n >= values.size())
    throw NotEnoughMoments("moment mu_" + std::to_string(n) + " not available");
  return values[n];
}

std::string MomentSequence::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

MomentSequence MomentSequence::parse(const std::string& text) {
  std::vector<Rational> vals;
  std::string item;
  std::istringstream is(text);
  // accepts commas and/or newlines as separators
  while (std::getline(is, item, ',')) {
    std::istringstream line(item);
    std::string tok;
    while (line >> tok) vals.push_back(Rational::parse(tok));
  }
  if (vals.empty()) throw ParseError("empty moment list");
  return MomentSequence(std::move(vals));
}

TriangularMatrix generate_polynomials(const ThreeTermRecurrence& rec, std::size_t count) {
  if (count == 0) throw Error("need at least one polynomial");
  std::vector<std::vector<Rational>> rows(count);
  rows[0] = {Rational(1)};
  if (count > 1) rows[1] = {-rec.alpha(0), Rational(1)};
  for (std::size_t n = 1; n + 1 < count; ++n) {
    std::vector<Rational> next(n + 2, 0);
    // p_{n+1} = (x - alpha_n) p_n - beta_n p_{n-1}
    for (std::size_t k = 0; k <= n; ++k) {
      next[k + 1] += rows[n][k];
      next[k] -= rec.alpha(n) * rows[n][k];
    }
    for (std::size_t k = 0; k < n; ++k) next[k] -= rec.beta(n) * rows[n - 1][k];
    rows[n + 1] = std::move(next);
  }
  return TriangularMatrix(std::move(rows));
}

MomentSequence moments_from_recurrence(const ThreeTermRecurrence& rec, std::size_t count) {
  if (count == 0) throw Error("need at least one moment");
  std::size_t n = count - 1;  // truncation order
  PowerSeries conv = PowerSeries::one(n);
  if (n == 0) return MomentSequence(conv.coefficients());
  // Bottom-up convergents: levels at depth k contribute from order 2k on,
  // so depth floor(n/2)+1 suffices and the deepest beta term is dropped.
  std::size_t depth = n / 2 + 1;
  for (std::size_t k = depth; k-- > 0;) {
    PowerSeries denom = PowerSeries::one(n);
    denom.set_coefficient(1, -rec.alpha(k));
    if (k + 1 < depth)
      denom = denom - rec.beta(k + 1) * conv.shift_up().shift_up();
    conv = PowerSeries::one(n) / denom;
  }
  return MomentSequence(conv.coefficients());
}

MomentSequence moments_from_array_column(const TriangularMatrix& m, bool egf_column) {
  std::vector<Rational> vals;
  vals.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational v = m.entry(i, 0);
    if (egf_column) v *= factorial(static_cast<long>(i));
    vals.push_back(std::move(v));
  }
  return MomentSequence(std::move(vals));
}

MomentSequence moments_of(const OrdinaryRiordan& array, std::size_t count) {
  return moments_from_array_column(array.realize(count), false);
}

MomentSequence moments_of(const ExponentialRiordan& array, std::size_t count) {
  // realize() already carries the n! scaling in column 0
  return moments_from_array_column(array.realize(count), false);
}

Rational determinant(const std::vector<std::vector<Rational>>& m) {
  std::size_t n = m.size();
  if (n == 0) return Rational(1);
  for (const auto& row : m)
    if (row.size() != n) throw Error("determinant of non-square matrix");
  // Clear denominators row by row, then run fraction-free Bareiss on integers.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpq_class scale(1);  // det(cleared) = det(m) * scale
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m[i][j].denominator().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = m[i][j].numerator() * (l / m[i][j].denominator());
    scale *= mpq_class(l);
  }
  int sign = 1;
  mpz_class prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return Rational(0);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  mpq_class det(a[n - 1][n - 1] * sign);
  det /= scale;
  return Rational(mpq_class(det));
}

Rational hankel_direct(const MomentSequence& mu, std::size_t n) {
  if (mu.size() < 2 * n + 1)
    throw NotEnoughMoments("hankel h_" + std::to_string(n) + " needs " +
                           std::to_string(2 * n + 1) + " moments");
  std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) m[i][j] = mu.at(i + j);
  return determinant(m);
}

Rational hankel_product(const ThreeTermRecurrence& rec, const Rational& mu0, std::size_t n) {
  if (rec.betas.size() < n)
    throw NotEnoughCoefficients("hankel product h_" + std::to_string(n) + " needs beta_1.." +
                                std::to_string(n));
  Rational h = pow(mu0, static_cast<long>(n + 1));
  for (std::size_t k = 1; k <= n; ++k)
    h *= pow(rec.beta(k), static_cast<long>(n + 1 - k));
  return h;
}

namespace {
// Shifted Hankel determinant: rows 0..n, column indices 0..n-1 then n+1.
Rational hankel_shifted(const MomentSequence& mu, std::size_t n) {
  std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = mu.at(i + j);
    m[i][n] = mu.at(i + n + 1);
  }
  return determinant(m);
}
}  // namespace

ThreeTermRecurrence recurrence_from_moments(const MomentSequence& mu, std::size_t n) {
  if (mu.size() < 2 * n + 2)
    throw NotEnoughMoments("recovering n=" + std::to_string(n) + " needs " +
                           std::to_string(2 * n + 2) + " moments");
  // Delta_k and Delta'_k for k = 0..n, with Delta_{-1} = 1, Delta'_{-1} = 0.
  std::vector<Rational> delta(n + 1), delta_shifted(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    delta[k] = hankel_direct(mu, k);
    if (delta[k].is_zero())
      throw SingularHankel("Hankel determinant Delta_" + std::to_string(k) + " vanishes");
    delta_shifted[k] = hankel_shifted(mu, k);
  }
  ThreeTermRecurrence rec;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational prev_ratio = (k == 0) ? Rational(0) : delta_shifted[k - 1] / delta[k - 1];
    rec.alphas.push_back(delta_shifted[k] / delta[k] - prev_ratio);
    if (k >= 1) {
      Rational dm2 = (k >= 2) ? delta[k - 2] : Rational(1);
      rec.betas.push_back(dm2 * delta[k] / (delta[k - 1] * delta[k - 1]));
    }
  }
  return rec;
}

MomentSequence binomial_transform(const MomentSequence& mu) {
  std::vector<Rational> out(mu.size(), 0);
  for (std::size_t n = 0; n < mu.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k)
      out[n] += binomial(static_cast<long>(n), static_cast<long>(k)) * mu.at(k);
  return MomentSequence(std::move(out));
}

}  // namespace riordan
