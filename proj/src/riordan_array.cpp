#include "riordan/riordan_array.hpp"

#include "riordan/errors.hpp"

namespace riordan {

OrdinaryRiordan::OrdinaryRiordan(PowerSeries g, PowerSeries f)
    : g_(std::move(g)), f_(std::move(f)) {
  if (g_[0] != Rational(1)) throw NotProper("g(0) must be 1");
  if (f_.order() < 1 || !f_[0].is_zero() || f_[1] != Rational(1))
    throw NotProper("f must have f(0)=0 and [x^1]f = 1");
}

OrdinaryRiordan OrdinaryRiordan::group_identity(std::size_t order) {
  return OrdinaryRiordan(PowerSeries::one(order), PowerSeries::identity(order));
}

TriangularMatrix OrdinaryRiordan::realize(std::size_t rows) const {
  if (rows == 0) throw Error("need at least one row");
  if (rows - 1 > order())
    throw OrderExceeded("realize of " + std::to_string(rows) +
                        " rows needs series order >= " + std::to_string(rows - 1));
  std::vector<std::vector<Rational>> out(rows);
  for (std::size_t n = 0; n < rows; ++n) out[n].assign(n + 1, 0);
  PowerSeries col = g_.truncate(rows - 1);
  PowerSeries f = f_.truncate(rows - 1);
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t n = k; n < rows; ++n) out[n][k] = col[n];
    if (k + 1 < rows) col = col * f;
  }
  return TriangularMatrix(std::move(out));
}

OrdinaryRiordan OrdinaryRiordan::multiply(const OrdinaryRiordan& other) const {
  return OrdinaryRiordan(g_ * other.g_.compose(f_), other.f_.compose(f_));
}

OrdinaryRiordan OrdinaryRiordan::inverse() const {
  PowerSeries fbar = f_.revert();
  return OrdinaryRiordan(PowerSeries::one(g_.order()) / g_.compose(fbar), fbar);
}

PowerSeries OrdinaryRiordan::apply(const PowerSeries& a) const {
  return g_ * a.compose(f_);
}

PowerSeries OrdinaryRiordan::row_sums() const {
  return g_ / (PowerSeries::one(f_.order()) - f_);
}

PowerSeries OrdinaryRiordan::diagonal_sums() const {
  return g_ / (PowerSeries::one(f_.order()) - f_.shift_up());
}

TriangularMatrix OrdinaryRiordan::bivariate_table(std::size_t rows) const {
  if (rows == 0) throw Error("need at least one row");
  if (rows - 1 > order()) throw OrderExceeded("series order too small for table");
  // g/(1 - y f) expanded as a polynomial in y by Horner:
  // T_m = g * (1 + y f + ... + (y f)^m), tracked per power of y.
  std::size_t n = rows - 1;
  PowerSeries f = f_.truncate(n);
  std::vector<PowerSeries> column_gf;  // index = power of y
  PowerSeries acc = g_.truncate(n);
  for (std::size_t k = 0; k <= n; ++k) {
    column_gf.push_back(acc);
    acc = acc * f;
  }
  std::vector<std::vector<Rational>> out(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    out[i].assign(i + 1, 0);
    for (std::size_t j = 0; j <= i; ++j) out[i][j] = column_gf[j][i];
  }
  return TriangularMatrix(std::move(out));
}

std::pair<PowerSeries, PowerSeries> OrdinaryRiordan::a_and_z_sequences() const {
  PowerSeries fbar = f_.revert();
  PowerSeries u = fbar.shift_down();  // fbar / x, a unit
  PowerSeries a = PowerSeries::one(u.order()) / u;
  PowerSeries w = PowerSeries::one(fbar.order()) -
                  PowerSeries::one(g_.order()) / g_.compose(fbar);
  PowerSeries z = w.shift_down() / u;
  return {std::move(a), std::move(z)};
}

PowerSeries OrdinaryRiordan::c_sequence() const {
  // f = x u  =>  C = (1 - 1/u)/x.
  PowerSeries u = f_.shift_down();
  PowerSeries w = PowerSeries::one(u.order()) - PowerSeries::one(u.order()) / u;
  return w.shift_down();
}

TriangularMatrix aerate_matrix(const TriangularMatrix& m) {
  TriangularMatrix rev = m.reversal();
  std::vector<std::vector<Rational>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out[i].assign(i + 1, 0);
    for (std::size_t j = 0; j <= i; ++j)
      if ((i - j) % 2 == 0) out[i][j] = rev.entry((i + j) / 2, (i - j) / 2);
  }
  return TriangularMatrix(std::move(out));
}

}  // namespace riordan
