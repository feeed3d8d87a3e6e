#include "riordan/exp_riordan.hpp"

#include "riordan/errors.hpp"

namespace riordan {

ExponentialRiordan::ExponentialRiordan(PowerSeries g, PowerSeries f)
    : g_(std::move(g)), f_(std::move(f)) {
  if (g_[0] != Rational(1)) throw NotProper("g(0) must be 1");
  if (f_.order() < 1 || !f_[0].is_zero() || f_[1] != Rational(1))
    throw NotProper("f must have f(0)=0 and [x^1]f = 1");
}

ExponentialRiordan ExponentialRiordan::group_identity(std::size_t order) {
  return ExponentialRiordan(PowerSeries::one(order), PowerSeries::identity(order));
}

TriangularMatrix ExponentialRiordan::realize(std::size_t rows) const {
  if (rows == 0) throw Error("need at least one row");
  if (rows - 1 > order())
    throw OrderExceeded("realize of " + std::to_string(rows) +
                        " rows needs series order >= " + std::to_string(rows - 1));
  std::vector<std::vector<Rational>> out(rows);
  for (std::size_t n = 0; n < rows; ++n) out[n].assign(n + 1, 0);
  PowerSeries col = g_.truncate(rows - 1);
  PowerSeries f = f_.truncate(rows - 1);
  for (std::size_t k = 0; k < rows; ++k) {
    Rational kfac = factorial(static_cast<long>(k));
    for (std::size_t n = k; n < rows; ++n)
      out[n][k] = factorial(static_cast<long>(n)) / kfac * col[n];
    if (k + 1 < rows) col = col * f;
  }
  return TriangularMatrix(std::move(out));
}

ExponentialRiordan ExponentialRiordan::multiply(const ExponentialRiordan& other) const {
  return ExponentialRiordan(g_ * other.g_.compose(f_), other.f_.compose(f_));
}

ExponentialRiordan ExponentialRiordan::inverse() const {
  PowerSeries fbar = f_.revert();
  return ExponentialRiordan(PowerSeries::one(g_.order()) / g_.compose(fbar), fbar);
}

PowerSeries ExponentialRiordan::apply(const PowerSeries& u) const {
  return g_ * u.compose(f_);
}

std::pair<PowerSeries, PowerSeries> ExponentialRiordan::cr_functions() const {
  PowerSeries fbar = f_.revert();
  std::size_t n = fbar.order() - 1;
  PowerSeries r = f_.derivative().compose(fbar.truncate(n));
  PowerSeries gf = g_.compose(fbar);
  PowerSeries c = g_.derivative().compose(fbar.truncate(n)) / gf.truncate(n);
  return {std::move(c), std::move(r)};
}

ProductionMatrix production_from_cr(const PowerSeries& c, const PowerSeries& r,
                                    std::size_t size) {
  if (size == 0) throw Error("need at least one production row");
  if (c.order() + 1 < size || r.order() < size)
    throw OrderExceeded("c/r series order too small for requested size");
  std::vector<std::vector<Rational>> rows(size);
  for (std::size_t i = 0; i < size; ++i) {
    rows[i].assign(i + 2, 0);
    for (std::size_t j = 0; j <= i + 1; ++j) {
      // p_{i,j} = (i!/j!) (c_{i-j} + j r_{i-j+1}), with c_{-1} = 0.
      Rational term = (j <= i) ? c[i - j] : Rational(0);
      term += Rational(static_cast<long>(j)) * r[i - j + 1];
      rows[i][j] = factorial(static_cast<long>(i)) / factorial(static_cast<long>(j)) * term;
    }
  }
  return ProductionMatrix(std::move(rows));
}

ProductionMatrix ExponentialRiordan::stieltjes(std::size_t size) const {
  auto [c, r] = cr_functions();
  return production_from_cr(c, r, size);
}

}  // namespace riordan
