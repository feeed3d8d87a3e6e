#ifndef RIORDAN_EXP_RIORDAN_HPP
#define RIORDAN_EXP_RIORDAN_HPP

#include <utility>

#include "riordan/power_series.hpp"
#include "riordan/production.hpp"
#include "riordan/triangular_matrix.hpp"

namespace riordan {

/// Exponential Riordan array [g, f] with g(0) = 1, f(0) = 0, [x^1]f = 1.
/// Column k of the realization has e.g.f. g * f^k / k!, so entry
/// (n,k) = (n!/k!) [x^n] g f^k.
class ExponentialRiordan {
 public:
  ExponentialRiordan(PowerSeries g, PowerSeries f);

  const PowerSeries& g() const { return g_; }
  const PowerSeries& f() const { return f_; }
  std::size_t order() const { return std::min(g_.order(), f_.order()); }

  static ExponentialRiordan group_identity(std::size_t order);

  TriangularMatrix realize(std::size_t rows) const;

  ExponentialRiordan multiply(const ExponentialRiordan& other) const;
  ExponentialRiordan inverse() const;

  /// e.g.f. of the transformed sequence: g * (u o f), for u an e.g.f.
  PowerSeries apply(const PowerSeries& u) const;

  /// (c, r) with r(x) = f'(fbar(x)) and c(x) = g'(fbar(x)) / g(fbar(x)).
  std::pair<PowerSeries, PowerSeries> cr_functions() const;

  /// Analytic production matrix via p_{i,j} = (i!/j!)(c_{i-j} + j r_{i-j+1}).
  ProductionMatrix stieltjes(std::size_t size) const;

 private:
  PowerSeries g_;
  PowerSeries f_;
};

/// Production matrix straight from the (c, r) pair.
ProductionMatrix production_from_cr(const PowerSeries& c, const PowerSeries& r,
                                    std::size_t size);

}  // namespace riordan

#endif
