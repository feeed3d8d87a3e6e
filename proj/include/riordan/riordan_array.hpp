#ifndef RIORDAN_RIORDAN_ARRAY_HPP
#define RIORDAN_RIORDAN_ARRAY_HPP

#include <utility>

#include "riordan/power_series.hpp"
#include "riordan/triangular_matrix.hpp"

namespace riordan {

/// Proper ordinary Riordan array (g, f): g(0) = 1, f(0) = 0, [x^1]f = 1.
/// Column k of the realized matrix has ordinary g.f. g * f^k.
class OrdinaryRiordan {
 public:
  OrdinaryRiordan(PowerSeries g, PowerSeries f);

  const PowerSeries& g() const { return g_; }
  const PowerSeries& f() const { return f_; }
  std::size_t order() const { return std::min(g_.order(), f_.order()); }

  static OrdinaryRiordan group_identity(std::size_t order);

  /// Entry (n,k) = [x^n] g f^k; needs series order >= rows-1.
  TriangularMatrix realize(std::size_t rows) const;

  /// Group law (g, f)(h, l) = (g * (h o f), l o f).
  OrdinaryRiordan multiply(const OrdinaryRiordan& other) const;
  /// (1/(g o fbar), fbar).
  OrdinaryRiordan inverse() const;

  /// Action on a series: g * (a o f).
  PowerSeries apply(const PowerSeries& a) const;

  PowerSeries row_sums() const;       // g / (1 - f)
  PowerSeries diagonal_sums() const;  // g / (1 - x f)

  /// Table of [x^n y^k] g/(1 - y f), built by Horner accumulation in y;
  /// equals realize() entrywise.
  TriangularMatrix bivariate_table(std::size_t rows) const;

  /// (A(x), Z(x)) with A = x/fbar and Z = (1 - 1/g(fbar)) / fbar.
  std::pair<PowerSeries, PowerSeries> a_and_z_sequences() const;
  /// C with f = x / (1 - x C(x)).
  PowerSeries c_sequence() const;

 private:
  PowerSeries g_;
  PowerSeries f_;
};

/// Aeration of a lower-triangular matrix: entry (i,j) is
/// rev(M)_{(i+j)/2,(i-j)/2} when i-j is even and 0 otherwise.
TriangularMatrix aerate_matrix(const TriangularMatrix& m);

}  // namespace riordan

#endif
