#ifndef RIORDAN_PRODUCTION_HPP
#define RIORDAN_PRODUCTION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riordan/rational.hpp"
#include "riordan/triangular_matrix.hpp"

namespace riordan {

class OrdinaryRiordan;

/// Sequences (alpha_n)_{n>=0}, (beta_n)_{n>=1} of a monic three-term
/// recurrence p_{n+1} = (x - alpha_n) p_n - beta_n p_{n-1}. Favard's
/// condition (all beta_n nonzero) is reported, not enforced: degenerate
/// recurrences are legitimate objects of inspection.
struct ThreeTermRecurrence {
  std::vector<Rational> alphas;  // alpha_0, alpha_1, ...
  std::vector<Rational> betas;   // beta_1, beta_2, ...

  static ThreeTermRecurrence constant(Rational alpha, Rational beta, std::size_t count);

  const Rational& alpha(std::size_t n) const;
  /// beta(n) for n >= 1.
  const Rational& beta(std::size_t n) const;

  bool is_degenerate() const;  // some stored beta is zero

  friend bool operator==(const ThreeTermRecurrence&, const ThreeTermRecurrence&) = default;
};

/// Production (Stieltjes) matrix: row i stores columns 0..i+1. For a matrix
/// L, P = L^{-1} L-bar regenerates L row by row from (1,0,0,...).
class ProductionMatrix {
 public:
  explicit ProductionMatrix(std::vector<std::vector<Rational>> rows);

  /// The shift matrix (production matrix of the identity array).
  static ProductionMatrix shift(std::size_t size);

  std::size_t size() const { return rows_.size(); }
  /// Entry (i, j); zero for j > i+1.
  const Rational& entry(std::size_t i, std::size_t j) const;
  const std::vector<Rational>& row(std::size_t i) const { return rows_.at(i); }

  struct TridiagonalVerdict {
    bool tridiagonal;
    // First offending (i, j) when not tridiagonal.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    explicit operator bool() const { return tridiagonal; }
  };
  /// True iff every entry below the first subdiagonal is exactly zero and
  /// every superdiagonal entry is exactly 1.
  TridiagonalVerdict is_tridiagonal() const;

  /// Leading n x n principal submatrix as dense rows (n <= size).
  std::vector<std::vector<Rational>> principal_submatrix(std::size_t n) const;

  friend bool operator==(const ProductionMatrix& a, const ProductionMatrix& b) {
    return a.rows_ == b.rows_;
  }

  std::string str() const;
  /// JSON with bands, full rows, and the tridiagonal verdict.
  std::string json() const;

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// Numeric production matrix P = M^{-1} M-bar of an invertible triangular
/// matrix with at least 2 rows. An N-row matrix yields N-1 production rows.
ProductionMatrix production_matrix(const TriangularMatrix& m);

/// alpha_n = P(n,n), beta_n = P(n,n-1); requires a tridiagonal P.
ThreeTermRecurrence extract_recurrence(const ProductionMatrix& p);

/// Analytic production matrix of an ordinary Riordan array: column 0 is the
/// Z-sequence and the remaining columns shift the A-sequence.
ProductionMatrix riordan_stieltjes(const OrdinaryRiordan& array, std::size_t size);

/// Rebuilds `rows` rows from r_0 = (1,0,0,...) via r_i = r_{i-1} P.
TriangularMatrix stack_rows(const ProductionMatrix& p, std::size_t rows);

}  // namespace riordan

#endif
