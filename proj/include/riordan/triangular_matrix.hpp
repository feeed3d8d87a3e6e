#ifndef RIORDAN_TRIANGULAR_MATRIX_HPP
#define RIORDAN_TRIANGULAR_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

/// Exact lower-triangular matrix: row n stores entries for columns 0..n.
class TriangularMatrix {
 public:
  TriangularMatrix() = default;
  explicit TriangularMatrix(std::vector<std::vector<Rational>> rows);

  static TriangularMatrix identity(std::size_t rows);

  std::size_t rows() const { return rows_.size(); }
  const std::vector<Rational>& row(std::size_t n) const { return rows_.at(n); }
  /// Entry (n, k); zero for k > n, error for n out of range.
  const Rational& entry(std::size_t n, std::size_t k) const;

  bool invertible() const;  // all diagonal entries nonzero

  friend TriangularMatrix operator*(const TriangularMatrix& a, const TriangularMatrix& b);
  friend bool operator==(const TriangularMatrix& a, const TriangularMatrix& b) {
    return a.rows_ == b.rows_;
  }

  /// Exact inverse by forward substitution; throws NotInvertible on a zero
  /// diagonal entry.
  TriangularMatrix inverse() const;

  /// Matrix-vector product restricted to the stored rows.
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  std::vector<Rational> row_sums() const;
  std::vector<Rational> diagonal_sums() const;

  /// Row n reversed: (n,k) -> (n, n-k).
  TriangularMatrix reversal() const;

  /// Aligned-text rendering matching the usual triangle displays.
  std::string str() const;
  /// JSON array of rows of rational strings.
  std::string json() const;

 private:
  std::vector<std::vector<Rational>> rows_;
};

}  // namespace riordan

#endif
