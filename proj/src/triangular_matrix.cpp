#include "riordan/triangular_matrix.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "riordan/errors.hpp"

namespace riordan {

namespace {
const Rational kZero = 0;
}

TriangularMatrix::TriangularMatrix(std::vector<std::vector<Rational>> rows)
    : rows_(std::move(rows)) {
  for (std::size_t n = 0; n < rows_.size(); ++n)
    if (rows_[n].size() != n + 1)
      throw Error("row " + std::to_string(n) + " must have " + std::to_string(n + 1) +
                  " entries");
}

TriangularMatrix TriangularMatrix::identity(std::size_t rows) {
  std::vector<std::vector<Rational>> r(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    r[n].assign(n + 1, 0);
    r[n][n] = 1;
  }
  return TriangularMatrix(std::move(r));
}

const Rational& TriangularMatrix::entry(std::size_t n, std::size_t k) const {
  if (n >= rows_.size()) throw Error("row index out of range");
  if (k > n) return kZero;
  return rows_[n][k];
}

bool TriangularMatrix::invertible() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](const auto& r) { return !r.back().is_zero(); });
}

TriangularMatrix operator*(const TriangularMatrix& a, const TriangularMatrix& b) {
  std::size_t n = std::min(a.rows(), b.rows());
  std::vector<std::vector<Rational>> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i].assign(i + 1, 0);
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = j; k <= i; ++k) r[i][j] += a.entry(i, k) * b.entry(k, j);
  }
  return TriangularMatrix(std::move(r));
}

TriangularMatrix TriangularMatrix::inverse() const {
  if (!invertible()) throw NotInvertible("zero diagonal entry");
  std::size_t n = rows();
  std::vector<std::vector<Rational>> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i].assign(i + 1, 0);
    x[i][i] = Rational(1) / rows_[i][i];
    for (std::size_t k = i; k-- > 0;) {
      Rational acc = 0;
      for (std::size_t j = k; j < i; ++j) acc += rows_[i][j] * x[j][k];
      x[i][k] = -acc / rows_[i][i];
    }
  }
  return TriangularMatrix(std::move(x));
}

std::vector<Rational> TriangularMatrix::apply(const std::vector<Rational>& v) const {
  std::vector<Rational> out(rows(), 0);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j <= i && j < v.size(); ++j) out[i] += rows_[i][j] * v[j];
  return out;
}

std::vector<Rational> TriangularMatrix::row_sums() const {
  std::vector<Rational> out(rows(), 0);
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& e : rows_[i]) out[i] += e;
  return out;
}

std::vector<Rational> TriangularMatrix::diagonal_sums() const {
  std::vector<Rational> out(rows(), 0);
  for (std::size_t n = 0; n < rows(); ++n)
    for (std::size_t k = 0; 2 * k <= n; ++k) out[n] += entry(n - k, k);
  return out;
}

TriangularMatrix TriangularMatrix::reversal() const {
  std::vector<std::vector<Rational>> r(rows());
  for (std::size_t n = 0; n < rows(); ++n) {
    r[n] = rows_[n];
    std::reverse(r[n].begin(), r[n].end());
  }
  return TriangularMatrix(std::move(r));
}

std::string TriangularMatrix::str() const {
  std::size_t width = 1;
  for (const auto& row : rows_)
    for (const auto& e : row) width = std::max(width, e.str().size());
  std::ostringstream os;
  for (const auto& row : rows_) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::string s = row[k].str();
      os << (k ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

std::string TriangularMatrix::json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(e.str());
    j.push_back(std::move(r));
  }
  return j.dump();
}

}  // namespace riordan
