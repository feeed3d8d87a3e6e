#include "riordan/production.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "riordan/errors.hpp"
#include "riordan/riordan_array.hpp"

namespace riordan {

namespace {
const Rational kZero = 0;
}

ThreeTermRecurrence ThreeTermRecurrence::constant(Rational alpha, Rational beta,
                                                  std::size_t count) {
  ThreeTermRecurrence rec;
  rec.alphas.assign(count, alpha);
  rec.betas.assign(count, beta);
  return rec;
}

const Rational& ThreeTermRecurrence::alpha(std::size_t n) const {
  if (n >= alphas.size())
    throw NotEnoughCoefficients("alpha_" + std::to_string(n) + " not available");
  return alphas[n];
}

const Rational& ThreeTermRecurrence::beta(std::size_t n) const {
  if (n < 1 || n > betas.size())
    throw NotEnoughCoefficients("beta_" + std::to_string(n) + " not available");
  return betas[n - 1];
}

bool ThreeTermRecurrence::is_degenerate() const {
  for (const auto& b : betas)
    if (b.is_zero()) return true;
  return false;
}

ProductionMatrix::ProductionMatrix(std::vector<std::vector<Rational>> rows)
    : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].size() != i + 2)
      throw Error("production row " + std::to_string(i) + " must have " +
                  std::to_string(i + 2) + " entries");
}

ProductionMatrix ProductionMatrix::shift(std::size_t size) {
  std::vector<std::vector<Rational>> rows(size);
  for (std::size_t i = 0; i < size; ++i) {
    rows[i].assign(i + 2, 0);
    rows[i][i + 1] = 1;
  }
  return ProductionMatrix(std::move(rows));
}

const Rational& ProductionMatrix::entry(std::size_t i, std::size_t j) const {
  if (i >= rows_.size()) throw Error("production row index out of range");
  if (j > i + 1) return kZero;
  return rows_[i][j];
}

ProductionMatrix::TridiagonalVerdict ProductionMatrix::is_tridiagonal() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j + 1 < i; ++j)
      if (!rows_[i][j].is_zero()) return {false, std::make_pair(i, j)};
    if (rows_[i][i + 1] != Rational(1)) return {false, std::make_pair(i, i + 1)};
  }
  return {true, std::nullopt};
}

std::vector<std::vector<Rational>> ProductionMatrix::principal_submatrix(std::size_t n) const {
  if (n > rows_.size()) throw Error("principal submatrix larger than production matrix");
  std::vector<std::vector<Rational>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].assign(n, 0);
    for (std::size_t j = 0; j < n && j <= i + 1; ++j) out[i][j] = rows_[i][j];
  }
  return out;
}

std::string ProductionMatrix::str() const {
  std::size_t width = 1;
  for (const auto& row : rows_)
    for (const auto& e : row) width = std::max(width, e.str().size());
  std::ostringstream os;
  for (const auto& row : rows_) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::string s = row[j].str();
      os << (j ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

std::string ProductionMatrix::json() const {
  nlohmann::json j;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(e.str());
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  nlohmann::json sub = nlohmann::json::array(), diag = nlohmann::json::array(),
                 super = nlohmann::json::array();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i >= 1) sub.push_back(rows_[i][i - 1].str());
    diag.push_back(rows_[i][i].str());
    super.push_back(rows_[i][i + 1].str());
  }
  j["bands"] = {{"sub", std::move(sub)}, {"diag", std::move(diag)}, {"super", std::move(super)}};
  auto verdict = is_tridiagonal();
  j["tridiagonal"] = verdict.tridiagonal;
  if (verdict.witness)
    j["witness"] = {verdict.witness->first, verdict.witness->second};
  return j.dump();
}

ProductionMatrix production_matrix(const TriangularMatrix& m) {
  if (m.rows() < 2) throw Error("production matrix needs at least 2 rows");
  if (!m.invertible()) throw NotInvertible("matrix has a zero diagonal entry");
  TriangularMatrix inv = m.inverse();
  std::size_t size = m.rows() - 1;  // the last realized row is consumed
  std::vector<std::vector<Rational>> rows(size);
  for (std::size_t i = 0; i < size; ++i) {
    rows[i].assign(i + 2, 0);
    for (std::size_t j = 0; j <= i + 1; ++j) {
      Rational acc = 0;
      for (std::size_t t = (j == 0 ? 0 : j - 1); t <= i; ++t)
        acc += inv.entry(i, t) * m.entry(t + 1, j);
      rows[i][j] = acc;
    }
  }
  return ProductionMatrix(std::move(rows));
}

ThreeTermRecurrence extract_recurrence(const ProductionMatrix& p) {
  auto verdict = p.is_tridiagonal();
  if (!verdict) {
    auto [i, j] = *verdict.witness;
    throw NotTridiagonal("production matrix is not tridiagonal at (" + std::to_string(i) +
                         "," + std::to_string(j) + ")");
  }
  ThreeTermRecurrence rec;
  for (std::size_t i = 0; i < p.size(); ++i) {
    rec.alphas.push_back(p.entry(i, i));
    if (i >= 1) rec.betas.push_back(p.entry(i, i - 1));
  }
  return rec;
}

ProductionMatrix riordan_stieltjes(const OrdinaryRiordan& array, std::size_t size) {
  auto [a, z] = array.a_and_z_sequences();
  if (z.order() + 1 < size || a.order() + 1 < size)
    throw OrderExceeded("A/Z series order too small for requested size");
  std::vector<std::vector<Rational>> rows(size);
  for (std::size_t i = 0; i < size; ++i) {
    rows[i].assign(i + 2, 0);
    rows[i][0] = z[i];
    for (std::size_t j = 1; j <= i + 1; ++j) rows[i][j] = a[i - j + 1];
  }
  return ProductionMatrix(std::move(rows));
}

TriangularMatrix stack_rows(const ProductionMatrix& p, std::size_t rows) {
  if (rows == 0) throw Error("need at least one row");
  if (rows > p.size() + 1) throw Error("production matrix too small to stack that many rows");
  std::vector<std::vector<Rational>> out(rows);
  out[0].assign(1, 1);
  std::vector<Rational> prev{1};
  for (std::size_t i = 1; i < rows; ++i) {
    std::vector<Rational> cur(i + 1, 0);
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t t = (j == 0 ? 0 : j - 1); t < prev.size(); ++t)
        cur[j] += prev[t] * p.entry(t, j);
    out[i] = cur;
    prev = std::move(cur);
  }
  return TriangularMatrix(std::move(out));
}

}  // namespace riordan
