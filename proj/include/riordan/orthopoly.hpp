#ifndef RIORDAN_ORTHOPOLY_HPP
#define RIORDAN_ORTHOPOLY_HPP

#include <cstddef>
#include <vector>

#include "riordan/production.hpp"
#include "riordan/rational.hpp"
#include "riordan/triangular_matrix.hpp"

namespace riordan {

/// Moment sequence mu_0, mu_1, ... of a linear functional. The usual
/// normalization mu_0 = 1 is tracked by normalized(), not forced.
struct MomentSequence {
  std::vector<Rational> values;

  MomentSequence() = default;
  explicit MomentSequence(std::vector<Rational> v) : values(std::move(v)) {}

  std::size_t size() const { return values.size(); }
  const Rational& at(std::size_t n) const;
  bool normalized() const { return !values.empty() && values[0] == Rational(1); }

  std::string str() const;  // comma-separated
  static MomentSequence parse(const std::string& text);

  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;
};

/// Coefficient rows of the monic family p_0, p_1, ...: row n holds p_n in
/// ascending powers, diagonal all 1.
TriangularMatrix generate_polynomials(const ThreeTermRecurrence& rec, std::size_t count);

/// First `count` moments by exact bottom-up expansion of the J-fraction
/// 1/(1 - alpha_0 x - beta_1 x^2/(1 - alpha_1 x - ...)). Needs alphas and
/// betas through index floor((count-1)/2).
MomentSequence moments_from_recurrence(const ThreeTermRecurrence& rec, std::size_t count);

class ExponentialRiordan;

/// First column of a realized array. With egf_column the column is read as
/// e.g.f. coefficients and scaled by n! (realized exponential arrays already
/// carry the n! in their entries; pass false for those).
MomentSequence moments_from_array_column(const TriangularMatrix& m, bool egf_column);

/// Moments of the family attached to a Riordan array: [x^n]g for ordinary
/// arrays, n![x^n]g for exponential ones.
MomentSequence moments_of(const OrdinaryRiordan& array, std::size_t count);
MomentSequence moments_of(const ExponentialRiordan& array, std::size_t count);

/// Hankel determinant h_n = det(mu_{i+j})_{0<=i,j<=n} by fraction-free
/// Bareiss elimination on the denominator-cleared integer matrix.
Rational hankel_direct(const MomentSequence& mu, std::size_t n);

/// h_n = mu_0^{n+1} prod_{k=1..n} beta_k^{n+1-k}.
Rational hankel_product(const ThreeTermRecurrence& rec, const Rational& mu0, std::size_t n);

/// Recovers alpha_0..alpha_n and beta_1..beta_n from mu_0..mu_{2n+1} via the
/// Hankel determinant ratios; throws SingularHankel when a needed
/// determinant vanishes.
ThreeTermRecurrence recurrence_from_moments(const MomentSequence& mu, std::size_t n);

/// b_n = sum_k C(n,k) a_k.
MomentSequence binomial_transform(const MomentSequence& mu);

/// Exact determinant of a dense rational matrix (test oracle and the Hankel
/// engine behind the shifted determinants).
Rational determinant(const std::vector<std::vector<Rational>>& m);

}  // namespace riordan

#endif
