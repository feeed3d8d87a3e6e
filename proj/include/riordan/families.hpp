#ifndef RIORDAN_FAMILIES_HPP
#define RIORDAN_FAMILIES_HPP

#include <cstddef>
#include <string>

#include "riordan/exp_riordan.hpp"
#include "riordan/rational.hpp"
#include "riordan/riordan_array.hpp"

namespace riordan {

enum class Family { Legendre, ShiftedLegendre, Hermite, UnitaryHermite, ChebyshevU };

Family family_from_name(const std::string& name);  // "legendre", "hermite", ...
std::string family_name(Family f);

/// Coefficient array of the orthogonal family whose moments are the shifted
/// Legendre polynomials evaluated at r:
///   ((1 + r(1-r) x^2) / q(x), x / q(x)),  q = 1 + (2r-1) x + r(r-1) x^2.
/// Requires r(r-1) != 0.
OrdinaryRiordan shifted_legendre_coefficient_array(const Rational& r, std::size_t order);
/// Its inverse, the moment array with first column P~_n(r).
OrdinaryRiordan shifted_legendre_array(const Rational& r, std::size_t order);

/// Same pair for the Legendre polynomials P_n(r); requires r^2 != 1.
OrdinaryRiordan legendre_coefficient_array(const Rational& r, std::size_t order);
OrdinaryRiordan legendre_array(const Rational& r, std::size_t order);

/// [e^{2rx - x^2}, x]: first column H_n(r), production bands (2r, -2n).
ExponentialRiordan hermite_array(const Rational& r, std::size_t order);
/// [e^{rx - x^2/2}, x]: first column He_n(r), production bands (r, -n).
ExponentialRiordan unitary_hermite_array(const Rational& r, std::size_t order);

/// Coefficient array (1/(1 + rx + sx^2), x/(1 + rx + sx^2)) of the modified
/// Chebyshev-U family; requires s != 0.
OrdinaryRiordan chebyshev_modified_array(const Rational& r, const Rational& s,
                                         std::size_t order);

/// Exact closed-form value of the family's moment polynomial at r (finite
/// rational sums; the Chebyshev family is excluded, it has no single-r form).
Rational closed_form(Family f, const Rational& r, std::size_t n);

/// Tri-diagonal recurrence data of each family, long enough for `count`
/// alphas; for the Chebyshev family pass s as well.
ThreeTermRecurrence family_recurrence(Family f, const Rational& r, const Rational& s,
                                      std::size_t count);

/// Closed-form Hankel transform h_n of the family's moment sequence.
Rational family_hankel(Family f, const Rational& r, std::size_t n);

}  // namespace riordan

#endif
