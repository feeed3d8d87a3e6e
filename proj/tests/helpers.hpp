#ifndef RIORDAN_TEST_HELPERS_HPP
#define RIORDAN_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "riordan/power_series.hpp"
#include "riordan/rational.hpp"
#include "riordan/series_expr.hpp"

namespace riordan::test {

inline PowerSeries S(const std::string& text, std::size_t order) {
  return parse_series(text, order);
}

// Small random rationals with controlled denominators keep the exact
// arithmetic fast while still exercising non-integer paths.
inline Rational random_rational(std::mt19937& rng, long max_abs = 6,
                                long max_den = 3) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero(std::mt19937& rng, long max_abs = 6,
                               long max_den = 3) {
  for (;;) {
    Rational r = random_rational(rng, max_abs, max_den);
    if (!r.is_zero()) return r;
  }
}

// Random proper pair: g with g(0) = 1, f with f(0) = 0 and f'(0) = 1.
inline std::pair<PowerSeries, PowerSeries> random_proper_pair(
    std::mt19937& rng, std::size_t order) {
  std::vector<Rational> g{1}, f{0, 1};
  for (std::size_t i = 1; i <= order; ++i) g.push_back(random_rational(rng));
  for (std::size_t i = 2; i <= order; ++i) f.push_back(random_rational(rng));
  return {PowerSeries(g, order), PowerSeries(f, order)};
}

}  // namespace riordan::test

#endif
