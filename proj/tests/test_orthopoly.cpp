#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "riordan/errors.hpp"
#include "riordan/exp_riordan.hpp"
#include "riordan/families.hpp"
#include "riordan/orthopoly.hpp"
#include "riordan/riordan_array.hpp"

using namespace riordan;
using riordan::test::S;
using riordan::test::random_nonzero;
using riordan::test::random_rational;

namespace {

ThreeTermRecurrence random_recurrence(std::mt19937& rng, std::size_t count) {
  ThreeTermRecurrence rec;
  for (std::size_t i = 0; i < count; ++i) {
    rec.alphas.push_back(random_rational(rng));
    rec.betas.push_back(random_nonzero(rng));
  }
  return rec;
}

}  // namespace

TEST_CASE("generate polynomials") {
  // alpha = 0, beta_n = n gives the probabilists' Hermite coefficient rows
  ThreeTermRecurrence he;
  he.alphas.assign(6, 0);
  for (long n = 1; n <= 5; ++n) he.betas.push_back(Rational(n));
  TriangularMatrix rows = generate_polynomials(he, 6);
  TriangularMatrix want(std::vector<std::vector<Rational>>{
      {1}, {0, 1}, {-1, 0, 1}, {0, -3, 0, 1}, {3, 0, -6, 0, 1}, {0, 15, 0, -10, 0, 1}});
  CHECK(rows == want);

  ThreeTermRecurrence zero = ThreeTermRecurrence::constant(0, 0, 6);
  TriangularMatrix xn = generate_polynomials(zero, 6);
  CHECK(xn == TriangularMatrix::identity(6));

  // shifted-Legendre recurrence at r=2 regenerates the coefficient array
  ThreeTermRecurrence sl = family_recurrence(Family::ShiftedLegendre, 2, 0, 8);
  TriangularMatrix coeffs = generate_polynomials(sl, 8);
  CHECK(coeffs == shifted_legendre_array(2, 9).realize(8).inverse());
}

TEST_CASE("coefficient recurrence holds entrywise") {
  std::mt19937 rng(20240820);
  ThreeTermRecurrence rec = random_recurrence(rng, 8);
  TriangularMatrix a = generate_polynomials(rec, 8);
  for (std::size_t n = 1; n + 1 < 8; ++n) {
    for (std::size_t k = 0; k <= n + 1; ++k) {
      Rational prev = (k >= 1) ? a.entry(n, k - 1) : Rational(0);
      Rational mid = (k <= n) ? a.entry(n, k) : Rational(0);
      Rational older = (k <= n - 1) ? a.entry(n - 1, k) : Rational(0);
      CHECK(a.entry(n + 1, k) == prev - rec.alpha(n) * mid - rec.beta(n) * older);
    }
  }
}

TEST_CASE("moments from J-fraction") {
  MomentSequence aer = moments_from_recurrence(ThreeTermRecurrence::constant(0, 1, 8), 9);
  Rational want[] = {1, 0, 1, 0, 2, 0, 5, 0, 14};
  for (std::size_t n = 0; n <= 8; ++n) CHECK(aer.at(n) == want[n]);

  MomentSequence geo = moments_from_recurrence(ThreeTermRecurrence::constant(Rational(5, 2), 0, 6), 7);
  for (std::size_t n = 0; n <= 6; ++n)
    CHECK(geo.at(n) == pow(Rational(5, 2), static_cast<long>(n)));

  // Hermite H_n(1): alpha = 2, beta_n = -2n
  ThreeTermRecurrence h = family_recurrence(Family::Hermite, 1, 0, 6);
  MomentSequence mu = moments_from_recurrence(h, 5);
  Rational hw[] = {1, 2, 2, -4, -20};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(mu.at(n) == hw[n]);
}

TEST_CASE("moments from array column") {
  OrdinaryRiordan sl = shifted_legendre_array(2, 10);
  MomentSequence mu = moments_of(sl, 8);
  for (std::size_t n = 0; n < 8; ++n)
    CHECK(mu.at(n) == closed_form(Family::ShiftedLegendre, 2, n));
  CHECK(mu.at(1) == Rational(3));
  CHECK(mu.at(2) == Rational(13));
  CHECK(mu.at(3) == Rational(63));

  MomentSequence id = moments_of(OrdinaryRiordan::group_identity(6), 6);
  CHECK(id.at(0) == Rational(1));
  for (std::size_t n = 1; n < 6; ++n) CHECK(id.at(n) == Rational(0));

  MomentSequence hm = moments_of(hermite_array(1, 8), 5);
  Rational hw[] = {1, 2, 2, -4, -20};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(hm.at(n) == hw[n]);

  // raw e.g.f. column: scaling by n! is requested explicitly
  TriangularMatrix m = TriangularMatrix::identity(4);
  MomentSequence raw = moments_from_array_column(m, true);
  CHECK(raw.at(0) == Rational(1));
}

TEST_CASE("hankel determinants directly") {
  MomentSequence catalan({1, 1, 2, 5, 14});
  CHECK(hankel_direct(catalan, 1) == Rational(1));
  CHECK(hankel_direct(catalan, 2) == Rational(1));
  CHECK(hankel_direct(catalan, 0) == Rational(1));

  MomentSequence he0({1, 0, -1, 0, 3, 0, -15});
  CHECK(hankel_direct(he0, 2) == Rational(-2));
  // closed form (-1)^C(n+1,2) prod k! at n=2: -(0! 1! 2!) = -2
  CHECK(hankel_direct(he0, 2) == family_hankel(Family::UnitaryHermite, 0, 2));

  CHECK_THROWS_AS(hankel_direct(catalan, 3), NotEnoughMoments);
}

TEST_CASE("hankel product formula") {
  ThreeTermRecurrence ones = ThreeTermRecurrence::constant(0, 1, 8);
  for (std::size_t n = 0; n <= 6; ++n)
    CHECK(hankel_product(ones, 1, n) == Rational(1));

  ThreeTermRecurrence empty;
  CHECK(hankel_product(empty, Rational(7, 3), 0) == Rational(7, 3));

  // shifted Legendre: h_n = 2^n (r(r-1))^C(n+1,2)
  Rational r(5, 2);
  ThreeTermRecurrence sl = family_recurrence(Family::ShiftedLegendre, r, 0, 8);
  for (std::size_t n = 0; n <= 6; ++n) {
    Rational want = pow(Rational(2), static_cast<long>(n)) *
                    pow(r * (r - Rational(1)), static_cast<long>(n * (n + 1) / 2));
    CHECK(hankel_product(sl, 1, n) == want);
    CHECK(hankel_product(sl, 1, n) == family_hankel(Family::ShiftedLegendre, r, n));
  }
}

TEST_CASE("recurrence recovery from moments") {
  MomentSequence aer = moments_from_recurrence(ThreeTermRecurrence::constant(0, 1, 8), 10);
  ThreeTermRecurrence rec = recurrence_from_moments(aer, 4);
  for (const auto& a : rec.alphas) CHECK(a == Rational(0));
  for (const auto& b : rec.betas) CHECK(b == Rational(1));

  // geometric moments c^n: alpha_0 = c recoverable, deeper level is singular
  std::vector<Rational> geo;
  for (long n = 0; n <= 5; ++n) geo.push_back(pow(Rational(3), n));
  ThreeTermRecurrence g0 = recurrence_from_moments(MomentSequence(geo), 0);
  CHECK(g0.alpha(0) == Rational(3));
  CHECK(g0.betas.empty());
  CHECK_THROWS_AS(recurrence_from_moments(MomentSequence(geo), 1), SingularHankel);

  // Legendre moments at r=3: alpha = 3, beta_1 = 4, beta_k = 2
  MomentSequence leg = moments_of(legendre_array(3, 14), 14);
  ThreeTermRecurrence lrec = recurrence_from_moments(leg, 6);
  for (const auto& a : lrec.alphas) CHECK(a == Rational(3));
  CHECK(lrec.beta(1) == Rational(4));
  for (std::size_t k = 2; k <= 6; ++k) CHECK(lrec.beta(k) == Rational(2));

  CHECK_THROWS_AS(recurrence_from_moments(MomentSequence({1, 1}), 1), NotEnoughMoments);
}

TEST_CASE("binomial transform") {
  MomentSequence delta({1, 0, 0, 0});
  MomentSequence ones = binomial_transform(delta);
  for (std::size_t n = 0; n < 4; ++n) CHECK(ones.at(n) == Rational(1));

  MomentSequence catalan({1, 1, 2, 5, 14});
  MomentSequence bt = binomial_transform(catalan);
  Rational want[] = {1, 2, 5, 15, 51};
  for (std::size_t n = 0; n < 5; ++n) CHECK(bt.at(n) == want[n]);

  std::mt19937 rng(20240821);
  for (int t = 0; t < 10; ++t) {
    std::vector<Rational> vals;
    for (int i = 0; i < 11; ++i) vals.push_back(random_rational(rng));
    MomentSequence mu(vals);
    MomentSequence bmu = binomial_transform(mu);
    for (std::size_t n = 0; n <= 5; ++n)
      CHECK(hankel_direct(mu, n) == hankel_direct(bmu, n));
  }
}

TEST_CASE("moment recurrence roundtrip") {
  std::mt19937 rng(20240822);
  for (int t = 0; t < 10; ++t) {
    ThreeTermRecurrence rec = random_recurrence(rng, 7);
    MomentSequence mu = moments_from_recurrence(rec, 14);
    ThreeTermRecurrence back = recurrence_from_moments(mu, 6);
    for (std::size_t i = 0; i <= 6; ++i) CHECK(back.alpha(i) == rec.alpha(i));
    for (std::size_t i = 1; i <= 6; ++i) CHECK(back.beta(i) == rec.beta(i));
  }
}

TEST_CASE("direct and product hankel agree") {
  std::mt19937 rng(20240823);
  for (int t = 0; t < 8; ++t) {
    ThreeTermRecurrence rec = random_recurrence(rng, 9);
    MomentSequence mu = moments_from_recurrence(rec, 17);
    for (std::size_t n = 0; n <= 8; ++n)
      CHECK(hankel_direct(mu, n) == hankel_product(rec, 1, n));
  }
}

TEST_CASE("polynomial family inverts the moment array") {
  std::mt19937 rng(20240824);
  ThreeTermRecurrence rec = random_recurrence(rng, 8);
  MomentSequence mu = moments_from_recurrence(rec, 16);
  // moment array: L(n,k) built by stacking the production rows of the
  // tridiagonal matrix of the recurrence
  std::vector<std::vector<Rational>> prow;
  for (std::size_t i = 0; i < 8; ++i) {
    std::vector<Rational> row(i + 2, 0);
    row[i] = rec.alpha(i);
    if (i >= 1) row[i - 1] = rec.beta(i);
    row[i + 1] = 1;
    prow.push_back(std::move(row));
  }
  TriangularMatrix l = stack_rows(ProductionMatrix(std::move(prow)), 8);
  CHECK(generate_polynomials(rec, 8) == l.inverse());
  for (std::size_t n = 0; n < 8; ++n) CHECK(l.entry(n, 0) == mu.at(n));

  // orthogonality in the stated form: x^n = sum_i l_{n,i} p_i(x)
  TriangularMatrix p = generate_polynomials(rec, 8);
  for (std::size_t n = 0; n < 8; ++n) {
    std::vector<Rational> combo(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t k = 0; k <= i; ++k) combo[k] += l.entry(n, i) * p.entry(i, k);
    for (std::size_t k = 0; k < n; ++k) CHECK(combo[k] == Rational(0));
    CHECK(combo[n] == Rational(1));
  }
}

TEST_CASE("f over x solves the defining fixed point") {
  // f = revert(x/(1+ax+bx^2)) satisfies f/x = 1/(1 - ax - bx^2 (f/x))
  for (auto [a, b] : {std::pair<long, long>{2, 3}, {1, -1}, {-3, 2}}) {
    PowerSeries f =
        S("x/(1+" + std::to_string(a) + "*x+" + std::to_string(b) + "*x^2)", 12)
            .revert();
    PowerSeries u = f.shift_down();
    std::size_t ord = u.order();
    PowerSeries x = PowerSeries::identity(ord);
    PowerSeries rhs = PowerSeries::one(ord) /
                      (PowerSeries::one(ord) - Rational(a) * x -
                       Rational(b) * (x * x * u));
    CHECK(u == rhs);
  }
}

TEST_CASE("determinant oracle") {
  CHECK(determinant({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}) ==
        Rational(-2));
  CHECK(determinant({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}) ==
        Rational(-1));
  CHECK(determinant({{Rational(1, 2), Rational(1, 3)},
                     {Rational(1, 4), Rational(1, 5)}}) ==
        Rational(1, 60));
  CHECK(determinant({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) ==
        Rational(0));
}
