#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "riordan/errors.hpp"
#include "riordan/families.hpp"
#include "riordan/orthopoly.hpp"
#include "riordan/production.hpp"

using namespace riordan;
using riordan::test::S;

TEST_CASE("closed forms") {
  CHECK(closed_form(Family::ShiftedLegendre, 2, 1) == Rational(3));  // 2r-1
  CHECK(closed_form(Family::Legendre, Rational(7, 3), 0) == Rational(1));
  CHECK(closed_form(Family::Hermite, 1, 3) == Rational(-4));
  // He_n(0): 1, 0, -1, 0, 3, 0, -15
  Rational he0[] = {1, 0, -1, 0, 3, 0, -15};
  for (std::size_t n = 0; n <= 6; ++n)
    CHECK(closed_form(Family::UnitaryHermite, 0, n) == he0[n]);
  // coefficient rows of the shifted polynomials: degree 3 row is
  // -1 + 12r - 30r^2 + 20r^3
  for (long rv = -2; rv <= 3; ++rv) {
    Rational r(rv);
    CHECK(closed_form(Family::ShiftedLegendre, r, 3) ==
          Rational(-1) + Rational(12) * r - Rational(30) * r * r +
              Rational(20) * r * r * r);
  }
}

TEST_CASE("family names") {
  CHECK(family_from_name("legendre") == Family::Legendre);
  CHECK(family_name(Family::ChebyshevU) == "chebyshev-u");
  CHECK_THROWS_AS(family_from_name("nope"), ParseError);
}

TEST_CASE("shifted legendre as moments") {
  OrdinaryRiordan sl = shifted_legendre_array(2, 12);
  TriangularMatrix m = sl.realize(10);
  for (std::size_t n = 0; n < 10; ++n)
    CHECK(m.entry(n, 0) == closed_form(Family::ShiftedLegendre, 2, n));

  // production matrix: corner 2r-1 = 3, 2r(r-1) = 4, then bands 3 / 2
  ProductionMatrix p = riordan_stieltjes(sl, 6);
  CHECK(p.is_tridiagonal().tridiagonal);
  CHECK(p.entry(0, 0) == Rational(3));
  CHECK(p.entry(1, 0) == Rational(4));
  for (std::size_t i = 1; i < 6; ++i) {
    CHECK(p.entry(i, i) == Rational(3));
    if (i >= 2) CHECK(p.entry(i, i - 1) == Rational(2));
  }

  CHECK_THROWS_AS(shifted_legendre_array(1, 8), DegenerateFamily);
  CHECK_THROWS_AS(shifted_legendre_array(0, 8), DegenerateFamily);
}

TEST_CASE("legendre as moments") {
  for (const Rational& r : {Rational(3), Rational(5, 2), Rational(-2)}) {
    OrdinaryRiordan l = legendre_array(r, 14);
    TriangularMatrix m = l.realize(13);
    for (std::size_t n = 0; n < 13; ++n)
      CHECK(m.entry(n, 0) == closed_form(Family::Legendre, r, n));
  }

  ProductionMatrix p = riordan_stieltjes(legendre_array(3, 10), 6);
  CHECK(p.is_tridiagonal().tridiagonal);
  CHECK(p.entry(0, 0) == Rational(3));
  CHECK(p.entry(1, 0) == Rational(4));
  for (std::size_t i = 1; i < 6; ++i) {
    CHECK(p.entry(i, i) == Rational(3));
    if (i >= 2) CHECK(p.entry(i, i - 1) == Rational(2));
  }

  CHECK(family_hankel(Family::Legendre, 3, 0) == Rational(1));
  CHECK(family_hankel(Family::Legendre, 3, 2) == Rational(32));  // (r^2-1)^3 / 2^4

  CHECK_THROWS_AS(legendre_array(1, 8), DegenerateFamily);
  CHECK_THROWS_AS(legendre_array(-1, 8), DegenerateFamily);
}

TEST_CASE("hermite arrays") {
  // [e^{rx - x^2/2}, x] begins 1; r 1; r^2-1 2r 1; r(r^2-3) 3(r^2-1) 3r 1
  for (const Rational& r : {Rational(2), Rational(5, 2)}) {
    TriangularMatrix m = unitary_hermite_array(r, 6).realize(4);
    CHECK(m.entry(1, 0) == r);
    CHECK(m.entry(2, 0) == r * r - Rational(1));
    CHECK(m.entry(2, 1) == Rational(2) * r);
    CHECK(m.entry(3, 0) == r * (r * r - Rational(3)));
    CHECK(m.entry(3, 1) == Rational(3) * (r * r - Rational(1)));
    CHECK(m.entry(3, 2) == Rational(3) * r);
  }

  TriangularMatrix he0 = unitary_hermite_array(0, 8).realize(7);
  Rational want[] = {1, 0, -1, 0, 3, 0, -15};
  for (std::size_t n = 0; n < 7; ++n) CHECK(he0.entry(n, 0) == want[n]);

  for (std::size_t n = 0; n < 10; ++n) {
    CHECK(hermite_array(Rational(7, 3), 12).realize(10).entry(n, 0) ==
          closed_form(Family::Hermite, Rational(7, 3), n));
  }

  // Hankel of H_n(r) at n=2 is r-independent: -(2^0 0!)(2^1 1!)(2^2 2!) = -16
  for (const Rational& r : {Rational(1), Rational(-2), Rational(1, 2)}) {
    MomentSequence mu = moments_of(hermite_array(r, 8), 6);
    CHECK(hankel_direct(mu, 2) == Rational(-16));
    CHECK(family_hankel(Family::Hermite, r, 2) == Rational(-16));
  }
}

TEST_CASE("family recurrences and productions agree") {
  struct Case {
    Family fam;
    Rational r;
  };
  for (const auto& c : {Case{Family::ShiftedLegendre, Rational(5, 2)},
                        Case{Family::Legendre, Rational(-2)},
                        Case{Family::Hermite, Rational(3)},
                        Case{Family::UnitaryHermite, Rational(1, 2)}}) {
    ThreeTermRecurrence rec = family_recurrence(c.fam, c.r, 0, 6);
    ProductionMatrix p = [&] {
      switch (c.fam) {
        case Family::ShiftedLegendre:
          return riordan_stieltjes(shifted_legendre_array(c.r, 10), 6);
        case Family::Legendre:
          return riordan_stieltjes(legendre_array(c.r, 10), 6);
        case Family::Hermite:
          return hermite_array(c.r, 10).stieltjes(6);
        default:
          return unitary_hermite_array(c.r, 10).stieltjes(6);
      }
    }();
    ThreeTermRecurrence got = extract_recurrence(p);
    for (std::size_t i = 0; i < got.alphas.size(); ++i) CHECK(got.alpha(i) == rec.alpha(i));
    for (std::size_t i = 1; i <= got.betas.size(); ++i) CHECK(got.beta(i) == rec.beta(i));
  }
}

TEST_CASE("closed-form hankel equals direct hankel") {
  for (const Rational& r : {Rational(2), Rational(5, 2), Rational(-2)}) {
    for (Family fam : {Family::ShiftedLegendre, Family::Legendre, Family::Hermite,
                       Family::UnitaryHermite}) {
      ThreeTermRecurrence rec = family_recurrence(fam, r, 0, 9);
      MomentSequence mu = moments_from_recurrence(rec, 16);
      for (std::size_t n = 0; n <= 7; ++n)
        CHECK(hankel_direct(mu, n) == family_hankel(fam, r, n));
    }
  }
}

TEST_CASE("chebyshev modified family") {
  OrdinaryRiordan cheb = chebyshev_modified_array(0, 1, 10);
  ProductionMatrix p = riordan_stieltjes(cheb.inverse(), 6);
  CHECK(p.is_tridiagonal().tridiagonal);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(p.entry(i, i) == Rational(0));
    if (i >= 1) CHECK(p.entry(i, i - 1) == Rational(1));
  }

  MomentSequence mu = moments_of(chebyshev_modified_array(2, 1, 10).inverse(), 6);
  Rational want[] = {1, 2, 5, 14, 42, 132};
  for (std::size_t n = 0; n < 6; ++n) CHECK(mu.at(n) == want[n]);

  // A starts 1, -r, -s; the three-term recurrence spans two rows, so the
  // genuine A-sequence carries a tail beginning with -rs.
  auto [a, z] = chebyshev_modified_array(2, 3, 10).a_and_z_sequences();
  CHECK(a.coefficient(0) == Rational(1));
  CHECK(a.coefficient(1) == Rational(-2));
  CHECK(a.coefficient(2) == Rational(-3));
  CHECK(a.coefficient(3) == Rational(-6));

  CHECK_THROWS_AS(chebyshev_modified_array(1, 0, 8), DegenerateFamily);
}

TEST_CASE("generating function of the shifted polynomials") {
  for (const Rational& r : {Rational(2), Rational(-1)}) {
    // sum_n Ptilde_n(r) t^n = 1/sqrt(1 - 2(2r-1)t + t^2)
    Rational a = Rational(2) * (Rational(2) * r - Rational(1));
    PowerSeries gf = PowerSeries::one(12) /
                     (PowerSeries({1, -a, 1}, 12)).sqrt();
    for (std::size_t n = 0; n <= 12; ++n)
      CHECK(gf.coefficient(n) == closed_form(Family::ShiftedLegendre, r, n));
  }
}

TEST_CASE("classical recurrences on closed-form values") {
  Rational r(7, 3);
  for (long n = 1; n <= 10; ++n) {
    // (n+1) P_{n+1}(r) = (2n+1) r P_n(r) - n P_{n-1}(r)
    CHECK(Rational(n + 1) * closed_form(Family::Legendre, r, n + 1) ==
          Rational(2 * n + 1) * r * closed_form(Family::Legendre, r, n) -
              Rational(n) * closed_form(Family::Legendre, r, n - 1));
    // He_{n+1}(r) = r He_n(r) - n He_{n-1}(r)
    CHECK(closed_form(Family::UnitaryHermite, r, n + 1) ==
          r * closed_form(Family::UnitaryHermite, r, n) -
              Rational(n) * closed_form(Family::UnitaryHermite, r, n - 1));
  }
}

TEST_CASE("cosh and sech arrays are mutually inverse") {
  PowerSeries cosh = S("(exp(x)+exp(-x))/2", 10);
  PowerSeries sech = PowerSeries::one(10) / cosh;
  ExponentialRiordan a(cosh, PowerSeries::identity(10));
  ExponentialRiordan b(sech, PowerSeries::identity(10));
  CHECK(a.realize(8) * b.realize(8) == TriangularMatrix::identity(8));
  TriangularMatrix ma = a.realize(6);
  TriangularMatrix want(std::vector<std::vector<Rational>>{
      {1}, {0, 1}, {1, 0, 1}, {0, 3, 0, 1}, {1, 0, 6, 0, 1}, {0, 5, 0, 10, 0, 1}});
  CHECK(ma == want);
}
