#include "riordan/families.hpp"

#include "riordan/errors.hpp"

namespace riordan {

Family family_from_name(const std::string& name) {
  if (name == "legendre") return Family::Legendre;
  if (name == "shifted-legendre") return Family::ShiftedLegendre;
  if (name == "hermite") return Family::Hermite;
  if (name == "unitary-hermite") return Family::UnitaryHermite;
  if (name == "chebyshev-u") return Family::ChebyshevU;
  throw ParseError("unknown family '" + name + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Legendre: return "legendre";
    case Family::ShiftedLegendre: return "shifted-legendre";
    case Family::Hermite: return "hermite";
    case Family::UnitaryHermite: return "unitary-hermite";
    case Family::ChebyshevU: return "chebyshev-u";
  }
  throw Error("unreachable");
}

namespace {
PowerSeries poly(std::vector<Rational> coeffs, std::size_t order) {
  return PowerSeries(std::move(coeffs), order);
}
}  // namespace

OrdinaryRiordan shifted_legendre_coefficient_array(const Rational& r, std::size_t order) {
  Rational rr1 = r * (r - Rational(1));
  if (rr1.is_zero())
    throw DegenerateFamily("shifted Legendre needs r(r-1) != 0: beta_n = r(r-1) vanishes");
  PowerSeries q = poly({1, Rational(2) * r - 1, rr1}, order);
  PowerSeries num = poly({1, 0, -rr1}, order);
  return OrdinaryRiordan(num / q, PowerSeries::identity(order) / q);
}

OrdinaryRiordan shifted_legendre_array(const Rational& r, std::size_t order) {
  return shifted_legendre_coefficient_array(r, order).inverse();
}

OrdinaryRiordan legendre_coefficient_array(const Rational& r, std::size_t order) {
  Rational s = (r * r - Rational(1)) / Rational(4);
  if (s.is_zero())
    throw DegenerateFamily("Legendre needs r^2 != 1: beta_n = (r^2-1)/4 vanishes");
  PowerSeries q = poly({1, r, s}, order);
  PowerSeries num = poly({1, 0, -s}, order);
  return OrdinaryRiordan(num / q, PowerSeries::identity(order) / q);
}

OrdinaryRiordan legendre_array(const Rational& r, std::size_t order) {
  return legendre_coefficient_array(r, order).inverse();
}

ExponentialRiordan hermite_array(const Rational& r, std::size_t order) {
  PowerSeries e = poly({0, Rational(2) * r, Rational(-1)}, order).exp();
  return ExponentialRiordan(std::move(e), PowerSeries::identity(order));
}

ExponentialRiordan unitary_hermite_array(const Rational& r, std::size_t order) {
  PowerSeries e = poly({0, r, Rational(-1, 2)}, order).exp();
  return ExponentialRiordan(std::move(e), PowerSeries::identity(order));
}

OrdinaryRiordan chebyshev_modified_array(const Rational& r, const Rational& s,
                                         std::size_t order) {
  if (s.is_zero()) throw DegenerateFamily("Chebyshev family needs s != 0");
  PowerSeries q = poly({1, r, s}, order);
  return OrdinaryRiordan(PowerSeries::one(order) / q, PowerSeries::identity(order) / q);
}

Rational closed_form(Family f, const Rational& r, std::size_t n) {
  long ln = static_cast<long>(n);
  switch (f) {
    case Family::Legendre: {
      // sum_k (-1)^k C(n,k)^2 ((1+r)/2)^{n-k} ((1-r)/2)^k
      Rational u = (Rational(1) + r) / Rational(2);
      Rational v = (Rational(1) - r) / Rational(2);
      Rational acc = 0;
      for (long k = 0; k <= ln; ++k) {
        Rational c = binomial(ln, k);
        Rational term = c * c * pow(u, ln - k) * pow(v, k);
        acc += (k % 2 == 0) ? term : -term;
      }
      return acc;
    }
    case Family::ShiftedLegendre: {
      // sum_k (-1)^{n-k} C(n+k,2k) C(2k,k) r^k
      Rational acc = 0;
      for (long k = 0; k <= ln; ++k) {
        Rational term = binomial(ln + k, 2 * k) * binomial(2 * k, k) * pow(r, k);
        acc += ((ln - k) % 2 == 0) ? term : -term;
      }
      return acc;
    }
    case Family::Hermite: {
      // sum_{k<=n/2} (-1)^k n!/(k!(n-2k)!) (2r)^{n-2k}
      Rational acc = 0;
      for (long k = 0; 2 * k <= ln; ++k) {
        Rational term = factorial(ln) / (factorial(k) * factorial(ln - 2 * k)) *
                        pow(Rational(2) * r, ln - 2 * k);
        acc += (k % 2 == 0) ? term : -term;
      }
      return acc;
    }
    case Family::UnitaryHermite: {
      // sum_{k<=n/2} (-1)^k n!/(k!(n-2k)! 2^k) r^{n-2k}
      Rational acc = 0;
      for (long k = 0; 2 * k <= ln; ++k) {
        Rational term = factorial(ln) /
                        (factorial(k) * factorial(ln - 2 * k) * pow(Rational(2), k)) *
                        pow(r, ln - 2 * k);
        acc += (k % 2 == 0) ? term : -term;
      }
      return acc;
    }
    case Family::ChebyshevU:
      throw Error("Chebyshev-U closed form is parameterized by (r, s), not a single r");
  }
  throw Error("unreachable");
}

ThreeTermRecurrence family_recurrence(Family f, const Rational& r, const Rational& s,
                                      std::size_t count) {
  ThreeTermRecurrence rec;
  switch (f) {
    case Family::ShiftedLegendre: {
      Rational rr1 = r * (r - Rational(1));
      if (rr1.is_zero()) throw DegenerateFamily("r(r-1) = 0");
      rec.alphas.assign(count, Rational(2) * r - 1);
      rec.betas.assign(count, rr1);
      if (count > 0) rec.betas[0] = Rational(2) * rr1;
      return rec;
    }
    case Family::Legendre: {
      Rational b = (r * r - Rational(1)) / Rational(4);
      if (b.is_zero()) throw DegenerateFamily("r^2 = 1");
      rec.alphas.assign(count, r);
      rec.betas.assign(count, b);
      if (count > 0) rec.betas[0] = Rational(2) * b;
      return rec;
    }
    case Family::Hermite: {
      rec.alphas.assign(count, Rational(2) * r);
      for (std::size_t k = 1; k <= count; ++k)
        rec.betas.push_back(Rational(-2) * Rational(static_cast<long>(k)));
      return rec;
    }
    case Family::UnitaryHermite: {
      rec.alphas.assign(count, r);
      for (std::size_t k = 1; k <= count; ++k)
        rec.betas.push_back(-Rational(static_cast<long>(k)));
      return rec;
    }
    case Family::ChebyshevU: {
      if (s.is_zero()) throw DegenerateFamily("s = 0");
      rec.alphas.assign(count, r);
      rec.betas.assign(count, s);
      return rec;
    }
  }
  throw Error("unreachable");
}

Rational family_hankel(Family f, const Rational& r, std::size_t n) {
  long ln = static_cast<long>(n);
  long tri = ln * (ln + 1) / 2;  // C(n+1, 2)
  switch (f) {
    case Family::ShiftedLegendre: {
      Rational rr1 = r * (r - Rational(1));
      if (rr1.is_zero()) throw DegenerateFamily("r(r-1) = 0");
      return pow(Rational(2), ln) * pow(rr1, tri);
    }
    case Family::Legendre: {
      Rational d = r * r - Rational(1);
      if (d.is_zero()) throw DegenerateFamily("r^2 = 1");
      return pow(d, tri) / pow(Rational(2), ln * ln);
    }
    case Family::UnitaryHermite: {
      Rational h = 1;
      for (long k = 0; k <= ln; ++k) h *= factorial(k);
      return (tri % 2 == 0) ? h : -h;
    }
    case Family::Hermite: {
      Rational h = 1;
      for (long k = 0; k <= ln; ++k) h *= pow(Rational(2), k) * factorial(k);
      return (tri % 2 == 0) ? h : -h;
    }
    case Family::ChebyshevU:
      throw Error("no single-r Hankel closed form for the Chebyshev family");
  }
  throw Error("unreachable");
}

}  // namespace riordan
