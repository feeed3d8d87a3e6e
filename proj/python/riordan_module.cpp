// Python bindings: the main pipeline operations, with rationals passed as
// "p/q" strings so exactness survives the language boundary.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/exp_riordan.hpp"
#include "riordan/families.hpp"
#include "riordan/fixtures.hpp"
#include "riordan/orthopoly.hpp"
#include "riordan/production.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/series_expr.hpp"

namespace py = pybind11;
using namespace riordan;

namespace {

std::vector<std::string> to_strs(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

std::vector<std::vector<std::string>> matrix_strs(const TriangularMatrix& m) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t n = 0; n < m.rows(); ++n) out.push_back(to_strs(m.row(n)));
  return out;
}

TriangularMatrix realize_any(const std::string& g, const std::string& f,
                             std::size_t rows, bool exp, bool invert_first) {
  std::size_t order = rows + 2;
  if (exp) {
    ExponentialRiordan a(parse_series(g, order), parse_series(f, order));
    if (invert_first) a = a.inverse();
    return a.realize(rows);
  }
  OrdinaryRiordan a(parse_series(g, order), parse_series(f, order));
  if (invert_first) a = a.inverse();
  return a.realize(rows);
}

ProductionMatrix production_any(const std::string& g, const std::string& f,
                                std::size_t size, bool exp, bool invert_first) {
  std::size_t order = size + 2;
  if (exp) {
    ExponentialRiordan a(parse_series(g, order), parse_series(f, order));
    if (invert_first) a = a.inverse();
    return a.stieltjes(size);
  }
  OrdinaryRiordan a(parse_series(g, order), parse_series(f, order));
  if (invert_first) a = a.inverse();
  return riordan_stieltjes(a, size);
}

MomentSequence parse_moments(const std::vector<std::string>& seq) {
  std::vector<Rational> vals;
  vals.reserve(seq.size());
  for (const auto& s : seq) vals.push_back(Rational::parse(s));
  return MomentSequence(std::move(vals));
}

}  // namespace

PYBIND11_MODULE(_riordan, m) {
  m.doc() = "Exact Riordan arrays, production matrices, moments, and "
            "Hankel transforms";

  py::register_exception<Error>(m, "RiordanError");

  m.def(
      "build",
      [](const std::string& g, const std::string& f, std::size_t rows, bool exp) {
        return matrix_strs(realize_any(g, f, rows, exp, false));
      },
      py::arg("g"), py::arg("f"), py::arg("rows"), py::arg("exp") = false,
      "Realize the Riordan array (g, f) (or [g, f] with exp=True) as rows of "
      "rational strings.");

  m.def(
      "production",
      [](const std::string& g, const std::string& f, std::size_t size, bool exp,
         bool invert_first) {
        ProductionMatrix p = production_any(g, f, size, exp, invert_first);
        auto verdict = p.is_tridiagonal();
        py::dict out;
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < p.size(); ++i) rows.push_back(to_strs(p.row(i)));
        out["rows"] = rows;
        out["tridiagonal"] = verdict.tridiagonal;
        if (verdict.witness)
          out["witness"] = py::make_tuple(verdict.witness->first, verdict.witness->second);
        return out;
      },
      py::arg("g"), py::arg("f"), py::arg("size"), py::arg("exp") = false,
      py::arg("invert_first") = false,
      "Production (Stieltjes) matrix with its tridiagonal verdict.");

  m.def(
      "recurrence",
      [](const std::string& g, const std::string& f, std::size_t size, bool exp,
         bool invert_first) {
        ThreeTermRecurrence rec =
            extract_recurrence(production_any(g, f, size, exp, invert_first));
        return py::make_tuple(to_strs(rec.alphas), to_strs(rec.betas));
      },
      py::arg("g"), py::arg("f"), py::arg("size"), py::arg("exp") = false,
      py::arg("invert_first") = false,
      "Three-term recurrence (alphas, betas) read off a tridiagonal "
      "production matrix.");

  m.def(
      "moments",
      [](const std::string& g, const std::string& f, std::size_t count, bool exp) {
        MomentSequence mu =
            exp ? moments_of(ExponentialRiordan(parse_series(g, count),
                                                parse_series(f, count)),
                             count)
                : moments_of(OrdinaryRiordan(parse_series(g, count),
                                             parse_series(f, count)),
                             count);
        return to_strs(mu.values);
      },
      py::arg("g"), py::arg("f"), py::arg("count"), py::arg("exp") = false,
      "First-column moment sequence of the array.");

  m.def(
      "family_moments",
      [](const std::string& name, const std::string& r, const std::string& s,
         std::size_t count) {
        Family fam = family_from_name(name);
        ThreeTermRecurrence rec = family_recurrence(
            fam, Rational::parse(r), Rational::parse(s), count / 2 + 2);
        return to_strs(moments_from_recurrence(rec, count).values);
      },
      py::arg("name"), py::arg("r"), py::arg("s") = "0", py::arg("count") = 8,
      "Moment sequence of a named family at rational parameters.");

  m.def(
      "hankel",
      [](const std::vector<std::string>& seq, std::size_t n) {
        MomentSequence mu = parse_moments(seq);
        std::vector<std::string> out;
        for (std::size_t k = 0; k <= n; ++k) out.push_back(hankel_direct(mu, k).str());
        return out;
      },
      py::arg("seq"), py::arg("n"),
      "Hankel transform h_0..h_n of a rational sequence.");

  m.def(
      "closed_form",
      [](const std::string& name, const std::string& r, std::size_t n) {
        return closed_form(family_from_name(name), Rational::parse(r), n).str();
      },
      py::arg("name"), py::arg("r"), py::arg("n"),
      "Exact value of the family's moment polynomial at r.");

  m.def(
      "family_hankel",
      [](const std::string& name, const std::string& r, std::size_t n) {
        return family_hankel(family_from_name(name), Rational::parse(r), n).str();
      },
      py::arg("name"), py::arg("r"), py::arg("n"),
      "Closed-form Hankel transform value of a named family.");

  m.def(
      "verify_fixtures",
      [](const std::string& path) {
        py::dict out;
        for (const auto& r : verify_fixtures(path, {}))
          out[py::str(r.id)] = r.pass;
        return out;
      },
      py::arg("path"),
      "Recompute the fixture catalog at `path`; returns id -> pass.");
}
