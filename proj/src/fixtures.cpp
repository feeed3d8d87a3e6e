#include "riordan/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"
#include "riordan/errors.hpp"
#include "riordan/exp_riordan.hpp"
#include "riordan/power_series.hpp"
#include "riordan/rational.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/triangular_matrix.hpp"

namespace riordan {
namespace {

using nlohmann::json;

// Every fixture is recomputed as a list of rows; sequences are rows of
// length one so the comparison logic is shared.
using Rows = std::vector<std::vector<Rational>>;
using Generator = std::function<Rows(std::size_t)>;

Rows as_rows(const std::vector<Rational>& seq) {
  Rows out;
  for (const auto& v : seq) out.push_back({v});
  return out;
}

Rows matrix_rows(const TriangularMatrix& m, std::size_t rows) {
  Rows out;
  for (std::size_t n = 0; n < rows; ++n) {
    std::vector<Rational> row;
    for (std::size_t k = 0; k <= n; ++k) row.push_back(m.entry(n, k));
    out.push_back(std::move(row));
  }
  return out;
}

PowerSeries catalan(long order) {
  // c(x) = (1 - sqrt(1-4x)) / (2x)
  PowerSeries s({1, -4}, order + 1);
  PowerSeries num = PowerSeries::one(order + 1) - s.sqrt();
  return Rational(1, 2) * num.shift_down();
}

OrdinaryRiordan catalan_array(long order) {
  PowerSeries c = catalan(order);
  return OrdinaryRiordan(c, (c.shift_up()).truncate(order));
}

OrdinaryRiordan aerated_catalan_array(long order) {
  // (c(x^2), x c(x^2)) is the inverse of (1/(1+x^2), x/(1+x^2)).
  PowerSeries q({1, 0, 1}, order);
  return OrdinaryRiordan(PowerSeries::one(order) / q,
                         PowerSeries::identity(order) / q)
      .inverse();
}

ExponentialRiordan laguerre_signed(long order) {
  PowerSeries q({1, 1}, order);
  return ExponentialRiordan(PowerSeries::one(order) / q,
                            PowerSeries::identity(order) / q);
}

PowerSeries cosh_series(long order) {
  PowerSeries x = PowerSeries::identity(order);
  return Rational(1, 2) * (x.exp() + (Rational(-1) * x).exp());
}

std::vector<Rational> exp_row_sums(const ExponentialRiordan& a,
                                   std::size_t count) {
  return a.realize(count).row_sums();
}

const std::map<std::string, Generator>& generators() {
  static const std::map<std::string, Generator> table = {
      {"A007318",
       [](std::size_t n) {
         long ord = static_cast<long>(n);
         PowerSeries q({1, -1}, ord);
         OrdinaryRiordan pascal(PowerSeries::one(ord) / q,
                                PowerSeries::identity(ord) / q);
         return matrix_rows(pascal.realize(n), n);
       }},
      {"A000045",
       [](std::size_t n) {
         long ord = static_cast<long>(n);
         PowerSeries q({1, -1}, ord);
         OrdinaryRiordan pascal(PowerSeries::one(ord) / q,
                                PowerSeries::identity(ord) / q);
         return as_rows(pascal.realize(n).diagonal_sums());
       }},
      {"A000108",
       [](std::size_t n) {
         PowerSeries c = catalan(static_cast<long>(n));
         std::vector<Rational> seq;
         for (std::size_t k = 0; k < n; ++k)
           seq.push_back(c.coefficient(static_cast<long>(k)));
         return as_rows(seq);
       }},
      {"A009766",
       [](std::size_t n) {
         auto m = catalan_array(static_cast<long>(n)).realize(n);
         return matrix_rows(m.reversal(), n);
       }},
      {"A033184",
       [](std::size_t n) {
         return matrix_rows(catalan_array(static_cast<long>(n)).realize(n), n);
       }},
      {"A053121",
       [](std::size_t n) {
         return matrix_rows(
             aerated_catalan_array(static_cast<long>(n)).realize(n), n);
       }},
      {"A001405",
       [](std::size_t n) {
         return as_rows(
             aerated_catalan_array(static_cast<long>(n)).realize(n).row_sums());
       }},
      {"A094587",
       [](std::size_t n) {
         long ord = static_cast<long>(n);
         PowerSeries q({1, -1}, ord);
         ExponentialRiordan a(PowerSeries::one(ord) / q,
                              PowerSeries::identity(ord));
         return matrix_rows(a.realize(n), n);
       }},
      {"A021009",
       [](std::size_t n) {
         return matrix_rows(laguerre_signed(static_cast<long>(n)).realize(n),
                            n);
       }},
      {"A094816",
       [](std::size_t n) {
         long ord = static_cast<long>(n);
         PowerSeries q({1, -1}, ord);
         ExponentialRiordan a(PowerSeries::identity(ord).exp(),
                              (PowerSeries::one(ord) / q).log());
         return matrix_rows(a.realize(n), n);
       }},
      {"A111596",
       [](std::size_t n) {
         long ord = static_cast<long>(n);
         PowerSeries q({1, 1}, ord);
         ExponentialRiordan a(PowerSeries::one(ord),
                              PowerSeries::identity(ord) / q);
         return matrix_rows(a.realize(n), n);
       }},
      {"A111884",
       [](std::size_t n) {
         long ord = static_cast<long>(n);
         PowerSeries q({1, 1}, ord);
         ExponentialRiordan a(PowerSeries::one(ord),
                              PowerSeries::identity(ord) / q);
         return as_rows(exp_row_sums(a, n));
       }},
      {"A066325",
       [](std::size_t n) {
         long ord = static_cast<long>(n);
         PowerSeries g = (PowerSeries({0, 0, Rational(-1, 2)}, ord)).exp();
         ExponentialRiordan a(g, PowerSeries::identity(ord));
         return matrix_rows(a.realize(n), n);
       }},
      {"A119467",
       [](std::size_t n) {
         long ord = static_cast<long>(n);
         ExponentialRiordan a(cosh_series(ord), PowerSeries::identity(ord));
         return matrix_rows(a.realize(n), n);
       }},
      {"A119879",
       [](std::size_t n) {
         long ord = static_cast<long>(n);
         PowerSeries sech = PowerSeries::one(ord) / cosh_series(ord);
         ExponentialRiordan a(sech, PowerSeries::identity(ord));
         return matrix_rows(a.realize(n), n);
       }},
      {"A155585",
       [](std::size_t n) {
         long ord = static_cast<long>(n);
         PowerSeries sech = PowerSeries::one(ord) / cosh_series(ord);
         ExponentialRiordan a(sech, PowerSeries::identity(ord));
         return as_rows(exp_row_sums(a, n));
       }},
      {"A000262",
       [](std::size_t n) {
         long ord = static_cast<long>(n);
         PowerSeries q({1, -1}, ord);
         ExponentialRiordan a(PowerSeries::one(ord),
                              PowerSeries::identity(ord) / q);
         return as_rows(exp_row_sums(a, n));
       }},
  };
  return table;
}

Rows expected_rows(const json& entry) {
  Rows out;
  if (entry.at("kind") == "triangle") {
    for (const auto& row : entry.at("rows")) {
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(Rational::parse(v.get<std::string>()));
      out.push_back(std::move(r));
    }
  } else {
    for (const auto& v : entry.at("values"))
      out.push_back({Rational::parse(v.get<std::string>())});
  }
  return out;
}

std::string describe(const Rows& got, const Rows& want) {
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (got[i].size() != want[i].size())
      return "row " + std::to_string(i) + " length mismatch";
    for (std::size_t j = 0; j < want[i].size(); ++j) {
      if (got[i][j] != want[i][j]) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << "): computed " << got[i][j].str()
           << ", expected " << want[i][j].str();
        return os.str();
      }
    }
  }
  return "";
}

}  // namespace

std::vector<std::string> fixture_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, gen] : generators()) ids.push_back(id);
  return ids;
}

std::vector<FixtureResult> verify_fixtures(const std::string& path,
                                           const std::vector<std::string>& ids) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open fixtures file: " + path);
  json data = json::parse(in);

  std::vector<std::string> wanted = ids.empty() ? fixture_ids() : ids;
  std::sort(wanted.begin(), wanted.end());

  std::vector<FixtureResult> results;
  for (const auto& id : wanted) {
    auto git = generators().find(id);
    if (git == generators().end()) {
      results.push_back({id, false, "unknown fixture id"});
      continue;
    }
    if (!data.contains(id)) {
      results.push_back({id, false, "missing from fixtures file"});
      continue;
    }
    Rows want = expected_rows(data.at(id));
    Rows got = git->second(want.size());
    std::string detail = describe(got, want);
    results.push_back({id, detail.empty(), detail});
  }
  return results;
}

}  // namespace riordan
