// riordan: exact Riordan-array toolkit.
//
// Commands: build, production, recurrence, moments, hankel, family, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 domain error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "riordan/errors.hpp"
#include "riordan/exp_riordan.hpp"
#include "riordan/families.hpp"
#include "riordan/fixtures.hpp"
#include "riordan/orthopoly.hpp"
#include "riordan/power_series.hpp"
#include "riordan/production.hpp"
#include "riordan/rational.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/series_expr.hpp"
#include "riordan/triangular_matrix.hpp"

#ifndef RIORDAN_DEFAULT_FIXTURES
#define RIORDAN_DEFAULT_FIXTURES "data/fixtures.json"
#endif

namespace {

using nlohmann::json;
using namespace riordan;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

json rationals_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out;
}

struct BuildOpts {
  std::string g_text, f_text;
  std::size_t rows = 8;
  bool exp = false;
  bool json_out = false;
};

int cmd_build(const BuildOpts& o) {
  std::size_t order = o.rows;  // one spare coefficient beyond the last row
  TriangularMatrix m =
      o.exp ? ExponentialRiordan(parse_series(o.g_text, order),
                                 parse_series(o.f_text, order))
                  .realize(o.rows)
            : OrdinaryRiordan(parse_series(o.g_text, order),
                              parse_series(o.f_text, order))
                  .realize(o.rows);
  if (o.json_out) {
    json out;
    out["kind"] = o.exp ? "exponential" : "ordinary";
    out["g"] = o.g_text;
    out["f"] = o.f_text;
    out["rows"] = json::parse(m.json());
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << m.str();
  }
  return kExitOk;
}

struct ProductionOpts : BuildOpts {
  bool invert_first = false;
};

ProductionMatrix production_of(const ProductionOpts& o) {
  // Extra order headroom: inversion and reversion consume coefficients.
  std::size_t order = o.rows + 2;
  if (o.exp) {
    ExponentialRiordan a(parse_series(o.g_text, order),
                         parse_series(o.f_text, order));
    if (o.invert_first) a = a.inverse();
    return a.stieltjes(o.rows);
  }
  OrdinaryRiordan a(parse_series(o.g_text, order), parse_series(o.f_text, order));
  if (o.invert_first) a = a.inverse();
  return riordan_stieltjes(a, o.rows);
}

int cmd_production(const ProductionOpts& o) {
  ProductionMatrix p = production_of(o);
  auto verdict = p.is_tridiagonal();
  if (o.json_out) {
    std::cout << json::parse(p.json()).dump(2) << "\n";
  } else {
    std::cout << p.str();
    if (verdict.tridiagonal) {
      std::cout << "tridiagonal: yes\n";
    } else {
      auto [i, j] = *verdict.witness;
      std::cout << "tridiagonal: no (entry " << i << "," << j << " = "
                << p.entry(i, j).str() << ")\n";
    }
  }
  return verdict.tridiagonal ? kExitOk : kExitVerify;
}

int cmd_recurrence(const ProductionOpts& o) {
  ProductionMatrix p = production_of(o);
  ThreeTermRecurrence rec = extract_recurrence(p);
  if (o.json_out) {
    json out;
    out["alpha"] = rationals_json(rec.alphas);
    out["beta"] = rationals_json(rec.betas);
    out["degenerate"] = rec.is_degenerate();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "alpha: " << join(rec.alphas) << "\n";
    std::cout << "beta:  " << join(rec.betas) << "\n";
  }
  return kExitOk;
}

struct FamilySource {
  std::string name;
  std::string r_text = "0";
  std::string s_text = "0";

  Family family() const { return family_from_name(name); }
  Rational r() const { return Rational::parse(r_text); }
  Rational s() const { return Rational::parse(s_text); }
};

MomentSequence family_moments(const FamilySource& fs, std::size_t count) {
  std::size_t depth = count / 2 + 2;
  return moments_from_recurrence(
      family_recurrence(fs.family(), fs.r(), fs.s(), depth), count);
}

struct MomentsOpts {
  std::string g_text, f_text;
  FamilySource family;
  std::size_t order = 8;
  bool exp = false;
  bool json_out = false;
  bool have_family = false;
};

int cmd_moments(const MomentsOpts& o) {
  MomentSequence mu;
  if (o.have_family) {
    mu = family_moments(o.family, o.order + 1);
  } else if (o.exp) {
    mu = moments_of(ExponentialRiordan(parse_series(o.g_text, o.order + 1),
                                       parse_series(o.f_text, o.order + 1)),
                    o.order + 1);
  } else {
    mu = moments_of(OrdinaryRiordan(parse_series(o.g_text, o.order + 1),
                                    parse_series(o.f_text, o.order + 1)),
                    o.order + 1);
  }
  if (o.json_out) {
    json out;
    out["moments"] = rationals_json(mu.values);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << mu.str() << "\n";
  }
  return kExitOk;
}

struct HankelOpts {
  std::string seq_text;
  std::string fixture_id;
  std::string fixtures_path = RIORDAN_DEFAULT_FIXTURES;
  FamilySource family;
  std::size_t order = 4;
  std::string method = "direct";
  bool json_out = false;
  bool have_seq = false, have_fixture = false, have_family = false;
};

MomentSequence fixture_sequence(const std::string& path, const std::string& id) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open fixtures file: " + path);
  json data = json::parse(in);
  if (!data.contains(id)) throw ParseError("no fixture '" + id + "' in " + path);
  const json& entry = data.at(id);
  if (entry.at("kind") != "sequence")
    throw ParseError("fixture '" + id + "' is not a sequence");
  MomentSequence mu;
  for (const auto& v : entry.at("values"))
    mu.values.push_back(Rational::parse(v.get<std::string>()));
  return mu;
}

int cmd_hankel(const HankelOpts& o) {
  std::size_t n = o.order;
  bool want_direct = o.method == "direct" || o.method == "both";
  bool want_product = o.method == "product" || o.method == "both";

  MomentSequence mu;
  std::optional<ThreeTermRecurrence> rec;
  if (o.have_family) {
    rec = family_recurrence(o.family.family(), o.family.r(), o.family.s(),
                            n + 1);
    mu = family_moments(o.family, 2 * n + 2);
  } else if (o.have_fixture) {
    mu = fixture_sequence(o.fixtures_path, o.fixture_id);
  } else {
    mu = MomentSequence::parse(o.seq_text);
  }
  if (want_product && !rec) rec = recurrence_from_moments(mu, n);

  std::vector<Rational> direct, product;
  for (std::size_t k = 0; k <= n; ++k) {
    if (want_direct) direct.push_back(hankel_direct(mu, k));
    if (want_product) product.push_back(hankel_product(*rec, mu.at(0), k));
  }
  bool agree = o.method != "both" || direct == product;
  const std::vector<Rational>& shown = want_direct ? direct : product;

  if (o.json_out) {
    json out;
    out["method"] = o.method;
    if (want_direct) out["direct"] = rationals_json(direct);
    if (want_product) out["product"] = rationals_json(product);
    if (o.method == "both") out["agree"] = agree;
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k <= n; ++k)
      std::cout << "h_" << k << " = " << shown[k].str() << "\n";
    if (o.method == "both")
      std::cout << (agree ? "methods agree\n" : "methods disagree\n");
  }
  return agree ? kExitOk : kExitVerify;
}

struct FamilyOpts {
  FamilySource source;
  std::size_t rows = 6;
  bool json_out = false;
};

int cmd_family(const FamilyOpts& o) {
  Family f = o.source.family();
  Rational r = o.source.r();
  Rational s = o.source.s();
  std::size_t order = o.rows + 2;

  TriangularMatrix moments_array;
  switch (f) {
    case Family::Legendre:
      moments_array = legendre_array(r, order).realize(o.rows);
      break;
    case Family::ShiftedLegendre:
      moments_array = shifted_legendre_array(r, order).realize(o.rows);
      break;
    case Family::Hermite:
      moments_array = hermite_array(r, order).realize(o.rows);
      break;
    case Family::UnitaryHermite:
      moments_array = unitary_hermite_array(r, order).realize(o.rows);
      break;
    case Family::ChebyshevU:
      moments_array =
          chebyshev_modified_array(r, s, order).inverse().realize(o.rows);
      break;
  }

  ThreeTermRecurrence rec = family_recurrence(f, r, s, o.rows + 1);
  // extra moments so the direct Hankel determinants below are computable
  MomentSequence mu_full = moments_from_recurrence(rec, 2 * o.rows);
  MomentSequence mu(std::vector<Rational>(mu_full.values.begin(),
                                          mu_full.values.begin() +
                                              static_cast<long>(o.rows)));

  std::vector<Rational> hankel;
  for (std::size_t k = 0; k + 1 < o.rows; ++k) {
    hankel.push_back(f == Family::ChebyshevU ? hankel_direct(mu_full, k)
                                             : family_hankel(f, r, k));
  }

  if (o.json_out) {
    json out;
    out["family"] = family_name(f);
    out["r"] = r.str();
    if (f == Family::ChebyshevU) out["s"] = s.str();
    out["array"] = json::parse(moments_array.json());
    out["alpha"] = rationals_json(rec.alphas);
    out["beta"] = rationals_json(rec.betas);
    out["moments"] = rationals_json(mu.values);
    out["hankel"] = rationals_json(hankel);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "family " << family_name(f) << " at r = " << r.str();
    if (f == Family::ChebyshevU) std::cout << ", s = " << s.str();
    std::cout << "\n" << moments_array.str();
    std::cout << "alpha: " << join(rec.alphas) << "\n";
    std::cout << "beta:  " << join(rec.betas) << "\n";
    std::cout << "moments: " << mu.str() << "\n";
    std::cout << "hankel:  " << join(hankel) << "\n";
  }
  return kExitOk;
}

struct VerifyOpts {
  std::vector<std::string> ids;
  std::string fixtures_path = RIORDAN_DEFAULT_FIXTURES;
  bool all = false;
  bool json_out = false;
};

int cmd_verify(const VerifyOpts& o) {
  if (!o.all && o.ids.empty())
    throw CLI::ValidationError("verify", "give fixture ids or --all");
  auto results = verify_fixtures(o.fixtures_path, o.all ? std::vector<std::string>{} : o.ids);
  bool ok = true;
  if (o.json_out) {
    json out = json::array();
    for (const auto& r : results) {
      json item;
      item["id"] = r.id;
      item["pass"] = r.pass;
      if (!r.pass) item["detail"] = r.detail;
      out.push_back(item);
      ok = ok && r.pass;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << r.id << ": " << (r.pass ? "pass" : "FAIL") << "\n";
      if (!r.pass) std::cout << "  " << r.detail << "\n";
      ok = ok && r.pass;
    }
  }
  return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Riordan-array toolkit: arrays, production matrices, "
               "orthogonal polynomials, moments, and Hankel transforms"};
  app.require_subcommand(1);

  BuildOpts build_opts;
  auto* build = app.add_subcommand("build", "Realize a Riordan array (g, f)");
  build->add_option("g", build_opts.g_text, "Series expression for g")->required();
  build->add_option("f", build_opts.f_text, "Series expression for f")->required();
  build->add_option("--rows", build_opts.rows, "Rows to realize");
  build->add_flag("--exp", build_opts.exp, "Exponential array [g, f]");
  build->add_flag("--json", build_opts.json_out, "Machine-readable output");

  ProductionOpts prod_opts;
  auto add_production_opts = [&](CLI::App* cmd) {
    cmd->add_option("g", prod_opts.g_text, "Series expression for g")->required();
    cmd->add_option("f", prod_opts.f_text, "Series expression for f")->required();
    cmd->add_option("--rows", prod_opts.rows, "Production rows");
    cmd->add_flag("--exp", prod_opts.exp, "Exponential array [g, f]");
    cmd->add_flag("--invert-first", prod_opts.invert_first,
                  "Invert the array before computing its production matrix");
    cmd->add_flag("--json", prod_opts.json_out, "Machine-readable output");
  };
  auto* production = app.add_subcommand(
      "production", "Production (Stieltjes) matrix with tridiagonal verdict");
  add_production_opts(production);
  auto* recurrence = app.add_subcommand(
      "recurrence", "Three-term recurrence read off a tridiagonal production matrix");
  add_production_opts(recurrence);

  MomentsOpts mom_opts;
  auto* moments = app.add_subcommand(
      "moments", "Moment sequence of an array's first column or a family");
  moments->add_option("g", mom_opts.g_text, "Series expression for g");
  moments->add_option("f", mom_opts.f_text, "Series expression for f");
  moments->add_option("--order", mom_opts.order, "Highest moment index");
  moments->add_flag("--exp", mom_opts.exp, "Exponential array [g, f]");
  auto* mom_family = moments->add_option("--family", mom_opts.family.name,
                                         "Named family instead of a (g, f) pair");
  moments->add_option("--r", mom_opts.family.r_text, "Family parameter r");
  moments->add_option("--s", mom_opts.family.s_text, "Family parameter s");
  moments->add_flag("--json", mom_opts.json_out, "Machine-readable output");

  HankelOpts han_opts;
  auto* hankel = app.add_subcommand("hankel", "Hankel transform h_0..h_n");
  auto* han_seq = hankel->add_option("--seq", han_opts.seq_text,
                                     "Comma-separated moment sequence");
  auto* han_fix = hankel->add_option("--fixture", han_opts.fixture_id,
                                     "Sequence fixture id as moment source");
  auto* han_fam = hankel->add_option("--family", han_opts.family.name,
                                     "Named family as moment source");
  hankel->add_option("--r", han_opts.family.r_text, "Family parameter r");
  hankel->add_option("--s", han_opts.family.s_text, "Family parameter s");
  hankel->add_option("--order", han_opts.order, "Largest Hankel index n");
  hankel->add_option("--method", han_opts.method, "direct | product | both")
      ->check(CLI::IsMember({"direct", "product", "both"}));
  hankel->add_option("--fixtures", han_opts.fixtures_path, "Fixture catalog path");
  hankel->add_flag("--json", han_opts.json_out, "Machine-readable output");

  FamilyOpts fam_opts;
  auto* family = app.add_subcommand(
      "family", "Report on a named orthogonal-polynomial family");
  family->add_option("name", fam_opts.source.name,
                     "legendre | shifted-legendre | hermite | unitary-hermite | chebyshev-u")
      ->required();
  family->add_option("--r", fam_opts.source.r_text, "Family parameter r");
  family->add_option("--s", fam_opts.source.s_text, "Family parameter s");
  family->add_option("--rows", fam_opts.rows, "Rows / moment count");
  family->add_flag("--json", fam_opts.json_out, "Machine-readable output");

  VerifyOpts ver_opts;
  auto* verify = app.add_subcommand(
      "verify", "Recompute catalog fixtures and prefix-compare");
  verify->add_option("ids", ver_opts.ids, "Fixture ids to check");
  verify->add_flag("--all", ver_opts.all, "Check the whole catalog");
  verify->add_option("--fixtures", ver_opts.fixtures_path, "Fixture catalog path");
  verify->add_flag("--json", ver_opts.json_out, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build) return cmd_build(build_opts);
    if (*production) return cmd_production(prod_opts);
    if (*recurrence) return cmd_recurrence(prod_opts);
    if (*moments) {
      mom_opts.have_family = mom_family->count() > 0;
      if (!mom_opts.have_family && (mom_opts.g_text.empty() || mom_opts.f_text.empty()))
        throw ParseError("moments needs a (g, f) pair or --family");
      return cmd_moments(mom_opts);
    }
    if (*hankel) {
      han_opts.have_seq = han_seq->count() > 0;
      han_opts.have_fixture = han_fix->count() > 0;
      han_opts.have_family = han_fam->count() > 0;
      if (han_opts.have_seq + han_opts.have_fixture + han_opts.have_family != 1)
        throw ParseError("hankel needs exactly one of --seq, --fixture, --family");
      return cmd_hankel(han_opts);
    }
    if (*family) return cmd_family(fam_opts);
    if (*verify) return cmd_verify(ver_opts);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
