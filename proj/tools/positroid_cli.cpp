#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oracle.hpp"
#include "positroid/error.hpp"
#include "positroid/grobner.hpp"
#include "positroid/json_io.hpp"
#include "positroid/linalg.hpp"
#include "positroid/positroid.hpp"
#include "positroid/promotion.hpp"

using namespace positroid;

namespace {

struct Options {
  int n = 0;
  int k = -1;
  int d = 1;
  std::string window;
  std::string interval;
  int bound = -1;
  std::string factors;
  std::string format = "ascii";
  std::uint64_t seed = 1;
  bool full = false;
  bool trace = false;
  bool inverse = false;
  std::string suite = "all";
  int max_n = 6;
  int max_d = 3;
  int samples = 100;
};

std::vector<int> parse_ints(const std::string& s, char sep) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    if (tok.empty()) throw Error("empty entry in list \"" + s + "\"");
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error("not an integer: \"" + tok + "\"");
    }
    if (used != tok.size()) throw Error("not an integer: \"" + tok + "\"");
    out.push_back(v);
  }
  return out;
}

Monomial parse_factors(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\n");
  if (first != std::string::npos && (s[first] == '[' || s[first] == '{')) {
    try {
      return monomial_from_json(json::parse(s));
    } catch (const json::exception& e) {
      throw Error(std::string("bad factors JSON: ") + e.what());
    }
  }
  std::vector<PluckerIndex> fs;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ';')) fs.push_back(parse_ints(part, ','));
  return Monomial(std::move(fs));
}

std::string factor_string(const Monomial& m) {
  std::string out;
  for (int i = 0; i < m.degree(); ++i) {
    if (i) out += ';';
    for (size_t j = 0; j < m.factor(i).size(); ++j) out += (j ? "," : "") + std::to_string(m.factor(i)[j]);
  }
  return out;
}

std::string condition_string(const RankCondition& c, int n) {
  const int end = (c.start + c.length - 2) % n + 1;
  return "[" + std::to_string(c.start) + "," + std::to_string(end) + "] <= " + std::to_string(c.bound);
}

std::string perm_string(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) out += (i > 1 ? " " : "") + std::to_string(p(i));
  return out;
}

bool has_basic(const Options& o) { return !o.interval.empty(); }

BasicPositroid basic_from(const Options& o) {
  if (o.n <= 0 || o.k < 0) throw Error("--n and --k are required with --interval");
  if (o.bound < 0) throw Error("--bound is required with --interval");
  const auto iv = parse_ints(o.interval, ',');
  if (iv.size() != 2) throw Error("--interval takes start,length");
  return make_basic(o.n, o.k, RankCondition{iv[0], iv[1], o.bound});
}

BoundedAffinePermutation f_from(const Options& o) {
  if (o.window.empty()) throw Error("--window is required");
  auto w = parse_ints(o.window, ',');
  const int n = o.n > 0 ? o.n : static_cast<int>(w.size());
  BoundedAffinePermutation f(n, std::move(w));
  if (o.k >= 0 && f.k() != o.k) throw Error("window has k = " + std::to_string(f.k()) + ", not --k");
  return f;
}

// Either a single basic condition or a window.
BoundedAffinePermutation target_f(const Options& o) {
  if (has_basic(o)) {
    const auto b = basic_from(o);
    return basic_affine(b.condition, b.k, b.n);
  }
  return f_from(o);
}

bool json_out(const Options& o) {
  if (o.format == "json") return true;
  if (o.format == "ascii") return false;
  throw Error("--format must be ascii or json");
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::uint64_t effective_seed(const Options& o) {
  if (const char* env = std::getenv("POSITROIDAL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error("POSITROIDAL_SEED must be a nonnegative integer");
    }
  }
  return o.seed;
}

int cmd_decompose(const Options& o) {
  const auto f = f_from(o);
  const auto cs = essential_conditions(f);
  if (json_out(o)) {
    print_json(json{{"n", f.n()}, {"k", f.k()}, {"conditions", cs}});
  } else {
    for (const auto& c : cs) std::cout << condition_string(c, f.n()) << '\n';
  }
  return 0;
}

int cmd_interval(const Options& o) {
  const auto iv = has_basic(o) ? uv_from_basic(basic_from(o)) : interval_rep(f_from(o));
  if (json_out(o)) {
    print_json(json{{"v", iv.v}, {"u", iv.u}});
  } else {
    std::cout << "v: " << perm_string(iv.v) << "\nu: " << perm_string(iv.u) << '\n';
  }
  return 0;
}

// Marks for a generator's lead: the antidiagonal from the first
// non-wrapping component whose initial ideal contains the lead.
std::vector<std::pair<int, int>> marks_for(const GBGenerator& g, const std::vector<BasicPositroid>& comps) {
  if (g.cls == GeneratorClass::plucker) return {};
  for (const auto& b : comps)
    if (!interval_wraps(b.condition, b.n) && in_initial_ideal_basic(g.lead, b)) return lead_marks(g, b);
  return {};
}

int cmd_gb(const Options& o) {
  std::vector<GBGenerator> gens;
  std::vector<BasicPositroid> comps;
  if (has_basic(o)) {
    const auto b = basic_from(o);
    gens = basic_gb(b);
    comps = {b};
  } else {
    const auto f = f_from(o);
    gens = positroid_gb(f);
    comps = basic_components(f);
  }
  if (!o.full) std::erase_if(gens, [](const GBGenerator& g) { return g.cls == GeneratorClass::plucker; });
  if (json_out(o)) {
    print_json(gens);
    return 0;
  }
  for (size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    if (i) std::cout << '\n';
    std::cout << "generator " << i + 1 << " (" << class_name(g.cls) << "): " << g.lead.to_string() << '\n';
    const auto marks = marks_for(g, comps);
    for (size_t t = 0; t < g.terms.size(); ++t) {
      const auto& term = g.terms[t];
      std::cout << (term.coeff > 0 ? "+" : "") << term.coeff.get_str() << '\n';
      std::cout << render_ascii(term.mono, t == 0 ? marks : std::vector<std::pair<int, int>>{});
    }
  }
  return 0;
}

int cmd_std_monomials(const Options& o) {
  const auto f = target_f(o);
  if (o.d < 0) throw Error("--d must be nonnegative");
  const auto ms = standard_monomials(f, o.d);
  if (json_out(o)) {
    print_json(ms);
  } else {
    for (const auto& m : ms) std::cout << factor_string(m) << '\n';
  }
  return 0;
}

int cmd_in_ideal(const Options& o) {
  const auto m = parse_factors(o.factors);
  std::vector<BasicPositroid> comps;
  int n = 0;
  if (has_basic(o)) {
    comps = {basic_from(o)};
    n = o.n;
  } else {
    const auto f = f_from(o);
    comps = basic_components(f);
    n = f.n();
  }
  for (const auto& a : m.factors()) check_plucker_index(a, n);
  json out{{"in_ideal", false}};
  std::string text = "false\n";
  if (auto pair = to_tableau(m); std::holds_alternative<IncomparablePair>(pair)) {
    const auto [i, j] = std::get<IncomparablePair>(pair);
    out = json{{"in_ideal", true}, {"incomparable", {i + 1, j + 1}}};
    text = "true\nincomparable factors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + '\n';
  } else {
    for (const auto& b : comps) {
      const auto mem = membership_basic(m, b);
      if (!mem.in_ideal) continue;
      out = json{{"in_ideal", true}, {"condition", b.condition}, {"via_dual", mem.via_dual}};
      text = "true\ncondition " + condition_string(b.condition, n) + '\n';
      if (mem.antidiagonal) {
        out["antidiagonal"] = *mem.antidiagonal;
        const auto& w = *mem.antidiagonal;
        text += std::string(mem.via_dual ? "antidiagonal in the complement: " : "antidiagonal: ");
        for (size_t t = 0; t < w.values.size(); ++t)
          text += (t ? " " : "") + std::to_string(w.values[t]) + "@(" + std::to_string(w.cells[t].first) +
                  "," + std::to_string(w.cells[t].second) + ")";
        text += '\n';
        if (!mem.via_dual) text += render_ascii(m, w.cells);
      }
      break;
    }
  }
  if (json_out(o))
    print_json(out);
  else
    std::cout << text;
  return 0;
}

int cmd_promote(const Options& o) {
  if (o.n <= 0) throw Error("--n is required");
  const auto m = parse_factors(o.factors);
  for (const auto& a : m.factors()) check_plucker_index(a, o.n);
  const auto p = o.inverse ? promote_inverse(m, o.n) : promote(m, o.n);
  if (json_out(o)) {
    json out{{"result", p}};
    if (o.trace && !o.inverse) out["trace"] = promote_trace(m, o.n);
    print_json(out);
    return 0;
  }
  if (o.trace && !o.inverse) {
    for (const auto& grid : promote_trace(m, o.n)) std::cout << render_grid(grid) << '\n';
  }
  std::cout << factor_string(p) << '\n';
  return 0;
}

int cmd_facets(const Options& o) {
  const auto facets = sr_facets(target_f(o));
  if (json_out(o)) {
    json out = json::array();
    for (const auto& F : facets) out.push_back({{"dimension", static_cast<int>(F.size()) - 1}, {"vertices", F}});
    print_json(out);
  } else {
    for (const auto& F : facets)
      std::cout << "dim " << F.size() - 1 << ": " << factor_string(Monomial(F)) << '\n';
  }
  return 0;
}

int cmd_dualize(const Options& o) {
  const auto d = dualize(basic_from(o));
  if (json_out(o)) {
    print_json(json{{"n", d.n}, {"k", d.k}, {"condition", d.condition}});
  } else {
    std::cout << "Gr(" << d.k << "," << d.n << ") " << condition_string(d.condition, d.n) << '\n';
  }
  return 0;
}

int cmd_sample(const Options& o) {
  const auto m = sample_basic_point(basic_from(o), effective_seed(o));
  if (json_out(o)) {
    print_json(json(m));
  } else {
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) std::cout << (j ? " " : "") << m.at(i, j).get_str();
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_verify(const Options& o) {
  if (o.max_n < 2 || o.max_n > 7) throw Error("--max-n must lie in [2,7]");
  const bool all = o.suite == "all";
  if (!all && o.suite != "chain" && o.suite != "vanishing" && o.suite != "promotion")
    throw Error("--suite must be chain, vanishing, promotion or all");
  bool ok = true;
  json report = json::object();
  auto run = [&](const std::string& name, const oracle::SuiteResult& r) {
    ok = ok && r.ok();
    report[name] = {{"checked", r.checked}, {"failures", r.failures}};
    if (!json_out(o)) {
      std::cout << name << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.checked << " checks)\n";
      for (const auto& f : r.failures) std::cout << "  " << f << '\n';
    }
  };
  if (all || o.suite == "chain") run("chain", oracle::chain_equivalence_suite(2, std::min(o.max_n, 6), o.max_d));
  if (all || o.suite == "vanishing")
    run("vanishing", oracle::vanishing_suite(2, o.max_n, 4, o.samples, effective_seed(o)));
  if (all || o.suite == "promotion") run("promotion", oracle::promotion_suite(2, o.max_n, o.max_d));
  if (json_out(o)) print_json(report);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positroid varieties: rank conditions, standard monomials, Gröbner bases, promotion"};
  app.require_subcommand(1);
  Options o;

  auto add_f = [&](CLI::App* c) {
    c->add_option("--window", o.window, "bounded affine permutation window, e.g. 5,2,4,7,9,12");
  };
  auto add_basic = [&](CLI::App* c) {
    c->add_option("--interval", o.interval, "cyclic interval as start,length");
    c->add_option("--bound", o.bound, "rank bound r");
  };
  auto add_nk = [&](CLI::App* c) {
    c->add_option("--n", o.n, "ambient n");
    c->add_option("--k", o.k, "ambient k");
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));
  };

  auto* decompose = app.add_subcommand("decompose", "essential rank conditions of f");
  add_nk(decompose), add_f(decompose), add_format(decompose);
  auto* interval = app.add_subcommand("interval", "Grassmann interval (v,u) of f or of a basic condition");
  add_nk(interval), add_f(interval), add_basic(interval), add_format(interval);
  auto* gb = app.add_subcommand("gb", "Gröbner basis of a basic condition or of f");
  add_nk(gb), add_f(gb), add_basic(gb), add_format(gb);
  gb->add_flag("--full", o.full, "include the Plücker relations");
  auto* stdm = app.add_subcommand("std-monomials", "degree-d standard monomials");
  add_nk(stdm), add_f(stdm), add_basic(stdm), add_format(stdm);
  stdm->add_option("--d", o.d, "degree");
  auto* inid = app.add_subcommand("in-ideal", "initial-ideal membership with a witness");
  add_nk(inid), add_f(inid), add_basic(inid), add_format(inid);
  inid->add_option("--factors", o.factors, "monomial as 1,2,4;2,3,5 or JSON")->required();
  auto* prom = app.add_subcommand("promote", "promotion of a rectangular semistandard tableau");
  add_nk(prom), add_format(prom);
  prom->add_option("--factors", o.factors, "monomial as 1,2,4;2,3,5 or JSON")->required();
  prom->add_flag("--trace", o.trace, "print every intermediate tableau");
  prom->add_flag("--inverse", o.inverse, "apply inverse promotion");
  auto* facets = app.add_subcommand("facets", "facets of the Stanley-Reisner complex");
  add_nk(facets), add_f(facets), add_basic(facets), add_format(facets);
  auto* dual = app.add_subcommand("dualize", "dual basic condition in Gr(n-k,n)");
  add_nk(dual), add_basic(dual), add_format(dual);
  auto* verify = app.add_subcommand("verify", "run the oracle suites");
  add_format(verify);
  verify->add_option("--suite", o.suite, "chain, vanishing, promotion or all");
  verify->add_option("--max-n", o.max_n, "largest n (default 6)");
  verify->add_option("--d", o.max_d, "largest degree for chain and promotion suites (default 3)");
  verify->add_option("--samples", o.samples, "samples per condition for the vanishing suite");
  verify->add_option("--seed", o.seed, "random seed");
  auto* sample = app.add_subcommand("sample", "seeded point of a basic positroid variety");
  add_nk(sample), add_basic(sample), add_format(sample);
  sample->add_option("--seed", o.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*decompose) return cmd_decompose(o);
    if (*interval) return cmd_interval(o);
    if (*gb) return cmd_gb(o);
    if (*stdm) return cmd_std_monomials(o);
    if (*inid) return cmd_in_ideal(o);
    if (*prom) return cmd_promote(o);
    if (*facets) return cmd_facets(o);
    if (*dual) return cmd_dualize(o);
    if (*verify) return cmd_verify(o);
    if (*sample) return cmd_sample(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
