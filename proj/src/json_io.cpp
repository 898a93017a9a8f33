#include "positroid/json_io.hpp"

#include "positroid/error.hpp"

namespace positroid {

void to_json(json& j, const Permutation& p) { j = p.word(); }

void to_json(json& j, const BoundedAffinePermutation& f) {
  j = json{{"n", f.n()}, {"k", f.k()}, {"window", f.window()}};
}

void to_json(json& j, const RankCondition& c) {
  j = json{{"start", c.start}, {"length", c.length}, {"bound", c.bound}};
}

void to_json(json& j, const Monomial& m) { j = json{{"factors", m.factors()}}; }

void to_json(json& j, const Term& t) {
  j = json{{"coeff", t.coeff.fits_slong_p() ? json(t.coeff.get_si()) : json(t.coeff.get_str())},
           {"factors", t.mono.factors()}};
}

void to_json(json& j, const GBGenerator& g) {
  j = json{{"class", class_name(g.cls)}, {"lead", g.lead}, {"terms", g.terms}};
}

void to_json(json& j, const AntidiagonalWitness& w) {
  json cells = json::array();
  for (const auto& [r, c] : w.cells) cells.push_back({r, c});
  j = json{{"length", w.length}, {"cells", cells}, {"values", w.values}};
}

void to_json(json& j, const RationalMatrix& m) {
  j = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      const mpq_class& x = m.at(i, c);
      row.push_back(x.get_num().get_str() + "/" + x.get_den().get_str());
    }
    j.push_back(row);
  }
}

namespace {

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + " must be a JSON array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(std::string(what) + " must contain integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Permutation permutation_from_json(const json& j) { return Permutation(int_list(j, "permutation")); }

BoundedAffinePermutation bounded_from_json(const json& j) {
  if (!j.is_object() || !j.contains("window")) throw Error("expected {\"n\":..,\"window\":[..]}");
  auto w = int_list(j.at("window"), "window");
  const int n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(w.size());
  BoundedAffinePermutation f(n, std::move(w));
  if (j.contains("k") && j.at("k").get<int>() != f.k()) throw Error("window does not have the stated k");
  return f;
}

RankCondition condition_from_json(const json& j) {
  if (!j.is_object()) throw Error("expected {\"start\":..,\"length\":..,\"bound\":..}");
  return RankCondition{j.at("start").get<int>(), j.at("length").get<int>(), j.at("bound").get<int>()};
}

Monomial monomial_from_json(const json& j) {
  const json& fs = j.is_object() ? j.at("factors") : j;
  if (!fs.is_array()) throw Error("expected {\"factors\":[[..],..]}");
  std::vector<PluckerIndex> factors;
  for (const auto& f : fs) factors.push_back(int_list(f, "factor"));
  return Monomial(std::move(factors));
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error("matrix must be an array of rows");
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& row : j) {
    std::vector<mpq_class> r;
    for (const auto& x : row) {
      mpq_class q;
      if (x.is_string()) {
        if (q.set_str(x.get<std::string>(), 10) != 0) throw Error("bad rational entry");
      } else if (x.is_number_integer()) {
        q = x.get<long>();
      } else {
        throw Error("matrix entries must be \"p/q\" strings or integers");
      }
      q.canonicalize();
      r.push_back(q);
    }
    rows.push_back(std::move(r));
  }
  return RationalMatrix(rows);
}

}  // namespace positroid
