#include "positroid/grobner.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "positroid/error.hpp"

namespace positroid {

std::string class_name(GeneratorClass c) {
  switch (c) {
    case GeneratorClass::plucker:
      return "plucker";
    case GeneratorClass::antidiagonal:
      return "antidiagonal";
    case GeneratorClass::linear:
      return "linear";
  }
  return "unknown";
}

namespace {

bool lead_lex_less(const GBGenerator& a, const GBGenerator& b) {
  if (a.lead.degree() != b.lead.degree()) return a.lead.degree() < b.lead.degree();
  return a.lead < b.lead;
}

bool monomial_lex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a < b;
}

int count_in(const PluckerIndex& a, int lo, int hi) {
  return static_cast<int>(std::count_if(a.begin(), a.end(), [&](int x) { return lo <= x && x <= hi; }));
}

GBGenerator make_generator(SignedSum terms, GeneratorClass cls) {
  if (terms.empty()) throw Error("internal error: generator collapsed to zero");
  mpz_class g = 0;
  for (const auto& t : terms) g = gcd(g, t.coeff);
  if (terms.front().coeff < 0) g = -g;
  for (auto& t : terms) t.coeff /= g;
  GBGenerator gen;
  gen.lead = terms.front().mono;
  gen.terms = std::move(terms);
  gen.cls = cls;
  return gen;
}

// A block decomposition of an antidiagonal: block j (j = 0 is the rightmost
// column) occupies rows [start, start+len) of column d-1-j.
struct Datum {
  std::vector<int> c;
  std::vector<int> lambda;
  std::vector<int> start;  // 0-indexed row of each block
};

std::optional<Datum> canonical_datum(const Monomial& m, int lo, int hi, int need) {
  const int k = m.k(), d = m.degree();
  auto T = [&](int row, int col) { return m.factor(col)[row]; };
  std::optional<Datum> best;
  Datum cur;
  auto dfs = [&](auto&& self, int j, int min_row, int prev_value) -> void {
    const int used = std::accumulate(cur.lambda.begin(), cur.lambda.end(), 0);
    if (j == d) {
      if (used != need) return;
      if (!best || std::tie(cur.c, cur.lambda) < std::tie(best->c, best->lambda)) best = cur;
      return;
    }
    const int col = d - 1 - j;
    const int left = d - j - 1;  // blocks still to place after this one
    for (int s = min_row; s < k; ++s) {
      const int x = T(s, col);
      if (x < lo || x > hi || x <= prev_value) continue;
      for (int len = 1; s + len <= k && used + len + left <= need; ++len) {
        const int y = T(s + len - 1, col);
        if (y > hi) break;
        cur.lambda.push_back(len);
        cur.start.push_back(s);
        for (int t = 0; t < len; ++t) cur.c.push_back(T(s + t, col));
        self(self, j + 1, s + len, y);
        cur.c.resize(cur.c.size() - len);
        cur.start.pop_back();
        cur.lambda.pop_back();
      }
    }
  };
  dfs(dfs, 0, 0, 0);
  return best;
}

GBGenerator expand_datum(const Monomial& m, const Datum& D) {
  const int d = m.degree();
  const int L = static_cast<int>(D.c.size());
  std::vector<int> perm(L);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> terms;
  do {
    int sign = 1;
    for (int i = 0; i < L; ++i)
      for (int j = i + 1; j < L; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    std::vector<PluckerIndex> fs;
    int offset = 0;
    for (int j = 0; j < d; ++j) {
      const auto& col = m.factor(d - 1 - j);
      std::vector<int> f = col;
      for (int t = 0; t < D.lambda[j]; ++t) f[D.start[j] + t] = D.c[perm[offset + t]];
      offset += D.lambda[j];
      const int s = sort_column(f);
      sign *= s;
      if (s == 0) break;
      fs.push_back(std::move(f));
    }
    if (sign == 0) continue;
    terms.push_back({mpz_class(sign), Monomial(std::move(fs))});
  } while (std::next_permutation(perm.begin(), perm.end()));
  GBGenerator g = make_generator(normalize(std::move(terms)), GeneratorClass::antidiagonal);
  if (g.lead != m) throw Error("internal error: antidiagonal generator has unexpected lead " + g.lead.to_string());
  return g;
}

bool contains_antidiagonal(const Monomial& m, int lo, int hi, int need) {
  return longest_antidiagonal(m, lo, hi).length >= need;
}

// Standard monomials of degree d >= 2 that contain an antidiagonal of size
// `need` while no factor-deleted divisor does.
std::vector<Monomial> minimal_standard(int n, int k, int lo, int hi, int need, int d) {
  std::vector<Monomial> out;
  for (auto& m : enumerate_B(n, k, d)) {
    bool every_column_meets = true;
    for (const auto& f : m.factors())
      if (count_in(f, lo, hi) == 0) every_column_meets = false;
    if (!every_column_meets) continue;
    if (!contains_antidiagonal(m, lo, hi, need)) continue;
    bool minimal = true;
    for (int i = 0; i < d && minimal; ++i)
      if (contains_antidiagonal(m.without(i), lo, hi, need)) minimal = false;
    if (minimal) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_nonwrapping(const BasicPositroid& b) {
  check_basic_condition(b.condition, b.k, b.n);
  if (interval_wraps(b.condition, b.n)) throw Error("interval wraps; dualize first");
}

}  // namespace

std::vector<GBGenerator> plucker_gb(int k, int n) {
  if (k < 1 || k > n) throw Error("plucker_gb: need 1 <= k <= n");
  const auto idx = plucker_indices(n, k);
  std::vector<GBGenerator> out;
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j) {
      if (plucker_comparable(idx[i], idx[j])) continue;
      const Monomial ab({idx[i], idx[j]});
      std::vector<Term> terms{{mpz_class(1), ab}};
      for (auto& t : straighten(ab)) terms.push_back({-t.coeff, t.mono});
      auto g = make_generator(normalize(std::move(terms)), GeneratorClass::plucker);
      if (g.lead != ab) throw Error("internal error: Plücker generator lead is not a*b");
      out.push_back(std::move(g));
    }
  std::stable_sort(out.begin(), out.end(), lead_lex_less);
  return out;
}

std::vector<GBGenerator> antidiagonal_generators(const BasicPositroid& b) {
  require_nonwrapping(b);
  const int n = b.n, k = b.k, r = b.condition.bound;
  const int lo = b.condition.start, hi = b.condition.start + b.condition.length - 1;
  std::vector<GBGenerator> out;
  for (const auto& a : plucker_indices(n, k)) {
    if (count_in(a, lo, hi) < r + 1) continue;
    const Monomial m({a});
    out.push_back(make_generator({{mpz_class(1), m}}, GeneratorClass::linear));
  }
  for (int d = 2; d <= r + 1; ++d) {
    for (const auto& m : minimal_standard(n, k, lo, hi, r + 1, d)) {
      auto datum = canonical_datum(m, lo, hi, r + 1);
      if (!datum) throw Error("internal error: no block antidiagonal for " + m.to_string());
      out.push_back(expand_datum(m, *datum));
    }
  }
  return out;
}

GBGenerator complement_generator(const GBGenerator& g, int n) {
  std::vector<Term> terms;
  for (const auto& t : g.terms) terms.push_back({t.coeff, complement_monomial(t.mono, n)});
  return make_generator(normalize(std::move(terms)), g.cls);
}

std::vector<GBGenerator> basic_gb(const BasicPositroid& b) {
  check_basic_condition(b.condition, b.k, b.n);
  if (interval_wraps(b.condition, b.n)) {
    const BasicPositroid dual = dualize(b);
    std::vector<GBGenerator> out;
    for (const auto& g : basic_gb(dual)) {
      auto h = complement_generator(g, b.n);
      if (h.lead != complement_monomial(g.lead, b.n))
        throw Error("internal error: complement changed the lead term");
      out.push_back(std::move(h));
    }
    return out;
  }
  const int r = b.condition.bound;
  const int lo = b.condition.start, hi = b.condition.start + b.condition.length - 1;
  std::vector<GBGenerator> out;
  for (auto& g : plucker_gb(b.k, b.n)) {
    if (count_in(g.lead.factor(0), lo, hi) > r || count_in(g.lead.factor(1), lo, hi) > r) continue;
    out.push_back(std::move(g));
  }
  for (auto& g : antidiagonal_generators(b)) out.push_back(std::move(g));
  return out;
}

std::vector<GBGenerator> positroid_gb(const BoundedAffinePermutation& f) {
  const auto comps = basic_components(f);
  if (comps.empty()) return plucker_gb(f.k(), f.n());
  std::vector<GBGenerator> all;
  for (const auto& b : comps)
    for (auto& g : basic_gb(b))
      if (std::find(all.begin(), all.end(), g) == all.end()) all.push_back(std::move(g));
  std::vector<GBGenerator> out;
  for (size_t i = 0; i < all.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < all.size() && !redundant; ++j) {
      if (i == j || !all[j].lead.divides(all[i].lead)) continue;
      // Equal leads: keep the first occurrence.
      if (all[j].lead != all[i].lead || j < i) redundant = true;
    }
    if (!redundant) out.push_back(all[i]);
  }
  return out;
}

std::vector<Monomial> initial_min_gens(const BasicPositroid& b, int max_degree) {
  check_basic_condition(b.condition, b.k, b.n);
  if (max_degree < 1) throw Error("initial_min_gens: max_degree must be >= 1");
  if (interval_wraps(b.condition, b.n)) {
    std::vector<Monomial> out;
    for (const auto& m : initial_min_gens(dualize(b), max_degree))
      out.push_back(complement_monomial(m, b.n));
    std::sort(out.begin(), out.end(), monomial_lex_less);
    return out;
  }
  const int n = b.n, k = b.k, r = b.condition.bound;
  const int lo = b.condition.start, hi = b.condition.start + b.condition.length - 1;
  const auto idx = plucker_indices(n, k);
  std::vector<Monomial> out;
  for (const auto& a : idx)
    if (count_in(a, lo, hi) >= r + 1) out.push_back(Monomial({a}));
  if (max_degree >= 2) {
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = i + 1; j < idx.size(); ++j)
        if (!plucker_comparable(idx[i], idx[j]) && count_in(idx[i], lo, hi) <= r &&
            count_in(idx[j], lo, hi) <= r)
          out.push_back(Monomial({idx[i], idx[j]}));
  }
  for (int d = 2; d <= std::min(max_degree, r + 1); ++d)
    for (auto& m : minimal_standard(n, k, lo, hi, r + 1, d)) out.push_back(std::move(m));
  std::sort(out.begin(), out.end(), monomial_lex_less);
  return out;
}

std::vector<Monomial> initial_min_gens(const BoundedAffinePermutation& f, int max_degree) {
  if (max_degree < 1) throw Error("initial_min_gens: max_degree must be >= 1");
  std::vector<Monomial> cand;
  const auto idx = plucker_indices(f.n(), f.k());
  if (max_degree >= 2)
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = i + 1; j < idx.size(); ++j)
        if (!plucker_comparable(idx[i], idx[j])) cand.push_back(Monomial({idx[i], idx[j]}));
  for (const auto& b : basic_components(f))
    for (auto& m : initial_min_gens(b, max_degree)) cand.push_back(std::move(m));
  std::sort(cand.begin(), cand.end(), monomial_lex_less);
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<Monomial> out;
  for (const auto& m : cand) {
    bool minimal = true;
    for (const auto& o : cand)
      if (o != m && o.divides(m)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m);
  }
  return out;
}

std::vector<std::pair<int, int>> lead_marks(const GBGenerator& g, const BasicPositroid& b) {
  if (g.cls == GeneratorClass::plucker || interval_wraps(b.condition, b.n)) return {};
  const int lo = b.condition.start, hi = b.condition.start + b.condition.length - 1;
  auto w = longest_antidiagonal(g.lead, lo, hi);
  if (w.length > b.condition.bound + 1) {
    w.cells.resize(b.condition.bound + 1);
  }
  return w.cells;
}

}  // namespace positroid
