#include "positroid/positroid.hpp"

#include <algorithm>
#include <numeric>

#include "positroid/error.hpp"

namespace positroid {

namespace {

std::vector<int> range_set(int lo, int hi) {
  std::vector<int> s;
  for (int x = lo; x <= hi; ++x) s.push_back(x);
  return s;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

BasicPositroid make_basic(int n, int k, const RankCondition& c) {
  check_basic_condition(c, k, n);
  return BasicPositroid{n, k, c};
}

std::vector<BasicPositroid> enumerate_basic(int n, int k) {
  std::vector<BasicPositroid> out;
  for (int start = 1; start <= n; ++start)
    for (int m = 1; m < n; ++m)
      for (int r = 0; r < std::min(m, k); ++r)
        if (n - m + r >= k) out.push_back(BasicPositroid{n, k, {start, m, r}});
  return out;
}

GrassmannInterval uv_from_basic(const BasicPositroid& b) {
  check_basic_condition(b.condition, b.k, b.n);
  const int n = b.n, k = b.k, m = b.condition.length, r = b.condition.bound;
  const int a = b.condition.start - 1;
  std::vector<int> uset, vset;
  if (a < n - m - (k - r)) {
    uset = range_set(n - k + 1, n);
    vset = set_minus(range_set(1, k + m - r + a), range_set(r + a + 1, m + a));
  } else if (a <= n - m) {
    uset = set_union(range_set(n - m - (k - r) + 1, a), range_set(m - r + a + 1, n));
    vset = set_minus(range_set(1, n), range_set(r + a + 1, m + a));
  } else if (a <= n - r) {
    uset = set_union(range_set(a - (k - r) + 1, a), range_set(n - r + 1, n));
    vset = set_minus(range_set(1, a - (n - m) + k - r), range_set(1, a - (n - m)));
  } else {
    uset = range_set(n - k + 1, n);
    vset = set_minus(range_set(1, a - (n - m) + k - r), range_set(a - n + r + 1, a - n + m));
  }
  return {grassmannian_perm(vset, n), grassmannian_perm(uset, n)};
}

BasicPositroid dualize(const BasicPositroid& b) {
  check_basic_condition(b.condition, b.k, b.n);
  const int n = b.n, m = b.condition.length;
  const int start = (b.condition.start - 1 + m) % n + 1;
  return BasicPositroid{n, n - b.k, {start, n - m, n - b.k - m + b.condition.bound}};
}

PluckerIndex complement_index(const PluckerIndex& a, int n) {
  PluckerIndex out;
  for (int x = 1, i = 0; x <= n; ++x) {
    if (i < static_cast<int>(a.size()) && a[i] == x)
      ++i;
    else
      out.push_back(x);
  }
  return out;
}

Monomial complement_monomial(const Monomial& m, int n) {
  std::vector<PluckerIndex> fs;
  fs.reserve(m.degree());
  for (const auto& f : m.factors()) fs.push_back(complement_index(f, n));
  return Monomial(std::move(fs));
}

AntidiagonalWitness longest_antidiagonal(const Monomial& m, int lo, int hi) {
  if (!m.is_standard()) throw Error("longest_antidiagonal: monomial is not standard");
  const int k = m.k(), d = m.degree();
  auto T = [&](int row, int col) { return m.factor(col)[row]; };
  auto inside = [&](int x) { return lo <= x && x <= hi; };
  // best[row][col]: longest antidiagonal whose largest entry sits at (row, col).
  std::vector<std::vector<int>> best(k, std::vector<int>(d, 0));
  std::vector<std::vector<std::pair<int, int>>> parent(k, std::vector<std::pair<int, int>>(d, {-1, -1}));
  int best_len = 0;
  std::pair<int, int> best_end{-1, -1};
  for (int row = 0; row < k; ++row) {
    for (int col = 0; col < d; ++col) {
      const int x = T(row, col);
      if (!inside(x)) continue;
      int len = 1;
      for (int r2 = 0; r2 < row; ++r2)
        for (int c2 = col; c2 < d; ++c2) {
          const int y = T(r2, c2);
          if (!inside(y) || y >= x || best[r2][c2] + 1 <= len) continue;
          len = best[r2][c2] + 1;
          parent[row][col] = {r2, c2};
        }
      best[row][col] = len;
      if (len > best_len) {
        best_len = len;
        best_end = {row, col};
      }
    }
  }
  AntidiagonalWitness w;
  w.length = best_len;
  for (auto cell = best_end; cell.first >= 0; cell = parent[cell.first][cell.second]) {
    w.cells.push_back({cell.first + 1, cell.second + 1});
    w.values.push_back(T(cell.first, cell.second));
  }
  std::reverse(w.cells.begin(), w.cells.end());
  std::reverse(w.values.begin(), w.values.end());
  return w;
}

Membership membership_basic(const Monomial& m, const BasicPositroid& b) {
  Membership res;
  if (auto t = to_tableau(m); std::holds_alternative<IncomparablePair>(t)) {
    res.in_ideal = true;
    res.incomparable = std::get<IncomparablePair>(t);
    return res;
  }
  if (m.degree() == 0) return res;
  if (m.k() != b.k) throw Error("monomial does not live in Gr(k,n)");
  if (interval_wraps(b.condition, b.n)) {
    const BasicPositroid dual = dualize(b);
    const Monomial mc = complement_monomial(m, b.n);
    const auto& c = dual.condition;
    res.via_dual = true;
    res.antidiagonal = longest_antidiagonal(mc, c.start, c.start + c.length - 1);
    res.in_ideal = res.antidiagonal->length >= c.bound + 1;
    return res;
  }
  const auto& c = b.condition;
  res.antidiagonal = longest_antidiagonal(m, c.start, c.start + c.length - 1);
  res.in_ideal = res.antidiagonal->length >= c.bound + 1;
  return res;
}

bool in_initial_ideal_basic(const Monomial& m, const BasicPositroid& b) {
  return membership_basic(m, b).in_ideal;
}

std::vector<BasicPositroid> basic_components(const BoundedAffinePermutation& f) {
  std::vector<BasicPositroid> out;
  for (const auto& c : essential_conditions(f)) out.push_back(make_basic(f.n(), f.k(), c));
  return out;
}

bool in_initial_ideal(const Monomial& m, const BoundedAffinePermutation& f) {
  if (!m.is_standard()) return true;
  for (const auto& b : basic_components(f))
    if (in_initial_ideal_basic(m, b)) return true;
  return false;
}

std::vector<Monomial> standard_monomials(const BoundedAffinePermutation& f, int d) {
  const auto comps = basic_components(f);
  std::vector<Monomial> out;
  for (auto& m : enumerate_B(f.n(), f.k(), d)) {
    bool keep = true;
    for (const auto& b : comps)
      if (in_initial_ideal_basic(m, b)) {
        keep = false;
        break;
      }
    if (keep) out.push_back(std::move(m));
  }
  return out;
}

namespace {

bool chain_valid(const std::vector<Permutation>& chain, const Permutation& v, const Permutation& u) {
  Permutation prev = v;
  for (const auto& w : chain) {
    if (!bruhat_leq(prev, w)) return false;
    prev = w;
  }
  return bruhat_leq(prev, u);
}

// b-set recursion: b^(d+1) = u([p]); each b^(i) merges the i-th factor into
// b^(i+1), replacing the first entry that is not below the next factor entry.
std::optional<std::vector<Permutation>> chain_by_bsets(const Monomial& m, const Permutation& v,
                                                       const Permutation& u) {
  const auto des = descents(v);
  const int k = m.k(), d = m.degree(), n = v.size();
  if (des.size() != 1 || des.front() < k) return std::nullopt;
  const int p = des.front();
  std::vector<int> b = u.prefix_set(p);
  std::vector<Permutation> chain(d);
  for (int i = d - 1; i >= 0; --i) {
    const auto& a = m.factor(i);
    std::vector<int> nb(p);
    int q = 0;
    for (int j = 0; j < p; ++j) {
      if (q >= k || b[j] < a[q]) {
        nb[j] = b[j];
      } else {
        nb[j] = a[q++];
      }
    }
    if (q < k) return std::nullopt;
    std::vector<int> word(a.begin(), a.end());
    const auto mid = set_minus(nb, a);
    word.insert(word.end(), mid.begin(), mid.end());
    const auto rest = set_minus(range_set(1, n), nb);
    word.insert(word.end(), rest.begin(), rest.end());
    chain[i] = Permutation(std::move(word));
    b = std::move(nb);
  }
  if (!chain_valid(chain, v, u)) return std::nullopt;
  return chain;
}

std::optional<std::vector<Permutation>> chain_greedy(const Monomial& m, const Permutation& v,
                                                     const Permutation& u) {
  std::vector<Permutation> chain;
  Permutation prev = v;
  for (const auto& a : m.factors()) {
    auto w = min_lift(prev, a);
    if (!w) return std::nullopt;
    prev = *w;
    chain.push_back(prev);
  }
  if (!bruhat_leq(prev, u)) return std::nullopt;
  return chain;
}

}  // namespace

std::optional<std::vector<Permutation>> chain_lift(const Monomial& m, const Permutation& v,
                                                   const Permutation& u) {
  if (v.size() != u.size()) throw Error("chain_lift: size mismatch");
  if (!m.is_standard()) throw Error("chain_lift: monomial is not standard");
  if (!bruhat_leq(v, u)) throw Error("chain_lift: need v <= u");
  if (m.degree() == 0) return std::vector<Permutation>{};
  const int k = m.k();
  if (!is_grassmannian(u, k)) throw Error("chain_lift: u must be k-Grassmannian");
  for (const auto& a : m.factors()) check_plucker_index(a, u.size());
  if (auto c = chain_by_bsets(m, v, u)) return c;
  return chain_greedy(m, v, u);
}

std::pair<Permutation, Permutation> minimal_positroid(const Monomial& m, int n) {
  if (!m.is_standard()) throw Error("minimal_positroid: monomial is not standard");
  if (m.degree() == 0) throw Error("minimal_positroid: empty monomial");
  for (const auto& a : m.factors()) check_plucker_index(a, n);
  const Permutation v1 = anti_grassmannian_perm(m.factor(0), n);
  Permutation cur = v1;
  for (int i = 1; i < m.degree(); ++i) {
    auto w = min_lift(cur, m.factor(i));
    if (!w) throw Error("minimal_positroid: internal error, lift failed for a standard monomial");
    cur = *w;
  }
  return {v1, cur};
}

std::vector<std::vector<PluckerIndex>> sr_facets(const BoundedAffinePermutation& f) {
  const auto comps = basic_components(f);
  auto face_ok = [&](const std::vector<PluckerIndex>& face) {
    const Monomial m(face);
    if (!m.is_standard()) return false;
    for (const auto& b : comps)
      if (in_initial_ideal_basic(m, b)) return false;
    return true;
  };
  std::vector<PluckerIndex> verts;
  for (auto& a : plucker_indices(f.n(), f.k()))
    if (face_ok({a})) verts.push_back(std::move(a));
  const int N = static_cast<int>(verts.size());

  std::vector<std::vector<PluckerIndex>> facets;
  std::vector<int> chosen;
  auto as_face = [&](const std::vector<int>& ids) {
    std::vector<PluckerIndex> face;
    for (int i : ids) face.push_back(verts[i]);
    return face;
  };
  auto maximal = [&](const std::vector<int>& ids) {
    for (int x = 0; x < N; ++x) {
      if (std::find(ids.begin(), ids.end(), x) != ids.end()) continue;
      std::vector<int> bigger = ids;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), x), x);
      if (face_ok(as_face(bigger))) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self) -> void {
    bool extended = false;
    const int last = chosen.back();
    for (int x = last + 1; x < N; ++x) {
      if (!plucker_leq(verts[last], verts[x])) continue;
      chosen.push_back(x);
      if (face_ok(as_face(chosen))) {
        extended = true;
        self(self);
      }
      chosen.pop_back();
    }
    if (!extended && maximal(chosen)) facets.push_back(as_face(chosen));
  };
  for (int s = 0; s < N; ++s) {
    chosen.assign(1, s);
    dfs(dfs);
  }
  std::sort(facets.begin(), facets.end());
  return facets;
}

}  // namespace positroid
