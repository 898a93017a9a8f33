#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "positroid/grobner.hpp"
#include "positroid/positroid.hpp"
#include "positroid/promotion.hpp"

namespace oracle {

using namespace positroid;

int inversions(const std::vector<int>& w) {
  int c = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

BruhatOracle::BruhatOracle(int n) : n_(n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do perms_.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  const int N = size();
  const size_t words = (N + 63) / 64;
  up_.assign(N, std::vector<std::uint64_t>(words, 0));
  std::vector<int> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> len(N);
  for (int a = 0; a < N; ++a) len[a] = inversions(perms_[a].word());
  std::sort(order.begin(), order.end(), [&](int a, int b) { return len[a] > len[b]; });
  for (int a : order) {
    up_[a][a >> 6] |= std::uint64_t(1) << (a & 63);
    const auto& wa = perms_[a].word();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (wa[i] > wa[j]) continue;
        auto wb = wa;
        std::swap(wb[i], wb[j]);
        const int b = id(Permutation(wb));
        for (size_t t = 0; t < words; ++t) up_[a][t] |= up_[b][t];
      }
  }
}

int BruhatOracle::id(const Permutation& w) const {
  // Lexicographic rank via the Lehmer code.
  const auto& x = w.word();
  int r = 0;
  for (int i = 0; i < n_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n_; ++j)
      if (x[j] < x[i]) ++smaller;
    r = r * (n_ - i) + smaller;
  }
  return r;
}

bool BruhatOracle::leq(int a, int b) const { return up_has(a, b); }

std::vector<int> BruhatOracle::coset(const std::vector<int>& a) const {
  const int k = static_cast<int>(a.size());
  std::vector<int> out;
  for (int id = 0; id < size(); ++id)
    if (perms_[id].prefix_set(k) == a) out.push_back(id);
  return out;
}

std::optional<Permutation> BruhatOracle::min_lift(const Permutation& prev, const std::vector<int>& a,
                                                  bool* unique_min) const {
  if (unique_min) *unique_min = true;
  const int p = id(prev);
  std::vector<int> cand;
  for (int w : coset(a))
    if (leq(p, w)) cand.push_back(w);
  if (cand.empty()) return std::nullopt;
  for (int w : cand) {
    bool below_all = true;
    for (int x : cand)
      if (!leq(w, x)) {
        below_all = false;
        break;
      }
    if (below_all) return perms_[w];
  }
  if (unique_min) *unique_min = false;
  return std::nullopt;
}

bool BruhatOracle::chain_exists(const std::vector<std::vector<int>>& factors, const Permutation& v,
                                const Permutation& u) const {
  const int uid = id(u);
  std::vector<std::uint64_t> reach = up_[id(v)];
  std::vector<int> last;
  for (const auto& a : factors) {
    last.clear();
    for (int w : coset(a))
      if ((reach[w >> 6] >> (w & 63)) & 1u) last.push_back(w);
    if (last.empty()) return false;
    std::fill(reach.begin(), reach.end(), 0);
    for (int w : last)
      for (size_t t = 0; t < reach.size(); ++t) reach[t] |= up_[w][t];
  }
  for (int w : last)
    if (leq(w, uid)) return true;
  return false;
}

long long ssyt_count(int n, int k, int d) {
  if (d == 0 || k == 0) return 1;
  std::vector<std::vector<int>> rows;
  std::vector<int> cur(d, 1);
  while (true) {
    rows.push_back(cur);
    int i = d - 1;
    while (i >= 0 && cur[i] == n) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < d; ++j) cur[j] = cur[i];
  }
  const int S = static_cast<int>(rows.size());
  std::vector<long long> count(S, 1);
  for (int level = 1; level < k; ++level) {
    std::vector<long long> next(S, 0);
    for (int t = 0; t < S; ++t)
      for (int s = 0; s < S; ++s) {
        bool strictly_below = true;
        for (int j = 0; j < d; ++j)
          if (rows[t][j] <= rows[s][j]) strictly_below = false;
        if (strictly_below) next[t] += count[s];
      }
    count = next;
  }
  return std::accumulate(count.begin(), count.end(), 0LL);
}

std::vector<std::vector<int>> bounded_windows(int k, int n) {
  std::set<std::vector<int>> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    std::vector<std::vector<int>> choices(n);
    for (int i = 1; i <= n; ++i) {
      const int x = w[i - 1];
      if (x >= i) choices[i - 1].push_back(x);
      if (x + n <= i + n && x + n >= i) choices[i - 1].push_back(x + n);
    }
    std::vector<int> f(n);
    auto rec = [&](auto&& self, int i, int excess) -> void {
      if (i == n) {
        if (excess == k * n) out.insert(f);
        return;
      }
      for (int y : choices[i]) {
        f[i] = y;
        self(self, i + 1, excess + y - (i + 1));
      }
    };
    rec(rec, 0, 0);
  } while (std::next_permutation(w.begin(), w.end()));
  return {out.begin(), out.end()};
}

std::vector<RawEssential> essential_scan(const std::vector<int>& window, int n) {
  auto f = [&](int i) {
    int q = 0;
    while (i - q * n > n) ++q;
    while (i - q * n < 1) --q;
    return window[i - q * n - 1] + q * n;
  };
  auto finv = [&](int j) {
    for (int i = j - n; i <= j; ++i)
      if (f(i) == j) return i;
    return j;  // unreachable for a valid window
  };
  std::vector<RawEssential> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= i + n; ++j) {
      if (!(f(i - 1) > j && finv(j + 1) < i && f(i) <= j && finv(j) >= i)) continue;
      int below = 0;
      for (int t = i; t <= j; ++t)
        if (f(t) <= j) ++below;
      out.push_back({i, j, (j - i + 1) - below});
    }
  return out;
}

namespace {

mpq_class det_cofactor(const std::vector<std::vector<mpq_class>>& a) {
  const size_t s = a.size();
  if (s == 1) return a[0][0];
  mpq_class total = 0;
  for (size_t c = 0; c < s; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<mpq_class>> sub;
    for (size_t r = 1; r < s; ++r) {
      std::vector<mpq_class> row;
      for (size_t j = 0; j < s; ++j)
        if (j != c) row.push_back(a[r][j]);
      sub.push_back(row);
    }
    const mpq_class term = a[0][c] * det_cofactor(sub);
    total += (c % 2 ? -term : term);
  }
  return total;
}

}  // namespace

int rank_by_minors(const RationalMatrix& m) {
  const int R = m.rows(), C = m.cols();
  for (int s = std::min(R, C); s >= 1; --s) {
    for (const auto& rows : plucker_indices(R, s))
      for (const auto& cols : plucker_indices(C, s)) {
        std::vector<std::vector<mpq_class>> a(s, std::vector<mpq_class>(s));
        for (int i = 0; i < s; ++i)
          for (int j = 0; j < s; ++j) a[i][j] = m.at(rows[i] - 1, cols[j] - 1);
        if (det_cofactor(a) != 0) return s;
      }
  }
  return 0;
}

bool is_semistandard(const Tableau& t) {
  for (size_t r = 0; r < t.size(); ++r)
    for (size_t c = 0; c < t[r].size(); ++c) {
      if (c + 1 < t[r].size() && t[r][c] > t[r][c + 1]) return false;
      if (r + 1 < t.size() && t[r][c] >= t[r + 1][c]) return false;
    }
  return true;
}

Tableau bender_knuth(const Tableau& t, int i) {
  Tableau out = t;
  const int k = static_cast<int>(t.size());
  for (int r = 0; r < k; ++r) {
    const int d = static_cast<int>(t[r].size());
    std::vector<int> free_pos;
    int lows = 0, highs = 0;
    for (int c = 0; c < d; ++c) {
      const int x = t[r][c];
      if (x == i && !(r + 1 < k && t[r + 1][c] == i + 1)) {
        free_pos.push_back(c);
        ++lows;
      } else if (x == i + 1 && !(r > 0 && t[r - 1][c] == i)) {
        free_pos.push_back(c);
        ++highs;
      }
    }
    for (size_t p = 0; p < free_pos.size(); ++p)
      out[r][free_pos[p]] = static_cast<int>(p) < highs ? i : i + 1;
  }
  return out;
}

namespace {

Tableau tableau_of(const Monomial& m) { return std::get<Tableau>(to_tableau(m)); }

Monomial monomial_of(const Tableau& t) {
  const int k = static_cast<int>(t.size());
  const int d = static_cast<int>(t.front().size());
  std::vector<PluckerIndex> fs(d, PluckerIndex(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < d; ++c) fs[c][r] = t[r][c];
  return Monomial(fs);
}

}  // namespace

Monomial promote_bk(const Monomial& m, int n) {
  Tableau t = tableau_of(m);
  for (int i = n - 1; i >= 1; --i) t = bender_knuth(t, i);
  return monomial_of(t);
}

Monomial promote_round_robin(const Monomial& m, int n) {
  Tableau t = tableau_of(m);
  const int k = static_cast<int>(t.size());
  const int d = static_cast<int>(t.front().size());
  constexpr int hole = 0;
  struct Pos {
    int r, c;
  };
  std::vector<Pos> holes;
  for (int c = 0; c < d; ++c)
    if (t[k - 1][c] == n) {
      t[k - 1][c] = hole;
      holes.push_back({k - 1, c});
    }
  auto value = [&](int r, int c) {
    if (r < 0 || c < 0 || t[r][c] == hole) return -1;
    return t[r][c];
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& h : holes) {
      const int start_col = h.c;
      while (h.c == start_col) {
        const int above = value(h.r - 1, h.c);
        const int left = value(h.r, h.c - 1);
        if (above < 0 && left < 0) break;
        progress = true;
        if (left <= above) {
          t[h.r][h.c] = above;
          t[h.r - 1][h.c] = hole;
          --h.r;
        } else {
          t[h.r][h.c] = left;
          t[h.r][h.c - 1] = hole;
          --h.c;
        }
      }
    }
  }
  for (auto& row : t)
    for (int& x : row) ++x;
  return monomial_of(t);
}

SuiteResult chain_equivalence_suite(int n_min, int n_max, int d_max) {
  SuiteResult res;
  for (int n = n_min; n <= n_max; ++n) {
    const BruhatOracle bo(n);
    for (int k = 1; k < n; ++k) {
      std::vector<Monomial> monos;
      for (int d = 1; d <= d_max; ++d)
        for (auto& m : enumerate_B(n, k, d)) monos.push_back(std::move(m));
      for (const auto& b : enumerate_basic(n, k)) {
        const auto iv = uv_from_basic(b);
        for (const auto& m : monos) {
          ++res.checked;
          const bool in = in_initial_ideal_basic(m, b);
          const bool lifts = bo.chain_exists(m.factors(), iv.v, iv.u);
          if (in == lifts && res.failures.size() < 20)
            res.failures.push_back("Gr(" + std::to_string(k) + "," + std::to_string(n) + ") S=(" +
                                   std::to_string(b.condition.start) + "," +
                                   std::to_string(b.condition.length) + ") r=" +
                                   std::to_string(b.condition.bound) + " m=" + m.to_string() +
                                   (in ? " in ideal but lifts" : " outside ideal but no chain"));
        }
      }
    }
  }
  return res;
}

SuiteResult vanishing_suite(int n_min, int n_max, int max_r1, int samples, std::uint64_t seed) {
  SuiteResult res;
  auto tag = [](const BasicPositroid& b) {
    return "Gr(" + std::to_string(b.k) + "," + std::to_string(b.n) + ") S=(" +
           std::to_string(b.condition.start) + "," + std::to_string(b.condition.length) +
           ") r=" + std::to_string(b.condition.bound);
  };
  for (int n = n_min; n <= n_max; ++n)
    for (int k = 1; k < n; ++k) {
      std::vector<MinorTable> generic;
      for (int s = 0; s < 8; ++s)
        generic.emplace_back(sample_generic_point(k, n, seed + 1000003ULL * (s + 1)));
      for (const auto& b : enumerate_basic(n, k)) {
        if (b.condition.bound + 1 > max_r1) continue;
        const auto gens = basic_gb(b);
        std::vector<MinorTable> tables;
        for (int s = 0; s < samples; ++s) tables.emplace_back(sample_basic_point(b, seed + s));
        for (const auto& g : gens) {
          for (const auto& t : tables) {
            ++res.checked;
            if (t.evaluate(g.terms) != 0) {
              res.failures.push_back(tag(b) + " generator with lead " + g.lead.to_string() +
                                     " does not vanish");
              break;
            }
          }
          if (g.cls == GeneratorClass::plucker) {
            for (const auto& t : generic)
              if (t.evaluate(g.terms) != 0) {
                res.failures.push_back(tag(b) + " Plücker generator " + g.lead.to_string() +
                                       " is nonzero at a generic point");
                break;
              }
          }
          if (g.cls == GeneratorClass::antidiagonal && g.lead.degree() >= 2) {
            bool nonzero = false;
            for (const auto& t : generic)
              if (t.evaluate(g.terms) != 0) {
                nonzero = true;
                break;
              }
            if (!nonzero)
              res.failures.push_back(tag(b) + " antidiagonal generator " + g.lead.to_string() +
                                     " vanishes at every generic sample");
          }
          if (res.failures.size() >= 20) return res;
        }
      }
    }
  return res;
}

SuiteResult promotion_suite(int n_min, int n_max, int d_max) {
  SuiteResult res;
  for (int n = n_min; n <= n_max; ++n)
    for (int k = 1; k < n; ++k)
      for (const auto& b : enumerate_basic(n, k)) {
        const auto f = basic_affine(b.condition, k, n);
        for (int d = 1; d <= d_max; ++d) {
          const auto rep = verify_promotion_bijection(f, d);
          res.checked += static_cast<long long>(rep.checked);
          if (!rep.ok && res.failures.size() < 20)
            res.failures.push_back("Gr(" + std::to_string(k) + "," + std::to_string(n) +
                                   ") window " + std::to_string(b.condition.start) + "," +
                                   std::to_string(b.condition.length) + "," +
                                   std::to_string(b.condition.bound) + " d=" + std::to_string(d) +
                                   ": " + rep.failure);
        }
      }
  return res;
}

}  // namespace oracle
