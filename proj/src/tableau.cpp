#include "positroid/tableau.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "positroid/error.hpp"

namespace positroid {

void check_plucker_index(const PluckerIndex& a, int n) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1 || a[i] > n) throw Error("Plücker index entry outside [1,n]");
    if (i && a[i - 1] >= a[i]) throw Error("Plücker index must be strictly increasing");
  }
}

std::vector<PluckerIndex> plucker_indices(int n, int k) {
  std::vector<PluckerIndex> out;
  if (k < 0 || k > n) return out;
  PluckerIndex cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool plucker_leq(const PluckerIndex& a, const PluckerIndex& b) {
  if (a.size() != b.size()) throw Error("plucker_leq: shape mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool plucker_comparable(const PluckerIndex& a, const PluckerIndex& b) {
  return plucker_leq(a, b) || plucker_leq(b, a);
}

Monomial::Monomial(std::vector<PluckerIndex> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (f.size() != factors_.front().size()) throw Error("monomial factors differ in size");
    for (size_t i = 1; i < f.size(); ++i)
      if (f[i - 1] >= f[i]) throw Error("monomial factor is not strictly increasing");
  }
  std::sort(factors_.begin(), factors_.end());
}

bool Monomial::is_standard() const {
  // Lex order refines the poset, so adjacent comparability suffices.
  for (size_t i = 0; i + 1 < factors_.size(); ++i)
    if (!plucker_leq(factors_[i], factors_[i + 1])) return false;
  return true;
}

Monomial Monomial::without(int i) const {
  Monomial m = *this;
  m.factors_.erase(m.factors_.begin() + i);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  return std::includes(other.factors_.begin(), other.factors_.end(), factors_.begin(),
                       factors_.end());
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  for (const auto& f : factors_) {
    os << '[';
    for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << ']';
  }
  if (factors_.empty()) os << "1";
  return os.str();
}

std::variant<Tableau, IncomparablePair> to_tableau(const Monomial& m) {
  const int d = m.degree();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (!plucker_comparable(m.factor(i), m.factor(j))) return IncomparablePair{i, j};
  Tableau rows(m.k(), std::vector<int>(d));
  for (int j = 0; j < d; ++j)
    for (int p = 0; p < m.k(); ++p) rows[p][j] = m.factor(j)[p];
  return rows;
}

std::strong_ordering term_cmp(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  for (int i = a.degree() - 1; i >= 0; --i) {
    if (fa[i] == fb[i]) continue;
    return fa[i] > fb[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

SignedSum normalize(std::vector<Term> terms) {
  std::map<Monomial, mpz_class, TermLess> acc;
  for (auto& t : terms) acc[t.mono] += t.coeff;
  SignedSum out;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) out.push_back({it->second, it->first});
  return out;
}

int sort_column(std::vector<int>& column) {
  int sign = 1;
  // Insertion sort so the sign falls out of the swap count.
  for (size_t i = 1; i < column.size(); ++i) {
    for (size_t j = i; j > 0 && column[j - 1] >= column[j]; --j) {
      if (column[j - 1] == column[j]) return 0;
      std::swap(column[j - 1], column[j]);
      sign = -sign;
    }
  }
  return sign;
}

std::vector<Monomial> enumerate_B(int n, int k, int d) {
  const auto idx = plucker_indices(n, k);
  const int N = static_cast<int>(idx.size());
  std::vector<std::vector<int>> up(N);
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j)
      if (plucker_leq(idx[i], idx[j])) up[i].push_back(j);

  std::vector<Monomial> out;
  if (d == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> chain;
  auto extend = [&](auto&& self, int last) -> void {
    if (static_cast<int>(chain.size()) == d) {
      std::vector<PluckerIndex> fs;
      fs.reserve(d);
      for (int c : chain) fs.push_back(idx[c]);
      out.emplace_back(std::move(fs));
      return;
    }
    for (int j : up[last]) {
      chain.push_back(j);
      self(self, j);
      chain.pop_back();
    }
  };
  for (int j = 0; j < N; ++j) {
    chain.assign(1, j);
    extend(extend, j);
  }
  std::sort(out.begin(), out.end(), TermLess());
  return out;
}

namespace {

// First adjacent pair (i, i+1) of lex-sorted factors that is incomparable.
std::optional<int> first_violation(const Monomial& m) {
  for (int i = 0; i + 1 < m.degree(); ++i)
    if (!plucker_leq(m.factor(i), m.factor(i + 1))) return i;
  return std::nullopt;
}

// Subsets of {0..n-1} of size s, as index lists, lexicographic.
std::vector<std::vector<int>> index_subsets(int n, int s) {
  std::vector<std::vector<int>> out;
  for (auto& sub : plucker_indices(n, s)) {
    for (int& x : sub) --x;
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace

SignedSum straighten(const std::vector<std::vector<int>>& factors) {
  int sign = 1;
  std::vector<PluckerIndex> cols;
  cols.reserve(factors.size());
  for (auto col : factors) {
    const int s = sort_column(col);
    if (s == 0) return {};
    sign *= s;
    cols.push_back(std::move(col));
  }

  std::map<Monomial, mpz_class, TermLess> work;
  work[Monomial(std::move(cols))] = sign;
  std::vector<Term> done;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Monomial m = top->first;
    const mpz_class coeff = top->second;
    work.erase(top);
    if (coeff == 0) continue;
    const auto bad = first_violation(m);
    if (!bad) {
      done.push_back({coeff, m});
      continue;
    }
    const int i = *bad;
    const PluckerIndex& c = m.factor(i);
    const PluckerIndex& d = m.factor(i + 1);
    const int k = static_cast<int>(c.size());
    int p = 0;
    while (c[p] <= d[p]) ++p;

    std::vector<PluckerIndex> rest;
    for (int j = 0; j < m.degree(); ++j)
      if (j != i && j != i + 1) rest.push_back(m.factor(j));

    // Exchange c_p..c_k against every same-size subset of d, positions kept.
    for (const auto& ys : index_subsets(k, k - p)) {
      std::vector<int> c2(c.begin(), c.begin() + p);
      std::vector<int> d2 = d;
      for (int t = 0; t < k - p; ++t) {
        c2.push_back(d[ys[t]]);
        d2[ys[t]] = c[p + t];
      }
      const int s1 = sort_column(c2);
      const int s2 = sort_column(d2);
      if (s1 == 0 || s2 == 0) continue;
      std::vector<PluckerIndex> fs = rest;
      fs.push_back(std::move(c2));
      fs.push_back(std::move(d2));
      work[Monomial(std::move(fs))] += coeff * (s1 * s2);
    }
  }
  return normalize(std::move(done));
}

SignedSum straighten(const Monomial& m) { return straighten(m.factors()); }

std::string render_ascii(const Monomial& m, const std::vector<std::pair<int, int>>& marked) {
  const int d = m.degree();
  const int k = m.k();
  auto is_marked = [&](int row, int col) {
    return std::find(marked.begin(), marked.end(), std::make_pair(row, col)) != marked.end();
  };
  std::vector<size_t> width(d, 0);
  for (int j = 0; j < d; ++j)
    for (int p = 0; p < k; ++p) {
      size_t w = std::to_string(m.factor(j)[p]).size() + (is_marked(p + 1, j + 1) ? 1 : 0);
      width[j] = std::max(width[j], w);
    }
  std::ostringstream os;
  for (int p = 0; p < k; ++p) {
    for (int j = 0; j < d; ++j) {
      std::string cell = std::to_string(m.factor(j)[p]);
      if (is_marked(p + 1, j + 1)) cell += '*';
      if (j) os << ' ';
      // Left-align so that marks stay attached to their number.
      os << cell;
      if (j + 1 < d) os << std::string(width[j] - cell.size(), ' ');
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace positroid
