#include "positroid/promotion.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <sstream>

#include "positroid/error.hpp"
#include "positroid/positroid.hpp"

namespace positroid {

namespace {

constexpr int kHole = 0;

Tableau grid_of(const Monomial& m, int n) {
  auto t = to_tableau(m);
  if (!std::holds_alternative<Tableau>(t)) throw Error("promotion: monomial is not standard");
  for (const auto& f : m.factors()) check_plucker_index(f, n);
  return std::get<Tableau>(t);
}

Monomial monomial_of(const Tableau& g) {
  const int k = static_cast<int>(g.size());
  const int d = k ? static_cast<int>(g.front().size()) : 0;
  std::vector<PluckerIndex> fs(d, PluckerIndex(k));
  for (int p = 0; p < k; ++p)
    for (int j = 0; j < d; ++j) fs[j][p] = g[p][j];
  return Monomial(std::move(fs));
}

// Slides the hole at (row, col) towards the top-left until it is stuck.
template <typename OnStep>
void slide_up_left(Tableau& g, int row, int col, OnStep&& on_step) {
  while (true) {
    const int above = row > 0 && g[row - 1][col] != kHole ? g[row - 1][col] : INT_MIN;
    const int left = col > 0 && g[row][col - 1] != kHole ? g[row][col - 1] : INT_MIN;
    if (above == INT_MIN && left == INT_MIN) return;
    if (left <= above) {
      g[row][col] = above;
      g[row - 1][col] = kHole;
      --row;
    } else {
      g[row][col] = left;
      g[row][col - 1] = kHole;
      --col;
    }
    on_step(g);
  }
}

template <typename OnStep>
void slide_down_right(Tableau& g, int row, int col, OnStep&& on_step) {
  const int k = static_cast<int>(g.size());
  const int d = static_cast<int>(g.front().size());
  while (true) {
    const int below = row + 1 < k && g[row + 1][col] != kHole ? g[row + 1][col] : INT_MAX;
    const int right = col + 1 < d && g[row][col + 1] != kHole ? g[row][col + 1] : INT_MAX;
    if (below == INT_MAX && right == INT_MAX) return;
    if (below <= right) {
      g[row][col] = below;
      g[row + 1][col] = kHole;
      ++row;
    } else {
      g[row][col] = right;
      g[row][col + 1] = kHole;
      ++col;
    }
    on_step(g);
  }
}

template <typename OnStep>
Monomial promote_impl(const Monomial& m, int n, OnStep&& on_step) {
  if (m.degree() == 0) return m;
  Tableau g = grid_of(m, n);
  if (g.empty()) return m;  // k = 0
  on_step(g);
  const int k = static_cast<int>(g.size());
  const int d = static_cast<int>(g.front().size());
  // Entries equal to n can only sit in the bottom row.
  std::vector<int> hole_cols;
  for (int j = 0; j < d; ++j)
    if (g[k - 1][j] == n) {
      g[k - 1][j] = kHole;
      hole_cols.push_back(j);
    }
  if (!hole_cols.empty()) on_step(g);
  for (int j : hole_cols) {
    // The hole that started in column j is still in the bottom row: holes to
    // its left have already moved up and holes to its right are untouched.
    slide_up_left(g, k - 1, j, on_step);
  }
  for (auto& row : g)
    for (int& x : row) x += 1;  // holes become 0 + 1
  on_step(g);
  return monomial_of(g);
}

}  // namespace

Monomial promote(const Monomial& m, int n) {
  return promote_impl(m, n, [](const Tableau&) {});
}

std::vector<Tableau> promote_trace(const Monomial& m, int n) {
  std::vector<Tableau> trace;
  promote_impl(m, n, [&](const Tableau& g) { trace.push_back(g); });
  return trace;
}

Monomial promote_inverse(const Monomial& m, int n) {
  if (m.degree() == 0) return m;
  Tableau g = grid_of(m, n);
  if (g.empty()) return m;
  const int d = static_cast<int>(g.front().size());
  std::vector<int> hole_cols;
  for (int j = 0; j < d; ++j)
    if (g[0][j] == 1) {
      g[0][j] = kHole;
      hole_cols.push_back(j);
    }
  std::reverse(hole_cols.begin(), hole_cols.end());
  for (int j : hole_cols) slide_down_right(g, 0, j, [](const Tableau&) {});
  for (auto& row : g)
    for (int& x : row) x = (x == kHole ? n : x - 1);
  return monomial_of(g);
}

std::string render_grid(const Tableau& grid) {
  size_t w = 1;
  for (const auto& row : grid)
    for (int x : row) w = std::max(w, std::to_string(x).size());
  std::ostringstream os;
  for (const auto& row : grid) {
    for (size_t j = 0; j < row.size(); ++j) {
      std::string cell = row[j] == kHole ? "." : std::to_string(row[j]);
      if (j) os << ' ';
      os << std::string(w - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

PromotionReport verify_promotion_bijection(const BoundedAffinePermutation& f, int d) {
  PromotionReport rep;
  const int n = f.n(), k = f.k();
  const auto g = chi_shift(f);
  auto fail = [&](const std::string& why) {
    rep.ok = false;
    rep.failure = why;
    return rep;
  };

  const auto src = standard_monomials(f, d);
  const auto dst = standard_monomials(g, d);
  std::set<Monomial> dst_set(dst.begin(), dst.end());
  std::set<Monomial> image;
  for (const auto& m : src) {
    const Monomial p = promote(m, n);
    ++rep.checked;
    if (!dst_set.count(p))
      return fail("prom(" + m.to_string() + ") = " + p.to_string() + " is not standard for chi(f)");
    if (!image.insert(p).second) return fail("promotion is not injective at " + m.to_string());
  }
  if (image.size() != dst_set.size())
    return fail("promotion misses " + std::to_string(dst_set.size() - image.size()) +
                " standard monomials of chi(f)");

  for (const auto& m : enumerate_B(n, k, d)) {
    const Monomial p = promote(m, n);
    ++rep.checked;
    if (in_initial_ideal(m, f) != in_initial_ideal(p, g))
      return fail("membership not preserved at " + m.to_string());
    if (promote_inverse(p, n) != m) return fail("promote_inverse fails at " + m.to_string());
    if (k >= 1 && k < n) {
      const Monomial lhs = complement_monomial(p, n);
      const Monomial rhs = promote(complement_monomial(m, n), n);
      if (lhs != rhs) return fail("complement does not commute with promotion at " + m.to_string());
    }
  }
  return rep;
}

}  // namespace positroid
