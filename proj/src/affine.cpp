#include "positroid/affine.hpp"

#include <algorithm>
#include <numeric>

#include "positroid/error.hpp"

namespace positroid {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int residue(int x, int n) { return x - n * floor_div(x - 1, n); }

}  // namespace

std::vector<int> interval_members(const RankCondition& c, int n) {
  std::vector<int> s;
  s.reserve(c.length);
  for (int t = 0; t < c.length; ++t) s.push_back(residue(c.start + t, n));
  return s;
}

bool interval_wraps(const RankCondition& c, int n) { return c.start - 1 + c.length > n; }

void check_basic_condition(const RankCondition& c, int k, int n) {
  if (n < 1 || k < 0 || k > n) throw Error("invalid ambient Gr(k,n)");
  if (c.start < 1 || c.start > n) throw Error("interval start must lie in [1,n]");
  if (c.length < 1 || c.length >= n) throw Error("interval length must lie in [1,n-1]");
  if (c.bound < 0) throw Error("rank bound must be nonnegative");
  if (c.bound >= c.length || c.bound >= k)
    throw TrivialCondition("rank condition is satisfied by every point of Gr(k,n)");
  if (n - c.length + c.bound < k) throw Error("rank condition is infeasible for a rank-k matrix");
}

BoundedAffinePermutation::BoundedAffinePermutation(int n, std::vector<int> window)
    : n_(n), k_(0), window_(std::move(window)), position_of_residue_(n + 1, 0) {
  if (n < 1 || static_cast<int>(window_.size()) != n)
    throw Error("window length must equal n");
  long excess = 0;
  for (int i = 1; i <= n; ++i) {
    const int fi = window_[i - 1];
    if (fi < i || fi > i + n) throw Error("window violates i <= f(i) <= i+n");
    const int res = residue(fi, n);
    if (position_of_residue_[res] != 0) throw Error("window residues are not distinct mod n");
    position_of_residue_[res] = i;
    excess += fi - i;
  }
  if (excess % n != 0) throw Error("sum of f(i) - i is not a multiple of n");
  k_ = static_cast<int>(excess / n);
}

BoundedAffinePermutation BoundedAffinePermutation::top_cell(int k, int n) {
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = i + k;
  return BoundedAffinePermutation(n, std::move(w));
}

int BoundedAffinePermutation::operator()(int i) const {
  const int q = floor_div(i - 1, n_);
  return window_[i - q * n_ - 1] + q * n_;
}

int BoundedAffinePermutation::inverse_at(int j) const {
  const int s = position_of_residue_[residue(j, n_)];
  return s + (j - window_[s - 1]);
}

int cyclic_rank(const BoundedAffinePermutation& f, int i, int j) {
  if (j < i || j > i + f.n()) throw Error("cyclic_rank: need i <= j <= i+n");
  int southwest = 0;
  for (int t = i; t <= j; ++t)
    if (f(t) <= j) ++southwest;
  return (j - i + 1) - southwest;
}

std::vector<RankCondition> essential_conditions(const BoundedAffinePermutation& f) {
  const int n = f.n();
  std::vector<RankCondition> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= i + n - 1; ++j) {
      if (!(f(i - 1) > j && f.inverse_at(j + 1) < i && f(i) <= j && f.inverse_at(j) >= i))
        continue;
      RankCondition c{i, j - i + 1, cyclic_rank(f, i, j)};
      if (c.bound >= c.length || c.bound >= f.k()) continue;
      out.push_back(c);
    }
  }
  return out;
}

BoundedAffinePermutation chi_shift(const BoundedAffinePermutation& f) {
  std::vector<int> w(f.n());
  for (int i = 1; i <= f.n(); ++i) w[i - 1] = f(i - 1) + 1;
  return BoundedAffinePermutation(f.n(), std::move(w));
}

GrassmannInterval interval_rep(const BoundedAffinePermutation& f) {
  const int n = f.n();
  std::vector<int> big;
  std::vector<int> reduced(n);
  for (int i = 1; i <= n; ++i) {
    if (f(i) > n) big.push_back(i);
    reduced[i - 1] = residue(f(i), n);
  }
  Permutation u = grassmannian_perm(big, n);
  Permutation v = Permutation(std::move(reduced)) * u;
  return {std::move(v), std::move(u)};
}

BoundedAffinePermutation bounded_from_interval(const Permutation& v, const Permutation& u, int k) {
  const int n = u.size();
  if (v.size() != n) throw Error("bounded_from_interval: size mismatch");
  const Permutation reduced = v * u.inverse();
  const std::vector<int> lifted = u.prefix_set(k);
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) {
    w[i - 1] = reduced(i) + (std::binary_search(lifted.begin(), lifted.end(), i) ? n : 0);
  }
  return BoundedAffinePermutation(n, std::move(w));
}

BoundedAffinePermutation basic_affine(const RankCondition& c, int k, int n) {
  check_basic_condition(c, k, n);
  const int m = c.length;
  const int r = c.bound;
  const int alpha = c.start - 1;
  std::vector<int> base(n);
  for (int i = 1; i <= n; ++i) {
    if (i <= m - r)
      base[i - 1] = r + i;
    else if (i <= n - k + r)
      base[i - 1] = k + i;
    else
      base[i - 1] = i + m + k - r;
  }
  const BoundedAffinePermutation f0(n, std::move(base));
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = f0(i - alpha) + alpha;
  return BoundedAffinePermutation(n, std::move(w));
}

namespace {

void extend_windows(int n, int k, int i, int excess, std::vector<int>& window,
                    std::vector<bool>& used, std::vector<BoundedAffinePermutation>& out) {
  if (i > n) {
    if (excess == k * n) out.emplace_back(n, window);
    return;
  }
  for (int fi = i; fi <= i + n; ++fi) {
    const int res = residue(fi, n);
    if (used[res]) continue;
    // The remaining positions contribute at most n each.
    if (excess + (fi - i) + (n - i) * n < k * n) continue;
    if (excess + (fi - i) > k * n) break;
    used[res] = true;
    window.push_back(fi);
    extend_windows(n, k, i + 1, excess + fi - i, window, used, out);
    window.pop_back();
    used[res] = false;
  }
}

}  // namespace

std::vector<BoundedAffinePermutation> enumerate_bounded(int k, int n) {
  if (n < 1 || k < 0 || k > n) throw Error("enumerate_bounded: invalid Gr(k,n)");
  std::vector<BoundedAffinePermutation> out;
  std::vector<int> window;
  std::vector<bool> used(n + 1, false);
  extend_windows(n, k, 1, 0, window, used, out);
  return out;
}

}  // namespace positroid
