#include "positroid/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "positroid/error.hpp"

namespace positroid {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int x : word_) {
    if (x < 1 || x > n || seen[x]) {
      throw Error("not a permutation of [" + std::to_string(n) + "]: " + to_string());
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) inv[(*this)(i) - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.size() != size()) throw Error("permutation size mismatch");
  std::vector<int> w(word_.size());
  for (int i = 1; i <= size(); ++i) w[i - 1] = (*this)(other(i));
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int inv = 0;
  for (size_t i = 0; i < word_.size(); ++i)
    for (size_t j = i + 1; j < word_.size(); ++j)
      if (word_[i] > word_[j]) ++inv;
  return inv;
}

std::vector<int> Permutation::prefix_set(int p) const {
  std::vector<int> s(word_.begin(), word_.begin() + p);
  std::sort(s.begin(), s.end());
  return s;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) os << ' ';
    os << word_[i];
  }
  return os.str();
}

bool gale_leq(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw Error("gale_leq: size mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<int> descents(const Permutation& w) {
  std::vector<int> des;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) des.push_back(i);
  return des;
}

bool is_grassmannian(const Permutation& w, int k) {
  for (int i : descents(w))
    if (i != k) return false;
  return true;
}

namespace {

std::vector<int> checked_subset(std::span<const int> subset, int n) {
  std::vector<int> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw Error("subset has repeated elements");
  for (int x : s)
    if (x < 1 || x > n) throw Error("subset is not contained in [n]");
  return s;
}

std::vector<int> complement_of(const std::vector<int>& sorted, int n) {
  std::vector<int> rest;
  for (int x = 1, i = 0; x <= n; ++x) {
    if (i < static_cast<int>(sorted.size()) && sorted[i] == x)
      ++i;
    else
      rest.push_back(x);
  }
  return rest;
}

}  // namespace

Permutation grassmannian_perm(std::span<const int> subset, int n) {
  std::vector<int> w = checked_subset(subset, n);
  std::vector<int> rest = complement_of(w, n);
  w.insert(w.end(), rest.begin(), rest.end());
  return Permutation(std::move(w));
}

Permutation anti_grassmannian_perm(std::span<const int> subset, int n) {
  std::vector<int> head = checked_subset(subset, n);
  std::vector<int> rest = complement_of(head, n);
  std::reverse(head.begin(), head.end());
  std::reverse(rest.begin(), rest.end());
  head.insert(head.end(), rest.begin(), rest.end());
  return Permutation(std::move(head));
}

bool bruhat_leq(const Permutation& v, const Permutation& u) {
  if (v.size() != u.size()) throw Error("bruhat_leq: size mismatch");
  for (int l : descents(v)) {
    if (!gale_leq(v.prefix_set(l), u.prefix_set(l))) return false;
  }
  return true;
}

namespace {

// Flag search for min_lift. levels[l] holds the sorted prefix set of size l.
class FlagSearch {
 public:
  FlagSearch(const Permutation& prev, int k) : prev_(prev), k_(k), levels_(prev.size() + 1) {}

  bool run(std::vector<int> top) {
    levels_[k_] = std::move(top);
    return descend(k_) && ascend(k_);
  }

  Permutation build() const {
    const int n = prev_.size();
    std::vector<int> w(n);
    for (int l = 1; l <= n; ++l) {
      const auto& big = levels_[l];
      const auto& small = levels_[l - 1];
      std::vector<int> diff;
      std::set_difference(big.begin(), big.end(), small.begin(), small.end(),
                          std::back_inserter(diff));
      w[l - 1] = diff.front();
    }
    return Permutation(std::move(w));
  }

 private:
  bool dominates(const std::vector<int>& s) const {
    return gale_leq(prev_.prefix_set(static_cast<int>(s.size())), s);
  }

  // Fill levels l-1, ..., 1 by removing one element at a time, largest first.
  bool descend(int l) {
    if (l <= 1) return true;
    const auto& cur = levels_[l];
    for (int idx = static_cast<int>(cur.size()) - 1; idx >= 0; --idx) {
      std::vector<int> next = cur;
      next.erase(next.begin() + idx);
      if (!dominates(next)) continue;
      levels_[l - 1] = std::move(next);
      if (descend(l - 1)) return true;
    }
    return false;
  }

  // Fill levels l+1, ..., n by adding one element at a time, smallest first.
  bool ascend(int l) {
    const int n = prev_.size();
    if (l >= n) return true;
    const auto& cur = levels_[l];
    for (int x = 1; x <= n; ++x) {
      if (std::binary_search(cur.begin(), cur.end(), x)) continue;
      std::vector<int> next = cur;
      next.insert(std::upper_bound(next.begin(), next.end(), x), x);
      if (!dominates(next)) continue;
      levels_[l + 1] = std::move(next);
      if (ascend(l + 1)) return true;
    }
    return false;
  }

  const Permutation& prev_;
  int k_;
  std::vector<std::vector<int>> levels_;
};

}  // namespace

std::optional<Permutation> min_lift(const Permutation& prev, std::span<const int> subset) {
  const int n = prev.size();
  std::vector<int> top = checked_subset(subset, n);
  const int k = static_cast<int>(top.size());
  if (!gale_leq(prev.prefix_set(k), top)) return std::nullopt;
  FlagSearch search(prev, k);
  if (!search.run(std::move(top))) return std::nullopt;
  return search.build();
}

}  // namespace positroid
