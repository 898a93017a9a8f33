#pragma once

#include <compare>
#include <vector>

#include "positroid/perm.hpp"

namespace positroid {

/// One cyclic rank condition rank(M_S) <= bound, where S is the cyclic
/// interval [start, start+length-1] read modulo n. Stored as (start, length)
/// so wrapping intervals such as [6,1] in n = 6 are unambiguous.
struct RankCondition {
  int start = 1;
  int length = 1;
  int bound = 0;

  auto operator<=>(const RankCondition&) const = default;
};

/// Columns of the cyclic interval, in interval order (so [6,1] in n=6 gives
/// {6,1}).
std::vector<int> interval_members(const RankCondition& c, int n);

/// The interval runs past column n.
bool interval_wraps(const RankCondition& c, int n);

/// Validates a basic condition in Gr(k,n). Throws TrivialCondition when
/// bound >= length or bound >= k, and Error for malformed or infeasible
/// parameters (n - length + bound < k).
void check_basic_condition(const RankCondition& c, int k, int n);

/// A bounded affine permutation f in Bound(k,n), stored by its window
/// [f(1), ..., f(n)] and extended by f(i+n) = f(i) + n.
class BoundedAffinePermutation {
 public:
  /// Validates i <= f(i) <= i+n, distinct residues, and derives k from
  /// sum(f(i) - i) = k n.
  BoundedAffinePermutation(int n, std::vector<int> window);

  /// f(i) = i + k, the top cell (the whole Grassmannian).
  static BoundedAffinePermutation top_cell(int k, int n);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<int>& window() const { return window_; }

  /// f(i) for any integer i.
  int operator()(int i) const;
  /// f^{-1}(j) for any integer j.
  int inverse_at(int j) const;

  auto operator<=>(const BoundedAffinePermutation&) const = default;

 private:
  int n_;
  int k_;
  std::vector<int> window_;
  std::vector<int> position_of_residue_;  // residue in [1,n] -> position in [1,n]
};

/// r(f)_{i,j} = |[i,j]| - #{i' >= i : f(i') <= j}, for i <= j <= i+n.
int cyclic_rank(const BoundedAffinePermutation& f, int i, int j);

/// Rank conditions indexed by the essential set of f, in scan order
/// (i in [1,n], then j in [i, i+n-1]). Trivial conditions are dropped.
std::vector<RankCondition> essential_conditions(const BoundedAffinePermutation& f);

/// chi(f)(i) = f(i-1) + 1.
BoundedAffinePermutation chi_shift(const BoundedAffinePermutation& f);

/// A Grassmann interval [v,u]: u is k-Grassmannian and v <= u.
struct GrassmannInterval {
  Permutation v;
  Permutation u;

  auto operator<=>(const GrassmannInterval&) const = default;
};

/// u = w_I with I = {i : f(i) > n}, v = f~^{-1} u where f~ = f mod n.
GrassmannInterval interval_rep(const BoundedAffinePermutation& f);

/// Inverse of interval_rep for any representative [v,u] of a k-Bruhat
/// interval class: f~ = u v^{-1}, lifted by n on u([k]).
BoundedAffinePermutation bounded_from_interval(const Permutation& v, const Permutation& u, int k);

/// The bounded affine permutation whose positroid variety is X_{S <= r}:
/// f_0 for S = [1,m], conjugated by the cyclic shift for S = [alpha+1, alpha+m].
BoundedAffinePermutation basic_affine(const RankCondition& c, int k, int n);

/// Every element of Bound(k,n), ordered lexicographically by window.
std::vector<BoundedAffinePermutation> enumerate_bounded(int k, int n);

}  // namespace positroid
