#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "positroid/affine.hpp"
#include "positroid/perm.hpp"
#include "positroid/tableau.hpp"

namespace positroid {

/// X_{S <= r} in Gr(k,n).
struct BasicPositroid {
  int n = 0;
  int k = 0;
  RankCondition condition;

  auto operator<=>(const BasicPositroid&) const = default;
};

/// Validates via check_basic_condition (TrivialCondition for r >= m or r >= k).
BasicPositroid make_basic(int n, int k, const RankCondition& c);

/// Every nontrivial feasible basic condition in Gr(k,n), ordered by
/// (start, length, bound).
std::vector<BasicPositroid> enumerate_basic(int n, int k);

/// Grassmann interval of X_{S<=r} by the four-case formula on alpha = start-1.
GrassmannInterval uv_from_basic(const BasicPositroid& b);

/// S -> [alpha+m+1, alpha] (cyclic complement), r -> n-k-m+r, in Gr(n-k,n).
BasicPositroid dualize(const BasicPositroid& b);

PluckerIndex complement_index(const PluckerIndex& a, int n);
/// Factorwise complement, re-sorted.
Monomial complement_monomial(const Monomial& m, int n);

/// A generalized antidiagonal: cells are 1-indexed (row, column) in the
/// tableau, listed from the smallest value (northeast) to the largest.
struct AntidiagonalWitness {
  int length = 0;
  std::vector<std::pair<int, int>> cells;
  std::vector<int> values;
};

/// Longest generalized antidiagonal with values in [lo, hi]. Throws Error
/// if m is not standard.
AntidiagonalWitness longest_antidiagonal(const Monomial& m, int lo, int hi);

/// Outcome of an initial-ideal membership test for X_{S<=r}.
struct Membership {
  bool in_ideal = false;
  std::optional<IncomparablePair> incomparable;
  /// Witness in the tableau that was tested: m itself, or its complement
  /// when S wraps (then `via_dual` is set).
  std::optional<AntidiagonalWitness> antidiagonal;
  bool via_dual = false;
};

Membership membership_basic(const Monomial& m, const BasicPositroid& b);
bool in_initial_ideal_basic(const Monomial& m, const BasicPositroid& b);

/// The basic positroids cut out by the essential conditions of f.
std::vector<BasicPositroid> basic_components(const BoundedAffinePermutation& f);

/// m is non-standard, or lies in the initial ideal of some essential condition.
bool in_initial_ideal(const Monomial& m, const BoundedAffinePermutation& f);

/// Degree-d standard monomials of Pi_f, ascending in term order.
std::vector<Monomial> standard_monomials(const BoundedAffinePermutation& f, int d);

/// Chain v <= v1 <= ... <= vd <= u with vi([k]) = i-th factor, or nullopt.
/// Tries the b-set recursion when v has a single descent p >= k and falls
/// back to greedy minimal lifts, which always finds a chain when one exists.
std::optional<std::vector<Permutation>> chain_lift(const Monomial& m, const Permutation& v,
                                                   const Permutation& u);

/// (v1, vd): v1 anti-Grassmannian on the first factor, then iterated
/// minimal lifts through the remaining factors.
std::pair<Permutation, Permutation> minimal_positroid(const Monomial& m, int n);

/// Facets of the Stanley-Reisner complex of In(J_f): maximal chains of
/// Plücker indices whose square-free product is a standard monomial of Pi_f.
/// Each facet is sorted lexicographically; facets are sorted lexicographically.
std::vector<std::vector<PluckerIndex>> sr_facets(const BoundedAffinePermutation& f);

}  // namespace positroid
