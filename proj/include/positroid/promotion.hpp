#pragma once

#include <string>
#include <vector>

#include "positroid/affine.hpp"
#include "positroid/tableau.hpp"

namespace positroid {

/// Promotion on k x d semistandard tableaux with entries in [n]: entries n
/// become holes, holes slide to the top-left (leftmost hole first), then
/// holes become 0 and every entry is incremented.
Monomial promote(const Monomial& m, int n);

/// Inverse promotion: entries 1 become holes and slide to the bottom-right
/// (rightmost hole first), then holes become n+1 and every entry is
/// decremented.
Monomial promote_inverse(const Monomial& m, int n);

/// Every intermediate grid of promote, holes shown as 0: the initial
/// tableau, the tableau with holes, one grid per slide, and the result.
std::vector<Tableau> promote_trace(const Monomial& m, int n);

/// Rows of a grid, holes printed as '.'.
std::string render_grid(const Tableau& grid);

struct PromotionReport {
  bool ok = true;
  std::size_t checked = 0;
  std::string failure;
};

/// Checks that promote maps standard_monomials(f,d) bijectively onto
/// standard_monomials(chi(f),d), preserves initial-ideal membership on all
/// of B(n,k,d), and commutes with the complement map on B(n,k,d).
PromotionReport verify_promotion_bijection(const BoundedAffinePermutation& f, int d);

}  // namespace positroid
