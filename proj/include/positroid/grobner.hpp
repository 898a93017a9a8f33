#pragma once

#include <string>
#include <vector>

#include "positroid/affine.hpp"
#include "positroid/positroid.hpp"
#include "positroid/tableau.hpp"

namespace positroid {

enum class GeneratorClass { plucker, antidiagonal, linear };

std::string class_name(GeneratorClass c);

/// Element of a Gröbner basis. `terms` is sorted largest first, so
/// terms.front().mono == lead.
struct GBGenerator {
  SignedSum terms;
  Monomial lead;
  GeneratorClass cls = GeneratorClass::plucker;

  bool operator==(const GBGenerator& o) const { return terms == o.terms; }
};

/// a*b - straighten(a*b) for every incomparable pair a <lex b.
std::vector<GBGenerator> plucker_gb(int k, int n);

/// The antidiagonal generators of X_{S<=r} for non-wrapping S: one per
/// minimal standard generator of the initial ideal, expanded over S_{r+1}
/// from the lexicographically first (c, lambda) realizing it, with content
/// removed and a positive lead coefficient. Degree 1 gives the vanishing
/// coordinate with coefficient 1.
std::vector<GBGenerator> antidiagonal_generators(const BasicPositroid& b);

/// Plücker generators whose lead factors each meet S in at most r elements,
/// followed by the antidiagonal generators. Wrapping S goes through the
/// complement of the dual basis.
std::vector<GBGenerator> basic_gb(const BasicPositroid& b);

/// Union of basic_gb over the essential conditions, with exact duplicates
/// and generators whose lead is divisible by an earlier-kept lead removed.
std::vector<GBGenerator> positroid_gb(const BoundedAffinePermutation& f);

/// Apply the complement map to every monomial; the lead is recomputed.
GBGenerator complement_generator(const GBGenerator& g, int n);

/// Minimal generators of the initial ideal of degree <= max_degree, sorted
/// by degree then lexicographically.
std::vector<Monomial> initial_min_gens(const BasicPositroid& b, int max_degree);
std::vector<Monomial> initial_min_gens(const BoundedAffinePermutation& f, int max_degree);

/// Generalized antidiagonal cells (1-indexed row, column) of the lead term
/// with values in the condition's interval; empty for Plücker generators.
std::vector<std::pair<int, int>> lead_marks(const GBGenerator& g, const BasicPositroid& b);

}  // namespace positroid
