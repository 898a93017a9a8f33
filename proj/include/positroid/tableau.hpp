#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace positroid {

/// Strictly increasing k-tuple from [n]; the Plücker coordinate [c_1 ... c_k].
using PluckerIndex = std::vector<int>;

/// Throws Error unless `a` is strictly increasing with entries in [1,n].
void check_plucker_index(const PluckerIndex& a, int n);

/// All k-subsets of [n] in lexicographic order.
std::vector<PluckerIndex> plucker_indices(int n, int k);

/// Componentwise order on the Plücker poset.
bool plucker_leq(const PluckerIndex& a, const PluckerIndex& b);
bool plucker_comparable(const PluckerIndex& a, const PluckerIndex& b);

/// Product of Plücker coordinates, factors kept in lexicographic order.
class Monomial {
 public:
  Monomial() = default;
  /// Factors are re-sorted lexicographically. All factors must have the
  /// same size and be strictly increasing.
  explicit Monomial(std::vector<PluckerIndex> factors);

  int degree() const { return static_cast<int>(factors_.size()); }
  /// Factor size; 0 for the empty monomial.
  int k() const { return factors_.empty() ? 0 : static_cast<int>(factors_.front().size()); }
  const std::vector<PluckerIndex>& factors() const { return factors_; }
  const PluckerIndex& factor(int i) const { return factors_[i]; }

  /// All pairs of factors comparable, i.e. the k x d array is semistandard.
  bool is_standard() const;

  /// Drops one copy of factor i.
  Monomial without(int i) const;
  /// Multiset divisibility.
  bool divides(const Monomial& other) const;

  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<PluckerIndex> factors_;
};

/// Rows of a semistandard k x d array: rows[p][j] is entry p+1 of factor j+1.
using Tableau = std::vector<std::vector<int>>;
/// 0-indexed positions of two incomparable factors.
using IncomparablePair = std::pair<int, int>;

std::variant<Tableau, IncomparablePair> to_tableau(const Monomial& m);

/// Degree first; within a degree, revlex with respect to the linear extension
/// a < b iff a >lex b. Concretely: list the factors lex-descending and at the
/// first difference the monomial with the lex-larger factor is smaller.
std::strong_ordering term_cmp(const Monomial& a, const Monomial& b);

struct TermLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return term_cmp(a, b) < 0; }
};

/// One term of an integer linear combination.
struct Term {
  mpz_class coeff;
  Monomial mono;

  bool operator==(const Term& o) const { return coeff == o.coeff && mono == o.mono; }
};

/// Sorted by term order, largest first; no zero coefficients or repeats.
using SignedSum = std::vector<Term>;

/// Combines like terms, drops zeros, and sorts largest first.
SignedSum normalize(std::vector<Term> terms);

/// Sorts a column ascending and returns the sign of the sorting
/// permutation, or 0 if an entry repeats.
int sort_column(std::vector<int>& column);

/// All standard monomials of degree d, ascending in term order.
std::vector<Monomial> enumerate_B(int n, int k, int d);

/// Rewrites a product of minors (columns may be unsorted) as an integer
/// combination of standard monomials modulo the Plücker relations.
SignedSum straighten(const std::vector<std::vector<int>>& factors);
SignedSum straighten(const Monomial& m);

/// One row per line, entries separated by spaces. Cells listed in `marked`
/// (1-indexed row, column) get a trailing '*'.
std::string render_ascii(const Monomial& m, const std::vector<std::pair<int, int>>& marked = {});

}  // namespace positroid
