#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace positroid {

/// A permutation of [n] in one-line notation. Positions and values are
/// 1-indexed: `w(i)` is the image of i.
class Permutation {
 public:
  Permutation() = default;
  /// Throws positroid::Error unless `word` is a bijection on [n].
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// w_0 = n n-1 ... 1.
  static Permutation longest(int n);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  /// Composition: (*this * other)(i) = (*this)(other(i)).
  Permutation operator*(const Permutation& other) const;

  /// Coxeter length (number of inversions).
  int length() const;
  /// The set w([p]) = {w(1),...,w(p)}, sorted ascending.
  std::vector<int> prefix_set(int p) const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

/// Componentwise comparison of two sorted sets of equal size.
bool gale_leq(std::span<const int> a, std::span<const int> b);

/// {i in [n-1] : w(i) > w(i+1)}.
std::vector<int> descents(const Permutation& w);

/// Des(w) is contained in {k}.
bool is_grassmannian(const Permutation& w, int k);

/// w_I: the elements of I ascending, followed by the complement ascending.
/// I need not have any particular size; it must be a subset of [n].
Permutation grassmannian_perm(std::span<const int> subset, int n);

/// The k-anti-Grassmannian permutation with w([k]) = I, k = |I|: I
/// descending, then the complement descending (unique ascent at k).
Permutation anti_grassmannian_perm(std::span<const int> subset, int n);

/// Strong Bruhat order via the descent-restricted dominance criterion:
/// v <= u iff v([l]) <= u([l]) componentwise for every descent l of v.
bool bruhat_leq(const Permutation& v, const Permutation& u);

/// The Bruhat-minimum w with w([k]) = subset (k = |subset|) and w >= prev,
/// or nullopt when no such w exists.
///
/// Works on the flag of prefix sets: below k it drops the largest element it
/// can, above k it adds the smallest, and backtracks if a level has no
/// admissible choice. Exhaustively checked against brute force for n <= 6;
/// beyond that correctness rests on uniqueness of the minimum in a coset.
std::optional<Permutation> min_lift(const Permutation& prev,
                                    std::span<const int> subset);

}  // namespace positroid
