#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "positroid/affine.hpp"
#include "positroid/positroid.hpp"
#include "positroid/tableau.hpp"

namespace positroid {

/// Dense matrix of exact rationals, 0-indexed storage.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);
  explicit RationalMatrix(const std::vector<std::vector<mpq_class>>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const mpq_class& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  /// Columns listed by 1-indexed position (repeats allowed).
  RationalMatrix select_columns(const std::vector<int>& cols) const;
  RationalMatrix transpose() const;

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_;
  int cols_;
  std::vector<mpq_class> data_;
};

/// Exact rank by row-pivoting Gaussian elimination.
int rank(const RationalMatrix& m);
/// Exact rank by eliminating with column operations instead.
int rank_by_columns(const RationalMatrix& m);

/// Exact rank of an integer matrix by elimination modulo 62-bit primes until
/// the product of primes exceeds the Hadamard bound on every minor one size
/// above the current rank; that certifies all such minors vanish over Q.
int rank_multimodular(const std::vector<std::vector<mpz_class>>& rows);

/// Determinant of the k x k submatrix on the given 1-indexed columns, in the
/// given order (so a repeated column gives 0).
mpq_class minor(const RationalMatrix& m, const std::vector<int>& cols);

/// All maximal minors of a k x n matrix, keyed by sorted column set.
class MinorTable {
 public:
  explicit MinorTable(const RationalMatrix& m);
  const mpq_class& operator[](const PluckerIndex& a) const;
  mpq_class evaluate(const Monomial& mono) const;
  mpq_class evaluate(const SignedSum& sum) const;

 private:
  std::map<PluckerIndex, mpq_class> minors_;
};

/// Entries are drawn from [-20, 20] using the raw output of a mt19937_64
/// seeded with `seed`, so samples are identical across platforms.
RationalMatrix sample_generic_point(int k, int n, std::uint64_t seed);

/// A point of X_{S<=r}: random k x n, with the columns in S replaced by C*D
/// for random C (k x r) and D (r x m). Resamples until the row rank is k,
/// at most 50 times; throws Error when the budget runs out.
RationalMatrix sample_basic_point(const BasicPositroid& b, std::uint64_t seed);

/// f(i) = min{ j >= i : v_i in span(v_{i+1}, ..., v_j) }, columns periodic.
/// Throws Error if the row rank is not the number of rows.
BoundedAffinePermutation f_from_matrix(const RationalMatrix& m);

/// Columns v_n, v_1, ..., v_{n-1}.
RationalMatrix rotate_columns(const RationalMatrix& m);

/// Rank of the (monomial, point) evaluation matrix, exact.
int evaluation_rank(const std::vector<Monomial>& monomials, const std::vector<RationalMatrix>& points);

}  // namespace positroid
