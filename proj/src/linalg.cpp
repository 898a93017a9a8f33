#include "positroid/linalg.hpp"

#include <algorithm>
#include <random>

#include "positroid/error.hpp"

namespace positroid {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw Error("matrix dimensions must be positive");
  data_.assign(static_cast<size_t>(rows) * cols, mpq_class(0));
}

RationalMatrix::RationalMatrix(const std::vector<std::vector<mpq_class>>& entries)
    : RationalMatrix(static_cast<int>(entries.size()),
                     entries.empty() ? 0 : static_cast<int>(entries.front().size())) {
  for (int i = 0; i < rows_; ++i) {
    if (static_cast<int>(entries[i].size()) != cols_) throw Error("ragged matrix rows");
    for (int j = 0; j < cols_; ++j) at(i, j) = entries[i][j];
  }
}

RationalMatrix RationalMatrix::select_columns(const std::vector<int>& cols) const {
  RationalMatrix out(rows_, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] < 1 || cols[j] > cols_) throw Error("column index out of range");
    for (int i = 0; i < rows_; ++i) out.at(i, static_cast<int>(j)) = at(i, cols[j] - 1);
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

int rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  int r = 0;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = col; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(piv, j));
    for (int i = r + 1; i < a.rows(); ++i) {
      if (a.at(i, col) == 0) continue;
      const mpq_class factor = a.at(i, col) / a.at(r, col);
      for (int j = col; j < a.cols(); ++j) a.at(i, j) -= factor * a.at(r, j);
    }
    ++r;
  }
  return r;
}

int rank_by_columns(const RationalMatrix& m) {
  RationalMatrix a = m;
  int r = 0;
  // Column operations: pivot on rows in order, clear the row to the right.
  for (int row = 0; row < a.rows() && r < a.cols(); ++row) {
    int piv = -1;
    for (int j = r; j < a.cols(); ++j)
      if (a.at(row, j) != 0) {
        piv = j;
        break;
      }
    if (piv < 0) continue;
    for (int i = row; i < a.rows(); ++i) std::swap(a.at(i, r), a.at(i, piv));
    for (int j = r + 1; j < a.cols(); ++j) {
      if (a.at(row, j) == 0) continue;
      const mpq_class factor = a.at(row, j) / a.at(row, r);
      for (int i = row; i < a.rows(); ++i) a.at(i, j) -= factor * a.at(i, r);
    }
    ++r;
  }
  return r;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

int rank_mod(std::vector<u64> a, int rows, int cols, u64 p) {
  auto at = [&](int i, int j) -> u64& { return a[static_cast<size_t>(i) * cols + j]; };
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = col; j < cols; ++j) std::swap(at(r, j), at(piv, j));
    const u64 inv = pow_mod(at(r, col), p - 2, p);
    for (int j = col; j < cols; ++j) at(r, j) = mul_mod(at(r, j), inv, p);
    for (int i = r + 1; i < rows; ++i) {
      const u64 f = at(i, col);
      if (!f) continue;
      for (int j = col; j < cols; ++j) {
        const u64 s = mul_mod(f, at(r, j), p);
        u64& x = at(i, j);
        x = x >= s ? x - s : x + p - s;
      }
    }
    ++r;
  }
  return r;
}

// Upper bound on log2 of the product of the `count` largest Euclidean norms.
double log2_norm_product(std::vector<double> log2_norms, int count) {
  std::sort(log2_norms.begin(), log2_norms.end(), std::greater<>());
  double s = 0;
  for (int i = 0; i < count && i < static_cast<int>(log2_norms.size()); ++i)
    s += std::max(0.0, log2_norms[i]);
  return s;
}

}  // namespace

int rank_multimodular(const std::vector<std::vector<mpz_class>>& rows) {
  const int R = static_cast<int>(rows.size());
  const int C = R ? static_cast<int>(rows.front().size()) : 0;
  if (R == 0 || C == 0) return 0;
  std::vector<mpz_class> row_sq(R, 0), col_sq(C, 0);
  for (int i = 0; i < R; ++i) {
    if (static_cast<int>(rows[i].size()) != C) throw Error("ragged matrix rows");
    for (int j = 0; j < C; ++j) {
      const mpz_class sq = rows[i][j] * rows[i][j];
      row_sq[i] += sq;
      col_sq[j] += sq;
    }
  }
  // sizeinbase(x, 2) >= log2(x), so half of it bounds log2 of the norm.
  auto half_bits = [](const mpz_class& x) {
    return x == 0 ? 0.0 : 0.5 * static_cast<double>(mpz_sizeinbase(x.get_mpz_t(), 2));
  };
  std::vector<double> row_log(R), col_log(C);
  for (int i = 0; i < R; ++i) row_log[i] = half_bits(row_sq[i]);
  for (int j = 0; j < C; ++j) col_log[j] = half_bits(col_sq[j]);

  const int full = std::min(R, C);
  mpz_class p = mpz_class(1) << 61;
  double covered_bits = 0;
  int r = 0;
  std::vector<u64> reduced(static_cast<size_t>(R) * C);
  while (true) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    const u64 pv = p.get_ui();
    for (int i = 0; i < R; ++i)
      for (int j = 0; j < C; ++j)
        reduced[static_cast<size_t>(i) * C + j] = mpz_fdiv_ui(rows[i][j].get_mpz_t(), pv);
    r = std::max(r, rank_mod(reduced, R, C, pv));
    covered_bits += 61.0;
    if (r == full) return r;
    const double bound = std::min(log2_norm_product(row_log, r + 1), log2_norm_product(col_log, r + 1));
    if (covered_bits > bound + 1.0) return r;
  }
}

mpq_class minor(const RationalMatrix& m, const std::vector<int>& cols) {
  const int k = m.rows();
  if (static_cast<int>(cols.size()) != k) throw Error("minor: need exactly k columns");
  RationalMatrix a = m.select_columns(cols);
  mpq_class det = 1;
  for (int c = 0; c < k; ++c) {
    int piv = -1;
    for (int i = c; i < k; ++i)
      if (a.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < k; ++j) std::swap(a.at(c, j), a.at(piv, j));
      det = -det;
    }
    det *= a.at(c, c);
    for (int i = c + 1; i < k; ++i) {
      if (a.at(i, c) == 0) continue;
      const mpq_class f = a.at(i, c) / a.at(c, c);
      for (int j = c; j < k; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return det;
}

MinorTable::MinorTable(const RationalMatrix& m) {
  for (const auto& a : plucker_indices(m.cols(), m.rows())) minors_.emplace(a, minor(m, a));
}

const mpq_class& MinorTable::operator[](const PluckerIndex& a) const {
  auto it = minors_.find(a);
  if (it == minors_.end()) throw Error("MinorTable: index is not a Plücker coordinate of this matrix");
  return it->second;
}

mpq_class MinorTable::evaluate(const Monomial& mono) const {
  mpq_class v = 1;
  for (const auto& f : mono.factors()) v *= (*this)[f];
  return v;
}

mpq_class MinorTable::evaluate(const SignedSum& sum) const {
  mpq_class v = 0;
  for (const auto& t : sum) v += mpq_class(t.coeff) * evaluate(t.mono);
  return v;
}

namespace {

RationalMatrix random_matrix(int rows, int cols, std::mt19937_64& gen) {
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = static_cast<long>(gen() % 41) - 20;
  return m;
}

constexpr int kResampleBudget = 50;

}  // namespace

RationalMatrix sample_generic_point(int k, int n, std::uint64_t seed) {
  if (k < 1 || k > n) throw Error("sample_generic_point: need 1 <= k <= n");
  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    RationalMatrix m = random_matrix(k, n, gen);
    if (rank(m) == k) return m;
  }
  throw Error("sample_generic_point: resampling budget exhausted");
}

RationalMatrix sample_basic_point(const BasicPositroid& b, std::uint64_t seed) {
  check_basic_condition(b.condition, b.k, b.n);
  const int k = b.k, n = b.n, r = b.condition.bound, m = b.condition.length;
  const auto cols = interval_members(b.condition, n);
  const BoundedAffinePermutation target = basic_affine(b.condition, k, n);
  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    RationalMatrix M = random_matrix(k, n, gen);
    if (r == 0) {
      for (int t = 0; t < m; ++t)
        for (int i = 0; i < k; ++i) M.at(i, cols[t] - 1) = 0;
    } else {
      const RationalMatrix C = random_matrix(k, r, gen);
      const RationalMatrix D = random_matrix(r, m, gen);
      for (int t = 0; t < m; ++t)
        for (int i = 0; i < k; ++i) {
          mpq_class s = 0;
          for (int l = 0; l < r; ++l) s += C.at(i, l) * D.at(l, t);
          M.at(i, cols[t] - 1) = s;
        }
    }
    // Generic means full rank and landing in the open stratum of the condition.
    if (rank(M) == k && f_from_matrix(M) == target) return M;
  }
  throw Error("sample_basic_point: resampling budget exhausted");
}

BoundedAffinePermutation f_from_matrix(const RationalMatrix& m) {
  const int k = m.rows(), n = m.cols();
  if (rank(m) != k) throw Error("f_from_matrix: matrix is rank-deficient");
  auto periodic = [&](int lo, int hi) {
    std::vector<int> cols;
    for (int c = lo; c <= hi; ++c) cols.push_back((c - 1) % n + 1);
    return m.select_columns(cols);
  };
  std::vector<int> window(n);
  for (int i = 1; i <= n; ++i) {
    int j = i;
    while (true) {
      const int without = j > i ? rank(periodic(i + 1, j)) : 0;
      if (rank(periodic(i, j)) == without) break;
      ++j;
    }
    window[i - 1] = j;
  }
  return BoundedAffinePermutation(n, std::move(window));
}

RationalMatrix rotate_columns(const RationalMatrix& m) {
  std::vector<int> cols{m.cols()};
  for (int c = 1; c < m.cols(); ++c) cols.push_back(c);
  return m.select_columns(cols);
}

int evaluation_rank(const std::vector<Monomial>& monomials, const std::vector<RationalMatrix>& points) {
  if (monomials.empty() || points.empty()) return 0;
  for (const auto& mono : monomials)
    if (mono.degree() != monomials.front().degree()) throw Error("evaluation_rank: mixed degrees");
  const int R = static_cast<int>(monomials.size());
  const int C = static_cast<int>(points.size());
  std::vector<std::vector<mpz_class>> rows(R, std::vector<mpz_class>(C));
  for (int j = 0; j < C; ++j) {
    const MinorTable table(points[j]);
    std::vector<mpq_class> col(R);
    mpz_class den = 1;
    for (int i = 0; i < R; ++i) {
      col[i] = table.evaluate(monomials[i]);
      den = lcm(den, mpz_class(col[i].get_den()));
    }
    // Scaling a column by a nonzero integer keeps the rank.
    for (int i = 0; i < R; ++i) rows[i][j] = mpz_class(col[i] * den);
  }
  return rank_multimodular(rows);
}

}  // namespace positroid
