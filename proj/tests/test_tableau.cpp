#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "positroid/error.hpp"
#include "positroid/linalg.hpp"
#include "positroid/tableau.hpp"

using namespace positroid;

namespace {

Monomial M(std::vector<PluckerIndex> fs) { return Monomial(std::move(fs)); }

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("Plücker indices and the componentwise order") {
  CHECK(plucker_indices(4, 2) ==
        std::vector<PluckerIndex>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(plucker_leq({1, 2, 4}, {2, 3, 5}));
  for (const auto& a : plucker_indices(6, 3)) CHECK(plucker_leq({1, 2, 3}, a));
  CHECK_FALSE(plucker_leq({1, 4}, {2, 3}));
  CHECK_FALSE(plucker_leq({2, 3}, {1, 4}));
  CHECK_FALSE(plucker_comparable({1, 4}, {2, 3}));
  CHECK_THROWS_AS(plucker_leq({1, 2}, {1, 2, 3}), Error);
  CHECK_THROWS_AS(check_plucker_index({2, 2}, 4), Error);
  CHECK_THROWS_AS(check_plucker_index({1, 5}, 4), Error);
}

TEST_CASE("monomials and tableaux") {
  const auto m = M({{2, 3, 5}, {1, 2, 4}});
  CHECK(m.factors() == std::vector<PluckerIndex>{{1, 2, 4}, {2, 3, 5}});
  CHECK(m.is_standard());
  CHECK(std::get<Tableau>(to_tableau(m)) == Tableau{{1, 2}, {2, 3}, {4, 5}});
  CHECK(std::get<Tableau>(to_tableau(M({{1, 3, 4}}))) == Tableau{{1}, {3}, {4}});
  const auto bad = M({{2, 3}, {1, 4}});
  CHECK_FALSE(bad.is_standard());
  CHECK(std::get<IncomparablePair>(to_tableau(bad)) == IncomparablePair{0, 1});
  CHECK(m.to_string() == "[1,2,4][2,3,5]");
  CHECK(render_ascii(m) == "1 2\n2 3\n4 5\n");
  CHECK(render_ascii(M({{1, 2, 10}, {2, 3, 11}}), {{1, 1}, {3, 2}}) == "1* 2\n2  3\n10 11*\n");
  CHECK(M({{1, 2}}).divides(M({{1, 2}, {3, 4}})));
  CHECK_FALSE(M({{1, 2}, {1, 2}}).divides(M({{1, 2}, {3, 4}})));
  CHECK_THROWS_AS(M({{1, 2}, {1, 2, 3}}), Error);
}

TEST_CASE("term order") {
  // Variable precedence in Gr(2,4): [34] < [24] < [23] < [14] < [13] < [12].
  const std::vector<PluckerIndex> chain{{3, 4}, {2, 4}, {2, 3}, {1, 4}, {1, 3}, {1, 2}};
  for (size_t i = 0; i + 1 < chain.size(); ++i) CHECK(term_cmp(M({chain[i]}), M({chain[i + 1]})) < 0);
  const auto lead = M({{1, 4}, {2, 3}});
  CHECK(term_cmp(M({{1, 3}, {2, 4}}), lead) < 0);
  CHECK(term_cmp(M({{1, 2}, {3, 4}}), M({{1, 3}, {2, 4}})) < 0);
  CHECK(term_cmp(lead, lead) == 0);
  CHECK(term_cmp(M({{1, 2}}), M({{3, 4}, {3, 4}})) < 0);  // degree first
}

TEST_CASE("enumerate_B counts match the SSYT dynamic program") {
  CHECK(enumerate_B(4, 2, 2).size() == 20);
  CHECK(enumerate_B(5, 3, 0) == std::vector<Monomial>{Monomial()});
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      CHECK(static_cast<long long>(enumerate_B(n, k, 1).size()) == binom(n, k));
      for (int d = 1; d <= (n <= 5 ? 4 : 2); ++d) {
        const auto B = enumerate_B(n, k, d);
        REQUIRE(static_cast<long long>(B.size()) == oracle::ssyt_count(n, k, d));
        for (size_t i = 0; i < B.size(); ++i) {
          CHECK(B[i].is_standard());
          CHECK(oracle::is_semistandard(std::get<Tableau>(to_tableau(B[i]))));
          if (i) CHECK(term_cmp(B[i - 1], B[i]) < 0);
        }
      }
    }
}

TEST_CASE("straightening") {
  const auto s = straighten(M({{1, 4}, {2, 3}}));
  const SignedSum expect{{1, M({{1, 3}, {2, 4}})}, {-1, M({{1, 2}, {3, 4}})}};
  CHECK(s == expect);
  const auto st = M({{1, 2, 4}, {2, 3, 5}});
  CHECK(straighten(st) == SignedSum{{1, st}});
  CHECK(straighten(std::vector<std::vector<int>>{{2, 1}}) == SignedSum{{-1, M({{1, 2}})}});
  CHECK(straighten(std::vector<std::vector<int>>{{2, 2}, {1, 3}}).empty());
  std::vector<int> col{3, 1, 2};
  CHECK(sort_column(col) == 1);
  CHECK(col == std::vector<int>{1, 2, 3});
  std::vector<int> rep{1, 1};
  CHECK(sort_column(rep) == 0);
}

TEST_CASE("straightening of incomparable pairs: standard output, lead term, ASL-2") {
  for (int n = 4; n <= 7; ++n)
    for (int k = 2; k <= n - 2; ++k) {
      const auto idx = plucker_indices(n, k);
      for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j) {
          if (plucker_comparable(idx[i], idx[j])) continue;
          const Monomial ab({idx[i], idx[j]});
          const auto s = straighten(ab);
          for (const auto& t : s) {
            CHECK(t.mono.is_standard());
            CHECK(t.coeff != 0);
            CHECK(term_cmp(t.mono, ab) < 0);
            CHECK(plucker_leq(t.mono.factor(0), idx[i]));
            CHECK(plucker_leq(t.mono.factor(0), idx[j]));
          }
        }
    }
}

TEST_CASE("straightening agrees with minor evaluation") {
  std::mt19937_64 gen(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(gen() % 3);
    const int k = 2 + static_cast<int>(gen() % (n - 3));
    const int d = 2 + static_cast<int>(gen() % 2);
    std::vector<std::vector<int>> factors;
    const auto idx = plucker_indices(n, k);
    for (int f = 0; f < d; ++f) factors.push_back(idx[gen() % idx.size()]);
    const auto s = straighten(factors);
    for (int p = 0; p < 5; ++p) {
      const MinorTable t(sample_generic_point(k, n, gen()));
      mpq_class lhs = 1;
      for (const auto& f : factors) lhs *= t[f];
      CHECK(lhs == t.evaluate(s));
    }
  }
}
