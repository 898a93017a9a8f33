#include "doctest.h"
#include "oracle.hpp"
#include "positroid/error.hpp"
#include "positroid/positroid.hpp"
#include "positroid/promotion.hpp"

using namespace positroid;

namespace {
Monomial M(std::vector<PluckerIndex> fs) { return Monomial(std::move(fs)); }
}  // namespace

TEST_CASE("promotion examples") {
  CHECK(promote(M({{1, 2, 4}, {2, 3, 5}}), 5) == M({{1, 2, 3}, {3, 4, 5}}));
  CHECK(promote(M({{1, 2}, {2, 3}}), 4) == M({{2, 3}, {3, 4}}));
  CHECK(promote_inverse(M({{1, 2, 3}, {3, 4, 5}}), 5) == M({{1, 2, 4}, {2, 3, 5}}));
  CHECK(promote_inverse(M({{2, 3}, {3, 4}}), 4) == M({{1, 2}, {2, 3}}));
  CHECK_THROWS_AS(promote(M({{1, 4}, {2, 3}}), 4), Error);
  CHECK_THROWS_AS(promote_inverse(M({{1, 4}, {2, 3}}), 4), Error);
}

TEST_CASE("promotion trace ends at the promoted tableau") {
  const auto m = M({{1, 2, 4}, {2, 3, 5}});
  const auto trace = promote_trace(m, 5);
  REQUIRE(trace.size() >= 3);
  CHECK(trace.front() == Tableau{{1, 2}, {2, 3}, {4, 5}});
  CHECK(trace.back() == Tableau{{1, 3}, {2, 4}, {3, 5}});
  CHECK(render_grid(Tableau{{1, 0}, {2, 3}}) == "1 .\n2 3\n");
}

TEST_CASE("promotion matches Bender-Knuth and a second slide schedule, n <= 6, d <= 3") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      for (int d = 1; d <= 3; ++d)
        for (const auto& m : enumerate_B(n, k, d)) {
          const auto p = promote(m, n);
          REQUIRE(p == oracle::promote_bk(m, n));
          REQUIRE(p == oracle::promote_round_robin(m, n));
          REQUIRE(promote_inverse(p, n) == m);
        }
}

TEST_CASE("promotion has order dividing n") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      for (int d = 1; d <= (n <= 5 ? 3 : 2); ++d)
        for (const auto& m : enumerate_B(n, k, d)) {
          auto p = m;
          for (int t = 0; t < n; ++t) p = promote(p, n);
          REQUIRE(p == m);
        }
}

TEST_CASE("promotion bijection for the worked examples") {
  const auto basic = basic_affine({2, 3, 2}, 3, 5);
  for (int d = 1; d <= 3; ++d) {
    const auto rep = verify_promotion_bijection(basic, d);
    CHECK_MESSAGE(rep.ok, rep.failure);
    CHECK(rep.checked > 0);
  }
  for (int d = 1; d <= 3; ++d) {
    const auto rep = verify_promotion_bijection(BoundedAffinePermutation(6, {5, 2, 4, 7, 9, 12}), d);
    CHECK_MESSAGE(rep.ok, rep.failure);
  }
  for (int d = 1; d <= 2; ++d) {
    const auto rep = verify_promotion_bijection(BoundedAffinePermutation::top_cell(2, 5), d);
    CHECK_MESSAGE(rep.ok, rep.failure);
  }
}

TEST_CASE("promotion bijection for every bounded affine permutation, n <= 5, d <= 2") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& f : enumerate_bounded(k, n))
        for (int d = 1; d <= 2; ++d) {
          const auto rep = verify_promotion_bijection(f, d);
          REQUIRE_MESSAGE(rep.ok, rep.failure);
        }
}
