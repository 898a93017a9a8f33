// Sanity checks on the reference implementations themselves.
#include "doctest.h"
#include "oracle.hpp"

using namespace positroid;

TEST_CASE("Bruhat oracle") {
  const oracle::BruhatOracle bo(4);
  CHECK(bo.size() == 24);
  for (int a = 0; a < bo.size(); ++a) {
    CHECK(bo.id(bo.perm(a)) == a);
    CHECK(bo.leq(Permutation::identity(4), bo.perm(a)));
    CHECK(bo.leq(bo.perm(a), Permutation::longest(4)));
  }
  // 2143 and 3142 vs 1432: length-increasing transposition chains.
  CHECK(bo.leq(Permutation({2, 1, 4, 3}), Permutation({3, 1, 4, 2})));
  CHECK_FALSE(bo.leq(Permutation({2, 1, 4, 3}), Permutation({1, 4, 3, 2})));
  CHECK(bo.coset({1, 2}).size() == 4);
}

TEST_CASE("counts") {
  CHECK(oracle::ssyt_count(4, 2, 2) == 20);
  CHECK(oracle::ssyt_count(5, 1, 3) == 35);
  CHECK(oracle::ssyt_count(6, 3, 1) == 20);
  // Decorated permutations: sum over j of n!/j!.
  const long long decorated[] = {1, 2, 5, 16, 65};
  for (int n = 1; n <= 4; ++n) {
    long long total = 0;
    for (int k = 0; k <= n; ++k) total += static_cast<long long>(oracle::bounded_windows(k, n).size());
    CHECK(total == decorated[n]);
  }
}

TEST_CASE("Bender-Knuth involutions") {
  for (const auto& m : enumerate_B(5, 2, 3)) {
    const auto t = std::get<Tableau>(to_tableau(m));
    for (int i = 1; i < 5; ++i) {
      const auto s = oracle::bender_knuth(t, i);
      CHECK(oracle::is_semistandard(s));
      CHECK(oracle::bender_knuth(s, i) == t);
    }
  }
}

TEST_CASE("essential scan keeps trivial entries") {
  // Full Grassmannian: every (i, i+n) window is trivially essential-free.
  const auto raw = oracle::essential_scan({3, 4, 5, 6}, 4);
  for (const auto& e : raw) CHECK(e.rank >= std::min(e.j - e.i + 1, 2));
}
