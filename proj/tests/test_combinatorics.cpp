#include <doctest.h>

#include "jiso/combinatorics.hpp"
#include "oracles.hpp"

using namespace jiso;

TEST_CASE("binomial coefficients") {
  CHECK(binom(5, 3) == 10);
  CHECK(binom(4, 0) == 1);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(10, -2) == 0);
  CHECK(binom_u64(5, 3) == 10);
  CHECK(binom_u64(64, 32) == 1832624140942590534ull);
  CHECK(binom(64, 32) == Bigint("1832624140942590534"));
  CHECK_THROWS_AS((void)binom(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)binom_u64(100, 50), std::overflow_error);
  // big values stay exact
  CHECK(binom(200, 100) % 9907 == binom(200, 100) % 9907);
  CHECK(binom(70, 35) == Bigint("112186277816662845432"));
}

TEST_CASE("colex compare matches the definitional order") {
  CHECK(colex_compare(mask_of({1, 2}), mask_of({1, 3})) < 0);
  CHECK(colex_compare(mask_of({2, 3}), mask_of({1, 4})) < 0);
  CHECK(colex_compare(mask_of({1, 3, 5}), mask_of({1, 3, 5})) == 0);
  CHECK(colex_compare(mask_of({1, 4}), mask_of({2, 3})) > 0);
  CHECK_THROWS_AS(colex_compare(mask_of({1}), mask_of({1, 2})),
                  std::invalid_argument);

  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= n; ++m) {
      std::vector<Mask> level = testing::naive_level(n, m);
      for (std::size_t i = 0; i + 1 < level.size(); ++i) {
        CHECK(colex_compare(level[i], level[i + 1]) < 0);
      }
    }
  }
}

TEST_CASE("colex rank/unrank") {
  // Frozen from the brute-force listing of 3-subsets of [5]:
  // {1,2,3} {1,2,4} {1,3,4} {2,3,4} {1,2,5} ...
  CHECK(colex_rank(mask_of({1, 2, 4})) == 1);
  CHECK(colex_rank(mask_of({2, 3, 4})) == 3);
  CHECK(colex_rank(mask_of({1, 2, 3})) == 0);
  CHECK(colex_unrank(4, 3) == mask_of({1, 2, 5}));

  SUBCASE("rank agrees with the naive listing position") {
    for (int n = 1; n <= 9; ++n) {
      for (int m = 1; m <= n; ++m) {
        std::vector<Mask> level = testing::naive_level(n, m);
        for (std::size_t i = 0; i < level.size(); ++i) {
          CHECK(colex_rank(level[i]) == i);
          CHECK(colex_unrank(i, m) == level[i]);
        }
      }
    }
  }

  SUBCASE("roundtrip is exhaustive for n <= 12") {
    for (int n = 1; n <= 12; ++n) {
      for (Mask x = 0; x < (Mask{1} << n); ++x) {
        int m = popcount(x);
        if (m == 0) continue;
        CHECK(colex_unrank(colex_rank(x), m) == x);
      }
    }
  }

  SUBCASE("unrank beyond the word width fails") {
    CHECK_THROWS_AS(colex_unrank(binom_u64(64, 3), 3), std::invalid_argument);
    CHECK(max_element(colex_unrank(binom_u64(64, 3) - 1, 3)) == 64);
  }
}

TEST_CASE("initial segments") {
  CHECK(initial_segment(1, 4).members == std::vector<Mask>{mask_of({1, 2, 3, 4})});

  // 10 = C(5,3): the segment is the full level on [5].
  Family seg10 = initial_segment(10, 3);
  CHECK(seg10.size() == 10);
  CHECK(seg10.n == 5);
  CHECK(seg10.members == testing::naive_level(5, 3));

  // 5 = C(4,3) + C(2,2): all of C([4],3) plus {1,2,5}.
  Family seg5 = initial_segment(5, 3);
  std::vector<Mask> expected = testing::naive_level(4, 3);
  expected.push_back(mask_of({1, 2, 5}));
  std::sort(expected.begin(), expected.end());
  CHECK(seg5.members == expected);

  SUBCASE("segment is downward closed in colex order") {
    for (int m = 1; m <= 4; ++m) {
      for (std::uint64_t k : {1, 2, 5, 11, 20}) {
        Family seg = initial_segment(k, m);
        for (std::uint64_t j = 0; j < k; ++j) {
          CHECK(seg.members[j] == colex_unrank(j, m));
        }
      }
    }
  }
}

TEST_CASE("m-binomial representation") {
  SUBCASE("frozen examples") {
    BinomialRep rep = binomial_representation(10, 3);
    REQUIRE(rep.terms.size() == 1);
    CHECK(rep.terms[0] == std::pair<std::uint64_t, int>{5, 3});

    rep = binomial_representation(40, 3);
    REQUIRE(rep.terms.size() == 3);
    CHECK(rep.terms[0] == std::pair<std::uint64_t, int>{7, 3});
    CHECK(rep.terms[1] == std::pair<std::uint64_t, int>{3, 2});
    CHECK(rep.terms[2] == std::pair<std::uint64_t, int>{2, 1});

    rep = binomial_representation(1, 5);
    REQUIRE(rep.terms.size() == 1);
    CHECK(rep.terms[0] == std::pair<std::uint64_t, int>{5, 5});

    CHECK_THROWS_AS(binomial_representation(0, 3), std::invalid_argument);
  }

  SUBCASE("reconstruction and constraints, m <= 6, k <= 5000") {
    for (int m = 1; m <= 6; ++m) {
      for (std::uint64_t k = 1; k <= 5000; ++k) {
        BinomialRep rep = binomial_representation(k, m);
        CHECK(rep.value() == Bigint(k));
        CHECK(static_cast<int>(rep.terms.size()) <= m);
        for (std::size_t i = 0; i + 1 < rep.terms.size(); ++i) {
          CHECK(rep.terms[i].first > rep.terms[i + 1].first);
        }
        int r = rep.r();
        CHECK(rep.last_k() >= static_cast<std::uint64_t>(m - r));
        CHECK(m - r > 0);
      }
    }
  }

  SUBCASE("segment blocks match the representation term by term") {
    for (int m = 2; m <= 4; ++m) {
      for (std::uint64_t k : {3, 7, 12, 19, 26, 40}) {
        BinomialRep rep = binomial_representation(k, m);
        Family seg = initial_segment(k, m);
        // Block I_j: sets containing {k_j+1+1, ..., k_0+1} with m-j elements
        // in [k_j]. Count members whose top part matches each block tail.
        std::uint64_t counted = 0;
        Mask tail = 0;
        for (int j = 0; j <= rep.r(); ++j) {
          std::uint64_t kj = rep.terms[j].first;
          if (j > 0) {
            // tail picks up k_{j-1}+1
            tail = with_element(tail, static_cast<int>(rep.terms[j - 1].first) + 1);
          }
          Mask low = full_mask(static_cast<int>(kj));
          std::uint64_t block = 0;
          for (Mask x : seg.members) {
            if ((x & ~low) == tail) ++block;
          }
          CHECK(block == binom_u64(static_cast<long long>(kj), m - j));
          counted += block;
        }
        CHECK(counted == k);
      }
    }
  }
}

TEST_CASE("critical cardinalities") {
  CHECK(is_critical(40, 3));
  CHECK_FALSE(is_critical(10, 3));
  CHECK(is_critical(4, 2));
  CHECK(is_critical(3, 3));   // 1 + 1 + 1
  CHECK_FALSE(is_critical(2, 3));
  // m = 1: every k is a single term C(k,1), which is length m.
  CHECK(is_critical(7, 1));
}
