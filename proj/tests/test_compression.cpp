#include <doctest.h>

#include <random>

#include "jiso/combinatorics.hpp"
#include "jiso/compression.hpp"
#include "jiso/johnson.hpp"
#include "oracles.hpp"

using namespace jiso;

namespace {

Family random_family(std::mt19937_64& rng, int n, int m, int cap = 20) {
  std::vector<Mask> level = testing::naive_level(n, m);
  std::shuffle(level.begin(), level.end(), rng);
  std::size_t k = 1 + rng() % std::min<std::size_t>(level.size(), cap);
  level.resize(k);
  return Family::of(n, m, level);
}

}  // namespace

TEST_CASE("shift basics") {
  Family S = Family::of(4, 2, {mask_of({3, 4})});
  CHECK(shift(S, 3, 1).members == std::vector<Mask>{mask_of({1, 4})});

  // Collision clause: both x and its image present leaves x in place.
  Family both = Family::of(4, 2, {mask_of({3, 4}), mask_of({1, 4})});
  CHECK(shift(both, 3, 1) == both);

  CHECK_THROWS_AS(shift(S, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(shift(S, 0, 1), std::invalid_argument);
}

TEST_CASE("shift preserves cardinality and contracts the ball") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);  // n <= 9
    int m = 1 + static_cast<int>(rng() % (n - 1));
    Family S = random_family(rng, n, m);
    int i = 1 + static_cast<int>(rng() % n);
    int j = 1 + static_cast<int>(rng() % (n - 1));
    if (j >= i) ++j;
    Family T = shift(S, i, j);
    CHECK(T.size() == S.size());
    CHECK(boundary(T).size() <= boundary(S).size());
    CHECK(family_subset_of(ball(T), shift(ball(S), i, j)));
  }
}

TEST_CASE("shift contraction, exhaustive over small instances") {
  // Every family of J(4,2) and J(5,2), every ordered pair (i,j).
  for (int n : {4, 5}) {
    std::vector<Mask> level = testing::naive_level(n, 2);
    for (Mask bits = 1; bits < (Mask{1} << level.size()); ++bits) {
      std::vector<Mask> members;
      for (std::size_t v = 0; v < level.size(); ++v) {
        if ((bits >> v) & 1) members.push_back(level[v]);
      }
      Family S = Family::of(n, 2, members);
      std::uint64_t base = boundary(S).size();
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          Family T = shift(S, i, j);
          CHECK(T.size() == S.size());
          CHECK(boundary(T).size() <= base);
        }
      }
    }
  }
}

TEST_CASE("weight drops under downward shifts, equality iff fixed") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    int m = 1 + static_cast<int>(rng() % (n - 1));
    Family S = random_family(rng, n, m);
    int j = 1 + static_cast<int>(rng() % (n - 1));
    int i = j + 1 + static_cast<int>(rng() % (n - j));
    Family T = shift(S, i, j);
    CHECK(family_weight(T) <= family_weight(S));
    CHECK((family_weight(T) == family_weight(S)) == (T == S));
  }
}

TEST_CASE("is_compressed") {
  CHECK_FALSE(is_compressed(Family::of(3, 2, {mask_of({2, 3})})));
  CHECK(is_compressed(Family::of(4, 2, testing::naive_level(4, 2))));

  SUBCASE("colex segments are shift-stable, n <= 8") {
    for (int m = 1; m <= 4; ++m) {
      for (std::uint64_t k = 1; k <= binom_u64(8, m); ++k) {
        Family seg = initial_segment(k, m).embedded(8);
        CHECK(is_compressed(seg));
      }
    }
  }
}

TEST_CASE("compress") {
  Family S = Family::of(4, 2, {mask_of({2, 3})});
  CHECK(compress(S).members == std::vector<Mask>{mask_of({1, 2})});

  SUBCASE("segments are fixpoints") {
    for (std::uint64_t k : {1, 4, 9, 14}) {
      Family seg = initial_segment(k, 3).embedded(7);
      CHECK(compress(seg) == seg);
    }
  }

  SUBCASE("cardinality preserved, result compressed, weight never grows") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
      int n = 2 + static_cast<int>(rng() % 8);
      int m = 1 + static_cast<int>(rng() % (n - 1));
      Family S = random_family(rng, n, m);
      Family C = compress(S);
      CHECK(C.size() == S.size());
      CHECK(is_compressed(C));
      CHECK(family_weight(C) <= family_weight(S));
      CHECK(boundary(C).size() <= boundary(S).size());
      CHECK(compress(C) == C);
    }
  }
}

TEST_CASE("support bound") {
  Family S = compress(Family::of(
      6, 2, {mask_of({5, 6}), mask_of({2, 6}), mask_of({1, 4})}));
  CHECK(support_bound(S) <= 2 + 3 + 1);

  Family level4 = initial_segment(binom_u64(4, 2), 2);
  CHECK(support_bound(level4) == 4);

  Family vertex = Family::of(5, 3, {mask_of({1, 2, 3})});
  CHECK(support_bound(vertex) == 3);

  CHECK_THROWS_AS(support_bound(Family::of(3, 2, {mask_of({2, 3})})),
                  std::invalid_argument);

  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    int m = 1 + static_cast<int>(rng() % (n - 1));
    Family C = compress(random_family(rng, n, m));
    CHECK(support_bound(C) <= m + static_cast<int>(C.size()) + 1);
  }
}
