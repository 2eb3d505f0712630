#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "jiso/bigint.hpp"
#include "jiso/family.hpp"
#include "jiso/subset.hpp"

namespace jiso {

// C(a,b) for a >= 0, any b; zero when b < 0 or b > a. Exact at any size.
Bigint binom(long long a, long long b);

// Fast path for graph-sized arguments. Throws std::overflow_error if the
// value does not fit in 64 bits.
std::uint64_t binom_u64(long long a, long long b);

// min(C(a,b), cap). Never overflows; used by greedy representation search.
std::uint64_t binom_capped(long long a, long long b, std::uint64_t cap);

// The m-binomial (cascade) representation k = sum_i C(k_i, m-i) with
// k_0 > k_1 > ... > k_r >= m-r > 0.
struct BinomialRep {
  int m = 0;
  // (k_i, m-i) for i = 0..r.
  std::vector<std::pair<std::uint64_t, int>> terms;

  int r() const { return static_cast<int>(terms.size()) - 1; }
  std::uint64_t last_k() const { return terms.back().first; }
  Bigint value() const;
};

// Greedy maximal-k_0 cascade; unique under the constraints above.
// Throws std::invalid_argument for k = 0 or m < 1.
BinomialRep binomial_representation(std::uint64_t k, int m);

// True iff the representation has m terms (r = m-1). Exactly the k for
// which the Shadow Minimization Problem has non-unique minimizers.
bool is_critical(std::uint64_t k, int m);

// Position of x among all popcount(x)-subsets in colex order, starting at 0.
std::uint64_t colex_rank(Mask x);

// Inverse of colex_rank at level m. Throws std::invalid_argument when the
// subset would need an element beyond position 64.
Mask colex_unrank(std::uint64_t rank, int m);

// The first k m-subsets in colex order. The result's ground set is the
// largest element used (at least m).
Family initial_segment(std::uint64_t k, int m);

}  // namespace jiso
