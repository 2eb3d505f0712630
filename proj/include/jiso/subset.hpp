#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace jiso {

// An m-subset of [n] = {1,...,n} stored as a bitmask: bit i-1 <=> element i.
// One machine word fixes the ground set at n <= 64; everything fails loudly
// beyond that.
using Mask = std::uint64_t;

inline constexpr int kMaxGroundSet = 64;

// Throws std::invalid_argument unless 1 <= n <= 64.
void check_ground_set(int n);

inline int popcount(Mask x) { return std::popcount(x); }

inline bool has_element(Mask x, int element) {
  return (x >> (element - 1)) & 1u;
}

inline Mask with_element(Mask x, int element) {
  return x | (Mask{1} << (element - 1));
}

inline Mask without_element(Mask x, int element) {
  return x & ~(Mask{1} << (element - 1));
}

// Largest element of x, 0 for the empty set.
inline int max_element(Mask x) {
  return x == 0 ? 0 : 64 - std::countl_zero(x);
}

// Smallest element of x, 0 for the empty set.
inline int min_element(Mask x) {
  return x == 0 ? 0 : std::countr_zero(x) + 1;
}

// {1,...,t}.
inline Mask full_mask(int t) {
  return t == 0 ? 0 : (t >= 64 ? ~Mask{0} : (Mask{1} << t) - 1);
}

// Ascending 1-based element list.
std::vector<int> elements(Mask x);

Mask mask_of(std::initializer_list<int> elems);
Mask mask_of(const std::vector<int>& elems);

// "1,3,5"; empty set prints as "-".
std::string format_subset(Mask x);

// Colex order: X <= Y iff the maximum element of the symmetric difference
// lies in Y. On equal-cardinality masks this is plain integer order.
// Returns -1, 0 or +1; throws on cardinality mismatch.
int colex_compare(Mask x, Mask y);

}  // namespace jiso
