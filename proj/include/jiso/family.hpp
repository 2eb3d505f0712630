#pragma once

#include <cstddef>
#include <vector>

#include "jiso/subset.hpp"

namespace jiso {

// A deduplicated set of m-subsets of [n], i.e. a vertex set of J(n,m).
// Members are kept strictly increasing as masks, which is exactly colex
// order, so families compare and merge deterministically.
struct Family {
  int n = 0;
  int m = 0;
  std::vector<Mask> members;

  // Validates, sorts and deduplicates. Throws std::invalid_argument if a
  // member has the wrong cardinality or support outside [n].
  static Family of(int n, int m, std::vector<Mask> members);

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  bool contains(Mask x) const;

  // Same members over a larger ground set.
  Family embedded(int bigger_n) const;

  // Largest element used by any member; 0 for the empty family.
  int support_max() const;

  bool operator==(const Family& other) const {
    return n == other.n && m == other.m && members == other.members;
  }
};

// Merge-based set algebra; both sides must share n and m.
Family family_union(const Family& a, const Family& b);
Family family_difference(const Family& a, const Family& b);
bool family_subset_of(const Family& a, const Family& b);

}  // namespace jiso
