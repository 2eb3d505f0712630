#pragma once

// Brute-force reference implementations for tests. These avoid the library's
// rank/unrank and incremental machinery on purpose: expected values come from
// first definitions, the implementation under test takes the fast route.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "jiso/family.hpp"
#include "jiso/subset.hpp"

namespace jiso::testing {

// All m-subsets of [n], built by the index-vector successor and sorted by
// the definitional colex comparison (max of the symmetric difference).
inline std::vector<Mask> naive_level(int n, int m) {
  std::vector<Mask> out;
  if (m == 0) {
    out.push_back(0);
    return out;
  }
  if (m > n) return out;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i + 1;
  while (true) {
    Mask x = 0;
    for (int e : idx) x |= Mask{1} << (e - 1);
    out.push_back(x);
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    Mask diff = a ^ b;
    if (diff == 0) return false;
    Mask top = Mask{1} << (63 - std::countl_zero(diff));
    return (b & top) != 0;
  });
  return out;
}

inline bool naive_adjacent(Mask a, Mask b) { return popcount(a ^ b) == 2; }

// Boundary by scanning the whole level for distance-one outsiders.
inline std::vector<Mask> naive_boundary(const Family& S) {
  std::vector<Mask> out;
  for (Mask v : naive_level(S.n, S.m)) {
    if (S.contains(v)) continue;
    for (Mask x : S.members) {
      if (naive_adjacent(v, x)) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

inline std::vector<Mask> naive_lower_shadow(const Family& S) {
  std::vector<Mask> out;
  for (Mask y : naive_level(S.n, S.m - 1)) {
    for (Mask x : S.members) {
      if ((y & x) == y) {
        out.push_back(y);
        break;
      }
    }
  }
  return out;
}

struct NaiveMu {
  std::uint64_t mu = 0;
  Family witness;
};

// Minimum boundary over all k-subsets of the vertex level, first witness in
// lexicographic order of member lists kept on ties.
inline NaiveMu naive_mu(int n, int m, std::uint64_t k) {
  std::vector<Mask> level = naive_level(n, m);
  std::size_t total = level.size();
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  NaiveMu best;
  bool first = true;
  while (true) {
    std::vector<Mask> members;
    members.reserve(k);
    for (std::size_t i : idx) members.push_back(level[i]);
    Family fam = Family::of(n, m, members);
    std::uint64_t b = naive_boundary(fam).size();
    if (first || b < best.mu) {
      best.mu = b;
      best.witness = fam;
      first = false;
    }
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == total - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

}  // namespace jiso::testing
