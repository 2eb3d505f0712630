#include "jiso/compression.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "jiso/johnson.hpp"

namespace jiso {

namespace {

// Applies T_ij in place on a sorted member vector; returns true on change.
// All moves are simultaneous: membership tests run against the input family.
bool shift_in_place(std::vector<Mask>& members, int i, int j) {
  Mask bit_i = Mask{1} << (i - 1);
  Mask bit_j = Mask{1} << (j - 1);
  auto in_family = [&](Mask y) {
    return std::binary_search(members.begin(), members.end(), y);
  };
  bool any = false;
  for (Mask x : members) {
    if ((x & bit_i) && !(x & bit_j) && !in_family((x ^ bit_i) | bit_j)) {
      any = true;
      break;
    }
  }
  if (!any) return false;
  std::vector<Mask> moved;
  moved.reserve(members.size());
  for (Mask x : members) {
    if ((x & bit_i) && !(x & bit_j)) {
      Mask y = (x ^ bit_i) | bit_j;
      moved.push_back(in_family(y) ? x : y);
    } else {
      moved.push_back(x);
    }
  }
  std::sort(moved.begin(), moved.end());
  members = std::move(moved);
  return true;
}

}  // namespace

Family shift(const Family& S, int i, int j) {
  if (i == j) throw std::invalid_argument("shift: i and j must differ");
  if (i < 1 || i > S.n || j < 1 || j > S.n) {
    throw std::invalid_argument("shift: i, j must lie in [1,n]");
  }
  std::vector<Mask> members = S.members;
  shift_in_place(members, i, j);
  Family out = Family::of(S.n, S.m, std::move(members));
  if (out.size() != S.size()) {
    throw std::logic_error("shift lost members");  // collision clause broken
  }
  return out;
}

bool is_compressed(const Family& S) {
  // Down-set under single-element decrease: x - e + (e-1) must be a member
  // whenever legal. Adjacent decreases generate all T_ij with i > j.
  for (Mask x : S.members) {
    for (int e = 2; e <= S.n; ++e) {
      if (has_element(x, e) && !has_element(x, e - 1)) {
        Mask y = with_element(without_element(x, e), e - 1);
        if (!S.contains(y)) return false;
      }
    }
  }
  return true;
}

Family compress(const Family& S) {
  std::vector<Mask> members = S.members;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 1; j <= S.n; ++j) {
      for (int i = j + 1; i <= S.n; ++i) {
        if (shift_in_place(members, i, j)) changed = true;
      }
    }
  }
  Family out = Family::of(S.n, S.m, std::move(members));
  if (out.size() != S.size()) {
    throw std::logic_error("compress changed cardinality");
  }
  return out;
}

int support_bound(const Family& S) {
  if (!is_compressed(S)) {
    throw std::invalid_argument("support_bound: family is not compressed");
  }
  int n0 = S.support_max();
  long long limit = static_cast<long long>(S.m) + S.size() + 1;
  if (n0 > limit) {
    throw std::logic_error("support bound m+k+1 violated: n0 = " +
                           std::to_string(n0));
  }
  return n0;
}

}  // namespace jiso
