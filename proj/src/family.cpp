#include "jiso/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace jiso {

Family Family::of(int n, int m, std::vector<Mask> members) {
  check_ground_set(n);
  if (m < 0 || m > n) {
    throw std::invalid_argument("level m must be in [0,n]");
  }
  Mask ground = full_mask(n);
  for (Mask x : members) {
    if (popcount(x) != m) {
      throw std::invalid_argument("member has cardinality " +
                                  std::to_string(popcount(x)) +
                                  ", expected " + std::to_string(m));
    }
    if ((x & ~ground) != 0) {
      throw std::invalid_argument("member uses elements beyond n=" +
                                  std::to_string(n));
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Family fam;
  fam.n = n;
  fam.m = m;
  fam.members = std::move(members);
  return fam;
}

bool Family::contains(Mask x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

Family Family::embedded(int bigger_n) const {
  if (bigger_n < n) {
    throw std::invalid_argument("embedded: ground set cannot shrink");
  }
  check_ground_set(bigger_n);
  Family fam = *this;
  fam.n = bigger_n;
  return fam;
}

int Family::support_max() const {
  // Members are sorted as integers, so the last one holds the top bit.
  return members.empty() ? 0 : max_element(members.back());
}

static void check_compatible(const Family& a, const Family& b) {
  if (a.n != b.n || a.m != b.m) {
    throw std::invalid_argument("family operands disagree on (n,m)");
  }
}

Family family_union(const Family& a, const Family& b) {
  check_compatible(a, b);
  Family out;
  out.n = a.n;
  out.m = a.m;
  out.members.reserve(a.size() + b.size());
  std::set_union(a.members.begin(), a.members.end(), b.members.begin(),
                 b.members.end(), std::back_inserter(out.members));
  return out;
}

Family family_difference(const Family& a, const Family& b) {
  check_compatible(a, b);
  Family out;
  out.n = a.n;
  out.m = a.m;
  std::set_difference(a.members.begin(), a.members.end(), b.members.begin(),
                      b.members.end(), std::back_inserter(out.members));
  return out;
}

bool family_subset_of(const Family& a, const Family& b) {
  check_compatible(a, b);
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(),
                       a.members.end());
}

}  // namespace jiso
