#include "jiso/subset.hpp"

#include <sstream>
#include <stdexcept>

namespace jiso {

void check_ground_set(int n) {
  if (n < 1 || n > kMaxGroundSet) {
    throw std::invalid_argument("ground set size must be in [1," +
                                std::to_string(kMaxGroundSet) +
                                "], got " + std::to_string(n));
  }
}

std::vector<int> elements(Mask x) {
  std::vector<int> out;
  out.reserve(popcount(x));
  while (x != 0) {
    int e = std::countr_zero(x) + 1;
    out.push_back(e);
    x &= x - 1;
  }
  return out;
}

static Mask mask_of_checked(const int* begin, std::size_t count) {
  Mask x = 0;
  for (std::size_t i = 0; i < count; ++i) {
    int e = begin[i];
    if (e < 1 || e > kMaxGroundSet) {
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " outside [1,64]");
    }
    Mask bit = Mask{1} << (e - 1);
    if (x & bit) {
      throw std::invalid_argument("duplicate element " + std::to_string(e));
    }
    x |= bit;
  }
  return x;
}

Mask mask_of(std::initializer_list<int> elems) {
  return mask_of_checked(elems.begin(), elems.size());
}

Mask mask_of(const std::vector<int>& elems) {
  return mask_of_checked(elems.data(), elems.size());
}

std::string format_subset(Mask x) {
  if (x == 0) return "-";
  std::ostringstream out;
  bool first = true;
  for (int e : elements(x)) {
    if (!first) out << ',';
    out << e;
    first = false;
  }
  return out.str();
}

int colex_compare(Mask x, Mask y) {
  if (popcount(x) != popcount(y)) {
    throw std::invalid_argument("colex_compare: cardinality mismatch");
  }
  // The top bit of x^y is the max of the symmetric difference; it lies in
  // the numerically larger mask.
  if (x == y) return 0;
  return x < y ? -1 : 1;
}

}  // namespace jiso
