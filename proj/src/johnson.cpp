#include "jiso/johnson.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "jiso/combinatorics.hpp"

namespace jiso {

namespace {

void check_proper_level(const Family& S) {
  if (S.empty()) throw std::invalid_argument("family must be nonempty");
  if (S.m <= 0 || S.m >= S.n) {
    throw std::invalid_argument("need 0 < m < n for adjacency operations");
  }
}

void append_neighbors(Mask x, int n, std::vector<Mask>& out) {
  Mask ground = full_mask(n);
  Mask outside = ground & ~x;
  for (Mask xs = x; xs != 0; xs &= xs - 1) {
    Mask drop = xs & (~xs + 1);
    Mask base = x ^ drop;
    for (Mask os = outside; os != 0; os &= os - 1) {
      out.push_back(base | (os & (~os + 1)));
    }
  }
}

// Dedupes into canonical order. For small vertex sets a presence bitmap over
// colex ranks skips the sort's duplicate load; the sorted-merge fallback
// keeps large-n-small-family instances cheap.
std::vector<Mask> dedupe(std::vector<Mask> raw, int n, int m) {
  std::uint64_t universe = binom_capped(n, m, std::uint64_t{1} << 24);
  if (universe < (std::uint64_t{1} << 24)) {
    std::vector<std::uint64_t> seen((universe + 63) / 64, 0);
    std::vector<Mask> unique;
    unique.reserve(raw.size());
    for (Mask x : raw) {
      std::uint64_t r = colex_rank(x);
      if (!((seen[r >> 6] >> (r & 63)) & 1u)) {
        seen[r >> 6] |= std::uint64_t{1} << (r & 63);
        unique.push_back(x);
      }
    }
    std::sort(unique.begin(), unique.end());
    return unique;
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return raw;
}

}  // namespace

Family neighbors(Mask x, int n) {
  check_ground_set(n);
  int m = popcount(x);
  if (m == 0 || m == n) {
    throw std::invalid_argument("vertex has no neighbors when m = 0 or m = n");
  }
  std::vector<Mask> out;
  out.reserve(static_cast<std::size_t>(m) * (n - m));
  append_neighbors(x, n, out);
  std::sort(out.begin(), out.end());
  return Family::of(n, m, std::move(out));
}

Family boundary(const Family& S) {
  check_proper_level(S);
  std::vector<Mask> raw;
  raw.reserve(S.size() * static_cast<std::size_t>(S.m) * (S.n - S.m));
  for (Mask x : S.members) {
    append_neighbors(x, S.n, raw);
  }
  std::vector<Mask> nbrs = dedupe(std::move(raw), S.n, S.m);
  std::vector<Mask> out;
  out.reserve(nbrs.size());
  std::set_difference(nbrs.begin(), nbrs.end(), S.members.begin(),
                      S.members.end(), std::back_inserter(out));
  return Family::of(S.n, S.m, std::move(out));
}

Family ball(const Family& S) {
  return family_union(S, boundary(S));
}

Family lower_shadow(const Family& S) {
  if (S.m < 1) throw std::invalid_argument("lower_shadow: need m >= 1");
  std::vector<Mask> raw;
  raw.reserve(S.size() * S.m);
  for (Mask x : S.members) {
    for (Mask xs = x; xs != 0; xs &= xs - 1) {
      raw.push_back(x ^ (xs & (~xs + 1)));
    }
  }
  return Family::of(S.n, S.m - 1, dedupe(std::move(raw), S.n, S.m - 1));
}

Family upper_shadow(const Family& S) {
  if (S.m >= S.n) throw std::invalid_argument("upper_shadow: need m < n");
  std::vector<Mask> raw;
  raw.reserve(S.size() * (S.n - S.m));
  Mask ground = full_mask(S.n);
  for (Mask x : S.members) {
    for (Mask os = ground & ~x; os != 0; os &= os - 1) {
      raw.push_back(x | (os & (~os + 1)));
    }
  }
  return Family::of(S.n, S.m + 1, dedupe(std::move(raw), S.n, S.m + 1));
}

Family upper_shadow(const Family& S, int n) {
  return upper_shadow(S.embedded(n));
}

Family ball_via_shadows(const Family& S) {
  check_proper_level(S);
  Family up_down = lower_shadow(upper_shadow(S));
  Family down_up = upper_shadow(lower_shadow(S), S.n);
  if (!(up_down == down_up)) {
    throw std::logic_error("shadow compositions disagree");
  }
  return up_down;
}

long long weight(Mask x) {
  long long w = 0;
  for (int e : elements(x)) w += e;
  return w;
}

long long family_weight(const Family& S) {
  long long w = 0;
  for (Mask x : S.members) w += weight(x);
  return w;
}

Family distance_two_set(const Family& S) {
  return boundary(ball(S));
}

}  // namespace jiso
