#include "jiso/combinatorics.hpp"

#include <array>
#include <limits>
#include <stdexcept>
#include <string>

namespace jiso {

namespace {

// All C(a,b) for a <= 64 fit in 64 bits (C(64,32) < 2^64), so a full Pascal
// table covers every graph-sized argument.
struct PascalTable {
  std::array<std::array<std::uint64_t, kMaxGroundSet + 1>, kMaxGroundSet + 1>
      c{};
  PascalTable() {
    for (int a = 0; a <= kMaxGroundSet; ++a) {
      c[a][0] = 1;
      for (int b = 1; b <= a; ++b) {
        c[a][b] = c[a - 1][b - 1] + (b <= a - 1 ? c[a - 1][b] : 0);
      }
    }
  }
};

const PascalTable& pascal() {
  static const PascalTable table;
  return table;
}

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

}  // namespace

Bigint binom(long long a, long long b) {
  if (a < 0) {
    throw std::invalid_argument("binom: negative upper argument");
  }
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Bigint result = 1;
  for (long long i = 0; i < b; ++i) {
    result *= (a - i);
    result /= (i + 1);
  }
  return result;
}

std::uint64_t binom_capped(long long a, long long b, std::uint64_t cap) {
  if (a < 0) {
    throw std::invalid_argument("binom: negative upper argument");
  }
  if (b < 0 || b > a) return 0;
  if (a <= kMaxGroundSet) {
    std::uint64_t v = pascal().c[a][b];
    return v < cap ? v : cap;
  }
  if (b > a - b) b = a - b;
  // C(a,i+1) = C(a,i) * (a-i) / (i+1); the division at each step is exact.
  unsigned __int128 v = 1;
  for (long long i = 0; i < b; ++i) {
    v = v * static_cast<unsigned __int128>(a - i) /
        static_cast<unsigned __int128>(i + 1);
    if (v >= cap) return cap;
  }
  return static_cast<std::uint64_t>(v);
}

std::uint64_t binom_u64(long long a, long long b) {
  std::uint64_t v = binom_capped(a, b, kU64Max);
  if (v == kU64Max && binom(a, b) != Bigint(kU64Max)) {
    throw std::overflow_error("binom_u64: C(" + std::to_string(a) + "," +
                              std::to_string(b) + ") exceeds 64 bits");
  }
  return v;
}

Bigint BinomialRep::value() const {
  Bigint sum = 0;
  for (const auto& [ki, level] : terms) {
    sum += binom(static_cast<long long>(ki), level);
  }
  return sum;
}

BinomialRep binomial_representation(std::uint64_t k, int m) {
  if (k == 0) throw std::invalid_argument("binomial_representation: k >= 1");
  if (m < 1) throw std::invalid_argument("binomial_representation: m >= 1");
  BinomialRep rep;
  rep.m = m;
  std::uint64_t rest = k;
  for (int i = 0; i < m && rest > 0; ++i) {
    int level = m - i;
    std::uint64_t ki;
    if (level == 1) {
      ki = rest;
    } else {
      // Largest c with C(c, level) <= rest: galloping then binary search on
      // the capped evaluation, which cannot overflow.
      std::uint64_t cap = rest == kU64Max ? kU64Max : rest + 1;
      long long lo = level;  // C(level, level) = 1 <= rest
      long long hi = level + 1;
      while (binom_capped(hi, level, cap) <= rest) {
        lo = hi;
        hi *= 2;
      }
      while (lo + 1 < hi) {
        long long mid = lo + (hi - lo) / 2;
        if (binom_capped(mid, level, cap) <= rest) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      ki = static_cast<std::uint64_t>(lo);
    }
    if (!rep.terms.empty() && ki >= rep.terms.back().first) {
      throw std::logic_error(
          "binomial_representation: cascade not strictly decreasing");
    }
    rep.terms.emplace_back(ki, level);
    rest -= binom_capped(static_cast<long long>(ki), level, kU64Max);
  }
  if (rest != 0) {
    throw std::logic_error("binomial_representation: residue after m terms");
  }
  return rep;
}

bool is_critical(std::uint64_t k, int m) {
  return binomial_representation(k, m).r() == m - 1;
}

std::uint64_t colex_rank(Mask x) {
  std::uint64_t rank = 0;
  int j = 0;
  while (x != 0) {
    int pos = std::countr_zero(x);  // 0-based position of the next element
    ++j;
    rank += pascal().c[pos][j];
    x &= x - 1;
  }
  return rank;
}

Mask colex_unrank(std::uint64_t rank, int m) {
  if (m < 0 || m > kMaxGroundSet) {
    throw std::invalid_argument("colex_unrank: m outside [0,64]");
  }
  Mask x = 0;
  std::uint64_t rest = rank;
  for (int j = m; j >= 1; --j) {
    // Largest position c with C(c,j) <= rest; c = j-1 (where C = 0) is the
    // floor, so the scan always lands.
    int c = j - 1;
    for (int cand = kMaxGroundSet - 1; cand >= j - 1; --cand) {
      if (pascal().c[cand][j] <= rest) {
        c = cand;
        break;
      }
    }
    if (has_element(x, c + 1)) {
      throw std::invalid_argument("colex_unrank: rank exceeds width 64");
    }
    rest -= pascal().c[c][j];
    x = with_element(x, c + 1);
  }
  if (rest != 0) {
    throw std::invalid_argument("colex_unrank: rank exceeds width 64");
  }
  return x;
}

Family initial_segment(std::uint64_t k, int m) {
  if (k == 0) throw std::invalid_argument("initial_segment: k >= 1");
  if (m < 1 || m > kMaxGroundSet) {
    throw std::invalid_argument("initial_segment: m outside [1,64]");
  }
  std::vector<Mask> members;
  members.reserve(k);
  for (std::uint64_t j = 0; j < k; ++j) {
    members.push_back(colex_unrank(j, m));
  }
  // The segment is downward closed, so the last member carries the largest
  // element used.
  int n = std::max(max_element(members.back()), m);
  return Family::of(n, m, std::move(members));
}

}  // namespace jiso
