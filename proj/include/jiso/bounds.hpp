#pragma once

#include <cstdint>
#include <vector>

#include "jiso/bigint.hpp"
#include "jiso/family.hpp"

namespace jiso {

// Boundary cardinality of the colex initial segment of length k in J(n,m):
//   f(k,n,m) = C(k0,m-1)(n-k0) + sum_{i>=1} [ C(ki,m-i-1)(n-k0-1) - C(ki,m-i) ].
// This is the closed-form upper bound for the isoperimetric function.
// Throws when k is outside [1, C(n,m)].
std::uint64_t f_bound(std::uint64_t k, int n, int m);

// Upper bound f(k - k_r, n, m) + k_r for critical k (representation of
// length m). Throws for non-critical k; use f_bound there instead.
std::uint64_t mu_upper_critical(std::uint64_t k, int n, int m);

// lambda_0 = -2, lambda_1 = 2, then
//   lambda_{m-1} = sum_{j=2}^{m-1} (-1)^j C(lambda_{m-j}+j-1, j) + 1.
// Strictly increasing with gaps; grows at least like lambda^2/4.
struct LambdaSeq {
  std::vector<Bigint> values;
};

// First `count` terms; count >= 2.
LambdaSeq lambda_sequence(int count);

// g(t,m) = C(t,m) + 3 C(t,m-1), the cardinality of the ball of the full
// level C([t],m) in J(t+3,m).
Bigint g_value(long long t, int m);

// Checks g(t,m) = sum_{i=0}^{m-1} C(t - lambda_i, m-i) + 1. The right side
// uses the generalized binomial (product formula, valid for negative upper
// argument), which is what makes the identity hold for every t.
bool g_identity_check(long long t, int m);

// The ball S of C([t],m) in J(t+3,m): a set of cardinality g(t,m) whose
// boundary, for m >= 3 and t > lambda_{m-1}, is strictly smaller than the
// colex segment's. Sizes at n > t+3 extrapolate through the support
// decomposition |B(S)| = |B_0(S)| + (n-n_0)|shadow|; the shadows of both
// families agree, so the gap is constant in n.
struct CounterexampleReport {
  int t = 0;
  int m = 0;
  int n = 0;
  Bigint k;                       // g(t,m)
  Family family;                  // the construction, when materializable
  bool family_materialized = false;
  Bigint shadow_size;             // |shadow(S)| = |shadow(I(k))|
  Bigint boundary_construction;   // 3 C(t,m-2), constant in n
  Bigint boundary_colex;          // f(k,n,m)
  Bigint ball_size_construction;  // k + boundary_construction
  Bigint ball_size_colex;         // k + boundary_colex
  bool strict = false;            // construction beats colex
  bool t_above_lambda = false;    // t > lambda_{m-1}; false is a warning
};

// Throws for m < 3 (m = 2 yields equality, not a counterexample) or
// n < t+3. Borderline t <= lambda_{m-1} is reported with a warning flag.
CounterexampleReport counterexample(int t, int m, int n);

}  // namespace jiso
