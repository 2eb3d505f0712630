#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jiso/family.hpp"

namespace jiso {

enum class SearchMode { exhaustive, compressed };

enum class MuMethod { exhaustive, compressed_search, closed_form_m2, formula_tight };

const char* to_string(MuMethod method);

// Node-count limit for searches. Exceeding it yields an inconclusive result
// (certified = false) carrying the best upper bound seen, never an error.
struct SearchBudget {
  std::uint64_t max_families = 100'000'000;
};

struct MuResult {
  int n = 0;
  int m = 0;
  std::uint64_t k = 0;
  std::uint64_t mu = 0;
  Family witness;
  MuMethod method = MuMethod::exhaustive;
  bool certified = false;
  std::uint64_t families_visited = 0;
};

// Exact minimum boundary over k-vertex sets of J(n,m), with the colex-least
// optimal witness. Exhaustive mode walks every k-subset of the vertex set;
// compressed mode walks only shift-stable families (down-sets in the
// componentwise order), which is exact because compression never increases
// the boundary. Both report certified = false when the budget runs out.
MuResult mu_exact(int n, int m, std::uint64_t k, SearchMode mode,
                  SearchBudget budget = {});

// One search pass yielding mu for every cardinality 1..C(n,m) at once
// (index k-1). Only for instances whose whole family tree fits the budget.
std::vector<MuResult> mu_table(int n, int m, SearchMode mode,
                               SearchBudget budget = {});

// Closed form for m = 2: mu = C(n,2) - k - C(n-t,2) with t minimal such
// that k <= C(t,2); the colex segment of length k is an optimal witness.
MuResult mu_m2_closed(int n, std::uint64_t k);

// Dispatch: closed form at m = 2, degree formulas at m = 1 or k = 1, else
// compressed search. Only routes that survive the desk-scale oracles get to
// certify without searching.
MuResult mu_best(int n, int m, std::uint64_t k, SearchBudget budget = {});

// Minimum lower-shadow cardinality over families of k m-sets:
// sum_i C(k_i, m-i-1) over the m-binomial representation (Kruskal-Katona).
std::uint64_t smp_min_shadow(std::uint64_t k, int m);

// For compressed S in J(n,m): the ball of S equals the ball of its
// "n absent" slice S_0, and |B(S)| = |B'(S_0)| + |shadow(S_0)| with B' the
// ball in J(n-1,m). Returns true iff both statements hold.
// Throws if S is not compressed.
bool ball_decomposition_check(const Family& S);

struct ThresholdEstimate {
  std::uint64_t k = 0;
  int m = 0;
  int n0 = 0;                  // m + k + 1
  std::uint64_t mu_at_n0 = 0;  // exact, by search
  std::uint64_t f_at_n0 = 0;
  std::uint64_t threshold = 0;  // n0 - mu + f
};

// Upper bound n(k,m) <= m+k+1 - mu_{m+k+1,m}(k) + f(k,m+k+1,m) for the n
// beyond which colex segments are optimal (r < m-1).
// Throws std::runtime_error if the underlying search exhausts its budget.
ThresholdEstimate n_threshold_estimate(std::uint64_t k, int m,
                                       SearchBudget budget = {});

}  // namespace jiso
