#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jiso {

struct VerifyRow {
  std::string instance;
  bool pass = false;
  bool informational = false;  // reported but not counted against the verdict
  std::string detail;
};

struct VerifyReport {
  std::string id;
  std::string title;
  std::vector<VerifyRow> rows;
  bool complete = true;  // false when a budget cut the sweep short

  bool passed() const;
  std::size_t failures() const;
};

// Each battery reproduces one of the claims the tool embodies on desk-scale
// instances; ranges default to the acceptance configuration.

// Unit ball vs colex segment at n = 3(m+1)/2 for odd m; at m = 3 also
// certifies mu_{6,3}(10) = 9 by exhaustive search.
VerifyReport verify_example_1_1(const std::vector<int>& ms = {3, 5, 7});

// mu_{n,2}(k) equals the closed form and f(k,n,2) for every k; exhaustive
// search for n <= 6, compressed search at n = 7.
VerifyReport verify_theorem_1_2(int n_min = 3, int n_max = 7);

// Colex segments optimal for k < m-1 once n >= 2(m-1); also reports the
// abstract's wider k <= m+1 range informationally.
VerifyReport verify_theorem_1_3(const std::vector<int>& ms = {4, 5});

// Colex segments optimal in J(2m-2,m) for every k; m in {3,4}.
VerifyReport verify_prop_4_2(const std::vector<int>& ms = {3, 4});

// The ball of C([t],m) beats the colex segment: boundary 3t vs 3t+1 at
// m = 3, with matching shadow cardinalities.
VerifyReport verify_prop_1_7(int m = 3, const std::vector<int>& ts = {5, 6, 7});

// First eight lambda values and the g identity sweep m in [1,8], t in [m,40].
VerifyReport verify_lambda_sequence();

// f(k,n,m) against enumerated boundaries of colex segments, every (n,m,k)
// with n <= n_max.
VerifyReport verify_f_formula(int n_max = 9);

// Randomized property suites (ball identity, shift contraction, weight
// monotonicity, Kruskal-Katona, slice decomposition, support extrapolation).
VerifyReport verify_properties(std::uint64_t seed = 20240817,
                               int cases_per_suite = 10000);

// n(k,m) threshold estimates for k <= k_max, m <= m_max, plus confirmation
// at n = threshold that colex is optimal whenever r < m-1.
VerifyReport verify_n_threshold(int m_max = 4, int k_max = 6);

// The full acceptance battery in criterion order.
std::vector<VerifyReport> verify_all_desk_scale();

// A fast smoke subset of the above.
std::vector<VerifyReport> verify_all_quick();

}  // namespace jiso
