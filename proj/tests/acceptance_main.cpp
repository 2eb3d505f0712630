// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion re-derives its numbers through the verification
// batteries and enforces the stated wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "jiso/verify.hpp"

namespace {

struct Criterion {
  int id;
  std::string text;
  double limit_seconds;  // 0 = no stated limit
  std::function<jiso::VerifyReport()> run;
};

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  std::vector<Criterion> criteria = {
      {1,
       "Example 1.1 in J(6,3): unit ball boundary 9, colex boundary 10, "
       "exhaustive mu = 9",
       60.0, [] { return jiso::verify_example_1_1({3}); }},
      {2,
       "Theorem 1.2: search equals the m=2 closed form and f for n in [3,7], "
       "all k",
       300.0, [] { return jiso::verify_theorem_1_2(3, 7); }},
      {3,
       "Proposition 4.2: colex segments optimal in J(4,3) and J(6,4) for "
       "every k",
       120.0, [] { return jiso::verify_prop_4_2({3, 4}); }},
      {4,
       "Theorem 1.3: mu = f for k < m-1, m in {4,5}, n in [2(m-1), 2m+2] "
       "(plus the abstract's range, informational)",
       300.0, [] { return jiso::verify_theorem_1_3({4, 5}); }},
      {5,
       "Lambda sequence: first 8 values and the g identity for m in [1,8], "
       "t in [m,40]",
       5.0, [] { return jiso::verify_lambda_sequence(); }},
      {6,
       "Proposition 1.7: ball boundary 3t < 3t+1 = colex for m=3, t in "
       "{5,6,7}, equal shadows",
       120.0, [] { return jiso::verify_prop_1_7(3, {5, 6, 7}); }},
      {7,
       "Formula oracle: f(k,n,m) equals the enumerated segment boundary for "
       "every (n,m,k), n <= 9",
       300.0, [] { return jiso::verify_f_formula(9); }},
      {8,
       "Property suites, 10^4 random cases each: ball identity, shift "
       "contraction, weights, Kruskal-Katona, slice and support "
       "decompositions",
       0.0, [] { return jiso::verify_properties(20240817, 10000); }},
      {9,
       "Theorem 1.4 threshold: n(k,m) estimate for k <= 6, m <= 4, colex "
       "confirmed optimal at n = N when r < m-1",
       600.0, [] { return jiso::verify_n_threshold(4, 6); }},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    auto start = clock::now();
    jiso::VerifyReport report = criterion.run();
    double seconds =
        std::chrono::duration<double>(clock::now() - start).count();
    bool in_time = criterion.limit_seconds == 0.0 ||
                   seconds <= criterion.limit_seconds;
    bool pass = report.passed() && in_time;
    std::printf("[%s] criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL",
                criterion.id, criterion.text.c_str(), seconds);
    if (!pass) {
      ++failures;
      if (!in_time) {
        std::printf("       exceeded the %.0fs limit\n",
                    criterion.limit_seconds);
      }
      for (const jiso::VerifyRow& row : report.rows) {
        if (!row.pass && !row.informational) {
          std::printf("       %s: %s\n", row.instance.c_str(),
                      row.detail.c_str());
        } else if (row.informational) {
          std::printf("       (info) %s: %s\n", row.instance.c_str(),
                      row.detail.c_str());
        }
      }
    }
  }
  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
