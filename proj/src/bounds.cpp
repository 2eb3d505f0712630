#include "jiso/bounds.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "jiso/combinatorics.hpp"
#include "jiso/johnson.hpp"

namespace jiso {

namespace {

// Generalized binomial C(a,b) = a(a-1)...(a-b+1)/b! for any integer a.
// Needed only here: the g identity runs over t - lambda_i, which goes
// negative for small t, and the polynomial form is what keeps it true.
Bigint binom_signed(const Bigint& a, int b) {
  if (b < 0) return 0;
  Bigint result = 1;
  for (int i = 0; i < b; ++i) {
    result *= a - i;
    result /= (i + 1);
  }
  return result;
}

}  // namespace

std::uint64_t f_bound(std::uint64_t k, int n, int m) {
  check_ground_set(n);
  if (m < 1 || m > n) throw std::invalid_argument("f_bound: need 1 <= m <= n");
  if (k < 1 || Bigint(k) > binom(n, m)) {
    throw std::invalid_argument("f_bound: k outside [1, C(n,m)]");
  }
  BinomialRep rep = binomial_representation(k, m);
  long long k0 = static_cast<long long>(rep.terms[0].first);
  Bigint value = binom(k0, m - 1) * (n - k0);
  for (int i = 1; i <= rep.r(); ++i) {
    long long ki = static_cast<long long>(rep.terms[i].first);
    value += binom(ki, m - i - 1) * (n - k0 - 1) - binom(ki, m - i);
  }
  if (value < 0 || value > Bigint(std::numeric_limits<std::uint64_t>::max())) {
    throw std::overflow_error("f_bound: value outside uint64 range");
  }
  return static_cast<std::uint64_t>(value);
}

std::uint64_t mu_upper_critical(std::uint64_t k, int n, int m) {
  if (!is_critical(k, m)) {
    throw std::invalid_argument(
        "mu_upper_critical: k is not critical; use f_bound");
  }
  std::uint64_t kr = binomial_representation(k, m).last_k();
  return f_bound(k - kr, n, m) + kr;
}

LambdaSeq lambda_sequence(int count) {
  if (count < 2) throw std::invalid_argument("lambda_sequence: count >= 2");
  LambdaSeq seq;
  seq.values.reserve(count);
  seq.values.push_back(-2);
  seq.values.push_back(2);
  // lambda_{m-1} = sum_{j=2}^{m-1} (-1)^j C(lambda_{m-j}+j-1, j) + 1, over
  // nonnegative upper arguments only (lambda_1 and later are positive).
  for (int idx = 2; idx < count; ++idx) {
    int m = idx + 1;
    Bigint value = 1;
    for (int j = 2; j <= m - 1; ++j) {
      Bigint term = binom_signed(seq.values[m - j] + j - 1, j);
      value += (j % 2 == 0) ? term : -term;
    }
    seq.values.push_back(value);
  }
  return seq;
}

Bigint g_value(long long t, int m) {
  if (m < 1 || t < m) throw std::invalid_argument("g_value: need t >= m >= 1");
  return binom(t, m) + 3 * binom(t, m - 1);
}

bool g_identity_check(long long t, int m) {
  if (m < 1 || t < m) {
    throw std::invalid_argument("g_identity_check: need t >= m >= 1");
  }
  LambdaSeq lambda = lambda_sequence(std::max(m, 2));
  Bigint rhs = 1;
  for (int i = 0; i < m; ++i) {
    rhs += binom_signed(Bigint(t) - lambda.values[i], m - i);
  }
  return rhs == g_value(t, m);
}

CounterexampleReport counterexample(int t, int m, int n) {
  if (m < 3) {
    throw std::invalid_argument(
        "counterexample: m = " + std::to_string(m) +
        " gives no strict counterexample (m = 2 yields equality); need m >= 3");
  }
  if (t < m) throw std::invalid_argument("counterexample: need t >= m");
  int n0 = t + 3;
  if (n < n0) {
    throw std::invalid_argument("counterexample: need n >= t+3");
  }
  check_ground_set(n);

  CounterexampleReport report;
  report.t = t;
  report.m = m;
  report.n = n;
  report.k = g_value(t, m);
  LambdaSeq lambda = lambda_sequence(m);
  report.t_above_lambda = Bigint(t) > lambda.values[m - 1];

  // Boundary of the ball of C([t],m) in J(n0,m): the distance-two shell
  // 3*C(t,m-2). For n > n0 both boundaries pick up (n-n0)*|shadow| through
  // the support decomposition, and the shadows agree, so the gap is constant.
  report.shadow_size = binom(t, m - 1) + 3 * binom(t, m - 2);
  report.boundary_construction =
      3 * binom(t, m - 2) + (n - n0) * report.shadow_size;
  if (report.k <= Bigint(std::numeric_limits<std::uint64_t>::max()) &&
      Bigint(report.k) <= binom(n, m)) {
    report.boundary_colex =
        f_bound(static_cast<std::uint64_t>(report.k), n, m);
  } else {
    throw std::invalid_argument("counterexample: k exceeds C(n,m)");
  }
  report.ball_size_construction = report.k + report.boundary_construction;
  report.ball_size_colex = report.k + report.boundary_colex;
  report.strict = report.boundary_construction < report.boundary_colex;

  // Materialize the family when it is desk sized: the full level C([t],m)
  // plus its boundary in J(n0,m), embedded into [n].
  if (report.k <= Bigint(1 << 20)) {
    std::uint64_t level = static_cast<std::uint64_t>(binom(t, m));
    Family core = initial_segment(level, m).embedded(n0);
    report.family = ball(core).embedded(n);
    report.family_materialized = true;
    if (Bigint(report.family.size()) != report.k) {
      throw std::logic_error("counterexample: |ball| != g(t,m)");
    }
  }
  return report;
}

}  // namespace jiso
