#pragma once

#include "sqtile/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sqtile {

struct StreamExhausted : std::runtime_error {
  Int partial_sum;
  int digits_consumed;
  StreamExhausted(Int partial, int consumed)
      : std::runtime_error("digit stream exhausted before the stopping rule fired"),
        partial_sum(std::move(partial)),
        digits_consumed(consumed) {}
};

struct CostSample {
  Int T;           // sum of partial quotients up to the stopping index
  int stop_index;  // k of the first approximant with |q_k x - p_k| < eps
};

/// Greedy cost of covering an x-by-1 rectangle except an eps-corner, evaluated on the
/// continued fraction digits of x: T = a0+...+ak at the first k with |q_k x - p_k| < eps.
/// With exact_stream the digits are the full expansion of a rational; otherwise the
/// stopping rule is certified against all continuations and StreamExhausted is thrown
/// when the prefix cannot decide.
CostSample t_epsilon(const std::vector<Int>& digits, const Rational& eps, bool exact_stream = true);

/// Continued fraction digits of a rational in (0, 1) or any positive rational.
std::vector<Int> cf_digits(const Rational& x);

struct EpsSummary {
  Rational epsilon;
  double median = 0, q1 = 0, q3 = 0;  // of T / (log(1/eps) loglog(1/eps))
  double iqr = 0;
};

struct McSummary {
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<EpsSummary> per_eps;
  std::vector<std::vector<Int>> costs;  // costs[e][i] = T for epsilon e, sample i
};

/// Seeded Monte Carlo over x uniform in (0,1): samples a 320-bit dyadic rational,
/// expands its continued fraction, evaluates the stopping cost for each epsilon.
/// Deterministic for a fixed seed.
McSummary peres_mc(int samples, const std::vector<Rational>& epsilons, std::uint64_t seed);

}  // namespace sqtile
