#pragma once

#include "sqtile/rational.hpp"

#include <vector>

namespace sqtile {

/// Finite continued fraction [a0; a1, ..., ak] with a0 >= 0 and ai >= 1 for i >= 1.
/// Canonical form has the final quotient >= 2 whenever the length exceeds 1.
struct ContinuedFraction {
  std::vector<Int> quotients;
  bool canonical = true;

  Rational value() const;
  Int quotient_sum() const;
  std::size_t size() const { return quotients.size(); }
};

/// Continued fraction expansion of a positive rational, in canonical form.
/// Throws std::invalid_argument for x <= 0.
ContinuedFraction cf_expand(const Rational& x);

/// Approximants p_k/q_k of a continued fraction, one per quotient.
std::vector<Rational> approximants(const ContinuedFraction& cf);

/// Number of squares the greedy algorithm uses on a p x q rectangle:
/// the sum of the partial quotients of the aspect ratio.
Int greedy_cost(const Int& p, const Int& q);

}  // namespace sqtile
