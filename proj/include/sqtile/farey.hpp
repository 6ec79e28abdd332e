#pragma once

#include "sqtile/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sqtile {

/// Formal fraction num/den with den >= 0; den == 0 encodes the point at infinity.
struct FareyEnd {
  Int num;
  Int den;

  bool infinite() const { return den == 0; }
  Rational value() const { return Rational(num, den); }  // finite ends only
};

/// Stern-Brocot interval (p1/q1, p2/q2) with p2*q1 - p1*q2 == 1. The word records the
/// path from the root (0/1, 1/0); letters apply left to right, 'L' keeps the lower
/// endpoint and 'R' keeps the upper one.
struct FareyInterval {
  FareyEnd lower;
  FareyEnd upper;
  std::string word;

  static FareyInterval root();

  FareyInterval child(char side) const;  // side is 'L' or 'R'
  FareyInterval parent() const;          // throws at the root

  bool finite() const { return !upper.infinite(); }
  Rational mediant() const;
  Rational length() const;  // finite intervals only

  bool contains_open(const Rational& x) const;
  bool contains_closed(const Rational& x) const;
  Int determinant() const;  // p2*q1 - p1*q2
  std::size_t depth() const { return word.size(); }
};

/// Interval obtained by applying `word` to the root.
FareyInterval farey_interval_of_word(const std::string& word);

struct LocateResult {
  FareyInterval interval;
  /// True when x was met exactly as a mediant on the way down; from that point the
  /// chain keeps x as an endpoint rather than choosing a side silently.
  bool terminal = false;
};

/// First interval on the descending chain toward x that satisfies `stop`.
LocateResult farey_locate(const Rational& x, const std::function<bool(const FareyInterval&)>& stop,
                          std::size_t max_depth = 100000);

struct BridgeResult {
  FareyInterval interval;   ///< contains both x and k/p, endpoints bounded away by 1/p
  FareyInterval deep;       ///< the chain interval the search backed up from
  int backup_levels = 0;
  bool q_bound_ok = false;  ///< q1, q2 >= sqrt(p) / ((n+1)(n+2)^((n+2)/2)), checked exactly
};

/// Wide interval around an n-aloof number x (given by a continued fraction prefix with
/// quotients <= n) that also captures k/p, following the geometric-shrinkage argument:
/// descend to the first chain interval of length < (n+1)(n+2)/p, then back up at most
/// n+1 levels until both endpoints are at distance >= 1/p.
/// Requires |k/p - x| < 1/p. Throws if the prefix is too short or no backup level works.
BridgeResult farey_bridge(const std::vector<int>& aloof_prefix, const Int& k, const Int& p, int n);

}  // namespace sqtile
