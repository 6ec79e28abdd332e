#pragma once

#include "sqtile/farey.hpp"
#include "sqtile/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sqtile {

/// Cylinder of continued fractions extending a fixed prefix. Children append one more
/// quotient. The interval is open; its closure meets the closure of sibling cylinders
/// only at endpoints.
struct Cylinder {
  std::vector<int> prefix;  // prefix[0] may be 0 for values below 1
  Int h1 = 1, h0 = 0;       // convergent numerators (current, previous)
  Int k1 = 0, k0 = 1;       // convergent denominators
  Rational lo, hi;

  static Cylinder of_prefix(const std::vector<int>& prefix);
  Cylinder child(int a) const;
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return x > lo && x < hi; }
  Rational distance(const Rational& x) const;
  std::string word() const;
  FareyInterval interval() const { return farey_interval_of_word(word()); }
};

/// Finite-depth cover of the n-aloof numbers: at depth d, all cylinders whose d
/// leading quotients are in [1, n] (plus the leading zero for values below one).
struct AloofCover {
  int n = 0;
  int depth = 0;
  std::vector<std::vector<Cylinder>> levels;  // levels[i] = depth i+1, sorted by lo

  const std::vector<Cylinder>& deepest() const { return levels.back(); }
  std::vector<FareyInterval> intervals() const;
  /// Maximal closed intervals covered at the deepest level (touching cylinders merged).
  std::vector<std::pair<Rational, Rational>> components() const;
};

AloofCover aloof_cover(int n, int depth, std::size_t max_intervals = 500000);

struct GapCheck {
  Rational gap_lo, gap_hi;
  Rational piece_lo, piece_hi;  // enclosing interval at removal time
  Rational left_len, right_len;
  bool len_ok = false;
  bool ratio_ok = false;
};

/// Result of testing the (K, eps)-thickness conditions on the cover's gap structure.
/// pass means some removal order satisfies both conditions for every gap; the checks
/// are listed in that order. On failure the unresolved gaps are reported.
struct ThicknessReport {
  Rational K;
  Rational epsilon;
  bool pass = false;
  std::vector<GapCheck> checks;
  std::size_t unresolved = 0;
};

ThicknessReport thickness_check(const AloofCover& cover, const Rational& K, const Rational& eps);

struct SubdivideError : std::runtime_error {
  int required_depth;
  SubdivideError(const std::string& msg, int depth) : std::runtime_error(msg), required_depth(depth) {}
};

/// Splits a cover component [lo, hi] into consecutive intervals J_1..J_{k+1} by removing
/// whole gaps, every piece of length in (|C|/5N, |C|/N]. Throws SubdivideError when the
/// cover is too shallow to provide gaps at the needed scale.
std::vector<std::pair<Rational, Rational>> subdivide_gaps(const Rational& lo, const Rational& hi,
                                                          const AloofCover& cover, int N);

struct HallSplit {
  Rational x;
  Int p = 1;
  Int k1 = 0, k2 = 0;
  Cylinder cert1, cert2;  // x1 in cert1, x2 in cert2, x - cert1 contains cert2
  std::vector<std::pair<Rational, Rational>> widths_trace;
  std::uint64_t nodes = 0;
};

/// Writes x as a sum of two n-aloof numbers, witnessed by nested cylinders refined until
/// both widths are below the resolution. k1 is chosen so that every point of cert1 is
/// within 1/p of k1/p (and likewise k2 = x*p - k1 for cert2).
HallSplit hall_decompose(const Rational& x, int n, const Rational& resolution,
                         std::uint64_t node_budget = 400000);

struct AloofCert {
  Cylinder cyl;
  Rational dist;  // distance from the certified value to the cylinder
};

/// Certificate that some n-aloof number lies within tol of r: a cylinder with quotients
/// bounded by n satisfying dist(r, cyl) + width(cyl) < tol.
std::optional<AloofCert> certify_near_aloof(const Rational& r, int n, const Rational& tol,
                                            std::uint64_t budget = 100000);

struct EllSplitError : std::runtime_error {
  Int best_t;
  int best_certified;
  EllSplitError(const std::string& msg, Int t, int c)
      : std::runtime_error(msg), best_t(std::move(t)), best_certified(c) {}
};

struct EllSplitResult {
  Int t;
  AloofCert r1, r2, r3;
};

struct EllSplitConfig {
  Int scan_bound = 1000000;
  std::uint64_t certify_budget = 100000;
  int prune_cover_depth = 4;
};

/// Integer split position t for an ell with edges (a, b, c, d), ratios within [1/8, 8]:
/// t/(b+d), (a-t)/b and (a+c-t)/d are within 1/(b+d), 1/b, 1/d of n-aloof numbers,
/// each witnessed by a cylinder certificate.
EllSplitResult ell_split_t(const Int& a, const Int& b, const Int& c, const Int& d, int n,
                           const EllSplitConfig& cfg = {});

/// JSON-lines dump of cover intervals: one object per line with word and endpoints.
std::string cover_dump_jsonl(const AloofCover& cover);

}  // namespace sqtile
