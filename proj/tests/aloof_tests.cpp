#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqtile/aloof.hpp"
#include "sqtile/quadratic.hpp"

#include <random>
#include <set>

using namespace sqtile;

TEST_CASE("depth-1 cover of the 4-aloof numbers is the eight unit windows") {
  AloofCover cover = aloof_cover(4, 1);
  REQUIRE(cover.deepest().size() == 8);
  std::vector<std::pair<Rational, Rational>> expect = {
      {Rational(1, 5), Rational(1, 4)}, {Rational(1, 4), Rational(1, 3)},
      {Rational(1, 3), Rational(1, 2)}, {Rational(1, 2), Rational(1)},
      {Rational(1), Rational(2)},       {Rational(2), Rational(3)},
      {Rational(3), Rational(4)},       {Rational(4), Rational(5)}};
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(cover.deepest()[i].lo == expect[i].first);
    CHECK(cover.deepest()[i].hi == expect[i].second);
  }
}

TEST_CASE("n=1 cover nests toward the golden ratio") {
  AloofCover cover = aloof_cover(1, 2);
  REQUIRE(cover.deepest().size() == 2);
  // [0;1,1] = (1/2, 2/3) and [1;1] = (3/2, 2)
  CHECK(cover.deepest()[0].lo == Rational(1, 2));
  CHECK(cover.deepest()[0].hi == Rational(2, 3));
  CHECK(cover.deepest()[1].lo == Rational(3, 2));
  CHECK(cover.deepest()[1].hi == Rational(2));
  // golden ratio (1+sqrt5)/2 ~ 1.618 sits inside the upper window
  CHECK(Rational(1618, 1000) > cover.deepest()[1].lo);
  CHECK(Rational(1618, 1000) < cover.deepest()[1].hi);
}

TEST_CASE("cover words have bounded runs and the declared count") {
  AloofCover cover = aloof_cover(4, 3);
  CHECK(cover.deepest().size() == 2 * 4 * 4 * 4);
  for (const auto& c : cover.deepest()) {
    std::string w = c.word();
    int run = 0;
    char cur = 0;
    for (char ch : w) {
      run = (ch == cur) ? run + 1 : 1;
      cur = ch;
      CHECK(run <= 4);
    }
  }
}

TEST_CASE("cover respects the resource cap") {
  CHECK_THROWS_AS(aloof_cover(4, 12, 1000), std::runtime_error);
}

TEST_CASE("interval endpoint-denominator ratio stays within [1/5, 5] on aloof chains") {
  // every interval of the cover contains 4-aloof numbers, so q1/q2 in [1/5,5] and the
  // sibling length ratio |L|/|R| = q2/q1 likewise
  AloofCover cover = aloof_cover(4, 4);
  for (const auto& c : cover.deepest()) {
    FareyInterval I = c.interval();
    REQUIRE(I.finite());
    Rational ratio(I.lower.den, I.upper.den);
    CHECK(ratio >= Rational(1, 5));
    CHECK(ratio <= Rational(5));
    Rational sibling = I.child('L').length() / I.child('R').length();
    CHECK(sibling >= Rational(1, 5));
    CHECK(sibling <= Rational(5));
  }
  // and along the descending chain of random 4-aloof prefixes
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> prefix{static_cast<int>(rng() % 4) + 1};
    for (int i = 0; i < 10; ++i) prefix.push_back(static_cast<int>(rng() % 4) + 1);
    Cylinder c = Cylinder::of_prefix(prefix);
    FareyInterval I = c.interval();
    // walk all ancestors that are finite
    while (!I.word.empty()) {
      if (I.finite()) {
        Rational ratio(I.lower.den, I.upper.den);
        CHECK(ratio >= Rational(1, 5));
        CHECK(ratio <= Rational(5));
      }
      I = I.parent();
    }
  }
}

TEST_CASE("thickness: the n=1 structure fails fast") {
  AloofCover cover = aloof_cover(1, 2);
  ThicknessReport rep = thickness_check(cover, Rational(3), Rational(1, 100));
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.unresolved == 1);
  // single gap (2/3, 3/2) removed from [1/2, 2]: relative length 5/9, flank ratio 1/3
  const GapCheck& g = rep.checks.front();
  CHECK(g.gap_lo == Rational(2, 3));
  CHECK(g.gap_hi == Rational(3, 2));
  CHECK((g.gap_hi - g.gap_lo) / (g.piece_hi - g.piece_lo) == Rational(5, 9));
  CHECK_FALSE(g.len_ok);
  CHECK(g.ratio_ok);  // flanks 1/6 and 1/2
}

TEST_CASE("thickness: n=4 passes (3, 1/2) at shallow depths") {
  for (int depth = 2; depth <= 4; ++depth) {
    AloofCover cover = aloof_cover(4, depth);
    ThicknessReport rep = thickness_check(cover, Rational(3), Rational(1, 2));
    CHECK(rep.pass);
    for (const auto& chk : rep.checks) {
      CHECK(chk.len_ok);
      CHECK(chk.ratio_ok);
    }
  }
  // depth 1: nothing removed yet, vacuous pass
  ThicknessReport flat = thickness_check(aloof_cover(4, 1), Rational(3), Rational(1, 2));
  CHECK(flat.pass);
  CHECK(flat.checks.empty());
}

TEST_CASE("gap endpoints match the hand-computed cylinder boundaries") {
  // depth 2: [1;a] covers (6/5, 2), [0;1,a] covers (1/2, 5/6), [0;2,a] covers (1/3,5/11),
  // [2;a] covers (11/5, 3), and so on; the removed regions sit between them
  AloofCover cover = aloof_cover(4, 2);
  auto comps = cover.components();
  std::set<std::pair<Rational, Rational>> gaps;
  for (std::size_t i = 0; i + 1 < comps.size(); ++i)
    gaps.insert({comps[i].second, comps[i + 1].first});
  CHECK(gaps.size() == 7);
  CHECK(gaps.count({Rational(5, 6), Rational(6, 5)}));    // around 1
  CHECK(gaps.count({Rational(2), Rational(11, 5)}));      // above 2
  CHECK(gaps.count({Rational(3), Rational(16, 5)}));      // above 3
  CHECK(gaps.count({Rational(4), Rational(21, 5)}));      // above 4
  CHECK(gaps.count({Rational(5, 11), Rational(1, 2)}));   // below 1/2
  CHECK(gaps.count({Rational(5, 16), Rational(1, 3)}));   // below 1/3
  CHECK(gaps.count({Rational(5, 21), Rational(1, 4)}));   // below 1/4

  // depth 3 widens the gap above 2 on the left: [1;1,a] covers (3/2, 11/6]
  AloofCover deeper = aloof_cover(4, 3);
  auto comps3 = deeper.components();
  std::set<std::pair<Rational, Rational>> gaps3;
  for (std::size_t i = 0; i + 1 < comps3.size(); ++i)
    gaps3.insert({comps3[i].second, comps3[i + 1].first});
  CHECK(gaps3.count({Rational(11, 6), Rational(11, 5)}));
}

TEST_CASE("subdivide_gaps produces pieces in (|C|/5N, |C|/N]") {
  AloofCover cover = aloof_cover(4, 4);
  auto comps = cover.components();
  Rational lo = comps.front().first, hi = comps.back().second;

  auto one = subdivide_gaps(lo, hi, cover, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].first == lo);
  CHECK(one[0].second == hi);

  Rational total = hi - lo;
  auto pieces = subdivide_gaps(lo, hi, cover, 5);
  CHECK(pieces.size() >= 5);
  Rational covered = 0;
  Rational prev_end = lo;
  for (const auto& [plo, phi] : pieces) {
    CHECK(phi - plo > total / 25);
    CHECK(phi - plo <= total / 5);
    CHECK(plo >= prev_end);
    prev_end = phi;
    covered += phi - plo;
  }
  // piece lengths plus removed gap lengths account for the hull exactly
  Rational gaps_removed = 0;
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
    gaps_removed += pieces[i + 1].first - pieces[i].second;
  CHECK(covered + gaps_removed == total);

  CHECK_THROWS_AS(subdivide_gaps(lo, hi, cover, 100000), SubdivideError);
  try {
    subdivide_gaps(lo, hi, cover, 100000);
  } catch (const SubdivideError& e) {
    CHECK(e.required_depth > cover.depth);
  }
}

TEST_CASE("hall_decompose splits 3/2 with certified cylinders") {
  HallSplit hs = hall_decompose(Rational(3, 2), 4, Rational(1, 100));
  CHECK(hs.cert1.width() < Rational(1, 100));
  CHECK(hs.cert2.width() < Rational(1, 100));
  // the sum of the two cylinders brackets x
  CHECK(hs.cert1.lo + hs.cert2.lo <= Rational(3, 2));
  CHECK(hs.cert1.hi + hs.cert2.hi >= Rational(3, 2));
  // strong form: x - cert2 lies inside cert1
  CHECK(Rational(3, 2) - hs.cert2.hi >= hs.cert1.lo);
  CHECK(Rational(3, 2) - hs.cert2.lo <= hs.cert1.hi);
  // certificates are 4-aloof prefixes
  for (std::size_t i = 1; i < hs.cert1.prefix.size(); ++i) CHECK(hs.cert1.prefix[i] <= 4);
  for (std::size_t i = 1; i < hs.cert2.prefix.size(); ++i) CHECK(hs.cert2.prefix[i] <= 4);
  // refinement never grows an interval
  for (std::size_t i = 1; i < hs.widths_trace.size(); ++i) {
    CHECK(hs.widths_trace[i].first <= hs.widths_trace[i - 1].first);
    CHECK(hs.widths_trace[i].second <= hs.widths_trace[i - 1].second);
  }
}

TEST_CASE("hall_decompose near the lower endpoint pins both halves near (sqrt2-1)/2") {
  // 169/408 is a convergent of sqrt(2)-1 = [0;2,2,2,...] lying slightly above the limit
  Rational x(169, 408);
  Quad2 target{Rational(-1), Rational(1)};  // sqrt(2) - 1
  REQUIRE(Quad2(x) > target);
  HallSplit hs = hall_decompose(x, 4, Rational(1, 200));
  // both certified cylinders sit within resolution of (sqrt2-1)/2
  Quad2 half_target{Rational(-1, 2), Rational(1, 2)};
  for (const Cylinder* c : {&hs.cert1, &hs.cert2}) {
    CHECK(Quad2(c->lo) - half_target < Quad2(Rational(1, 100)));
    CHECK(half_target - Quad2(c->hi) < Quad2(Rational(1, 100)));
  }
}

TEST_CASE("hall_decompose k1 + k2 matches the numerator") {
  HallSplit hs = hall_decompose(Rational(2), 4, Rational(1, 89));
  CHECK(hs.p == 89);
  CHECK(hs.k1 + hs.k2 == 2 * 89);
  // every point of cert1 lies within 1/89 of k1/89
  CHECK(hs.cert1.lo > Rational(hs.k1 - 1, 89));
  CHECK(hs.cert1.hi < Rational(hs.k1 + 1, 89));
  CHECK_THROWS_AS(hall_decompose(Rational(1, 10), 4, Rational(1, 10)), std::invalid_argument);
  CHECK_THROWS_AS(hall_decompose(Rational(10), 4, Rational(1, 10)), std::invalid_argument);
}

TEST_CASE("certify_near_aloof certificates are sound") {
  // 3/2 = [1;2] sits in a gap of the 4-aloof set: the nearest points are limits of
  // [1;1,1,4,...] from above and [1;2,4,...] from below, both at distance exactly 1/22
  // at the cylinder level ([1;1,1,4] starts at 17/11, [1;2,4] ends at 16/11).
  auto blocked = certify_near_aloof(Rational(3, 2), 4, Rational(1, 22));
  CHECK_FALSE(blocked.has_value());
  auto cert = certify_near_aloof(Rational(3, 2), 4, Rational(1, 10));
  REQUIRE(cert.has_value());
  CHECK(cert->dist >= Rational(1, 22));
  CHECK(cert->dist + cert->cyl.width() < Rational(1, 10));
  for (std::size_t i = 1; i < cert->cyl.prefix.size(); ++i) CHECK(cert->cyl.prefix[i] <= 4);

  // with quotient bound 25 the gaps around 3/2 are far narrower
  auto tight = certify_near_aloof(Rational(3, 2), 25, Rational(1, 1000));
  REQUIRE(tight.has_value());
  CHECK(tight->dist + tight->cyl.width() < Rational(1, 1000));

  // 1/10 is far below every 4-aloof number; minimal distance is 1/5 - 1/10 = 1/10
  auto far = certify_near_aloof(Rational(1, 10), 4, Rational(1, 20));
  CHECK_FALSE(far.has_value());
  auto near = certify_near_aloof(Rational(1, 10), 4, Rational(3, 20));
  CHECK(near.has_value());
}

TEST_CASE("ell_split_t certifies three near-aloof ratios") {
  EllSplitResult r = ell_split_t(1000, 1000, 1000, 1000, 25);
  CHECK(r.t > 0);
  CHECK(r.t < 1000);
  Rational r1(r.t, 2000), r2(1000 - r.t, 1000), r3(2000 - r.t, 1000);
  CHECK(r.r1.dist + r.r1.cyl.width() < Rational(1, 2000));
  CHECK(r.r2.dist + r.r2.cyl.width() < Rational(1, 1000));
  CHECK(r.r3.dist + r.r3.cyl.width() < Rational(1, 1000));
  CHECK(r.r1.cyl.distance(r1) == r.r1.dist);
  CHECK(r.r2.cyl.distance(r2) == r.r2.dist);
  CHECK(r.r3.cyl.distance(r3) == r.r3.dist);
  // certificate words stay within the quotient bound
  for (const AloofCert* c : {&r.r1, &r.r2, &r.r3})
    for (std::size_t i = 1; i < c->cyl.prefix.size(); ++i) CHECK(c->cyl.prefix[i] <= 25);
}

TEST_CASE("ell_split_t degenerate and edge instances") {
  // a = 1: t in {0, 1} leaves an empty rectangle on one side; no certified split exists
  CHECK_THROWS_AS(ell_split_t(1, 1, 1, 1, 25), EllSplitError);
  // ratio-8 edge instance
  EllSplitResult r = ell_split_t(8, 1, 1, 1, 25);
  CHECK(r.t >= 1);
  CHECK(r.t <= 7);
  CHECK_THROWS_AS(ell_split_t(9, 1, 1, 1, 25), std::invalid_argument);
}

TEST_CASE("ell_split_t pruned search path agrees with scanning") {
  EllSplitConfig tiny_scan;
  tiny_scan.scan_bound = 10;  // force the prune-and-scan route
  EllSplitResult pruned = ell_split_t(200, 180, 150, 170, 25, tiny_scan);
  EllSplitResult scanned = ell_split_t(200, 180, 150, 170, 25);
  CHECK(pruned.t > 0);
  CHECK(scanned.t > 0);
  Rational tol(1, 180);
  CHECK(pruned.r2.dist + pruned.r2.cyl.width() < tol);
}

TEST_CASE("cover dump is one JSON object per interval") {
  AloofCover cover = aloof_cover(2, 2);
  std::string dump = cover_dump_jsonl(cover);
  std::size_t lines = 0;
  for (char c : dump)
    if (c == '\n') ++lines;
  CHECK(lines == cover.deepest().size());
  CHECK(dump.find("\"word\"") != std::string::npos);
  CHECK(dump.find('/') != std::string::npos);
}
