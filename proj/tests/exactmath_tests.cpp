#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqtile/aloof.hpp"
#include "sqtile/contfrac.hpp"
#include "sqtile/farey.hpp"
#include "sqtile/quadratic.hpp"
#include "sqtile/rational.hpp"

#include <random>

using namespace sqtile;

namespace {

std::vector<Int> quotients(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("cf_expand on hand-worked rationals") {
  CHECK(cf_expand(Rational(8, 5)).quotients == quotients({1, 1, 1, 2}));
  CHECK(cf_expand(Rational(7)).quotients == quotients({7}));
  CHECK(cf_expand(Rational(5, 4)).quotients == quotients({1, 4}));
  CHECK(cf_expand(Rational(1)).quotients == quotients({1}));
  CHECK(cf_expand(Rational(1, 2)).quotients == quotients({0, 2}));
  CHECK_THROWS_AS(cf_expand(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(cf_expand(Rational(-3, 2)), std::invalid_argument);
}

TEST_CASE("cf canonical form: final quotient >= 2 for length > 1") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Int num = Int(rng() % 1000000) + 1;
    Int den = Int(rng() % 1000000) + 1;
    ContinuedFraction cf = cf_expand(Rational(num, den));
    if (cf.quotients.size() > 1) {
      CHECK(cf.quotients.back() >= 2);
      for (std::size_t k = 1; k < cf.quotients.size(); ++k) CHECK(cf.quotients[k] >= 1);
    }
    CHECK(cf.value() == Rational(num, den));  // reconstruction is the identity
  }
}

TEST_CASE("approximants recurrence and unimodularity") {
  ContinuedFraction cf;
  cf.quotients = quotients({1, 1, 1, 2});
  auto apx = approximants(cf);
  REQUIRE(apx.size() == 4);
  CHECK(apx[0] == Rational(1));
  CHECK(apx[1] == Rational(2));
  CHECK(apx[2] == Rational(3, 2));
  CHECK(apx[3] == Rational(8, 5));

  ContinuedFraction five;
  five.quotients = quotients({5});
  CHECK(approximants(five) == std::vector<Rational>{Rational(5)});

  ContinuedFraction half;
  half.quotients = quotients({0, 2});
  auto ah = approximants(half);
  CHECK(ah[0] == Rational(0));
  CHECK(ah[1] == Rational(1, 2));

  // |p_{k+1} q_k - p_k q_{k+1}| = 1 on random inputs
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Rational x(Int(rng() % 100000) + 1, Int(rng() % 100000) + 1);
    auto a = approximants(cf_expand(x));
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
      Int det = numerator(a[k + 1]) * denominator(a[k]) - numerator(a[k]) * denominator(a[k + 1]);
      CHECK(rational_abs(Rational(det)) == 1);
    }
    CHECK(a.back() == x);
  }
}

TEST_CASE("greedy_cost values") {
  CHECK(greedy_cost(5, 8) == 5);
  CHECK(greedy_cost(4, 5) == 5);
  for (long n = 1; n <= 50; ++n) CHECK(greedy_cost(1, Int(n)) == Int(n));
  CHECK(greedy_cost(8, 5) == 5);   // orientation independent
  CHECK(greedy_cost(2, 4) == 2);   // non-coprime allowed
}

TEST_CASE("farey_child mediant construction") {
  FareyInterval root = FareyInterval::root();
  CHECK(root.determinant() == 1);

  // L R L from the root, letters applied left to right
  FareyInterval lrl = farey_interval_of_word("LRL");
  CHECK(lrl.lower.num == 1);
  CHECK(lrl.lower.den == 2);
  CHECK(lrl.upper.num == 2);
  CHECK(lrl.upper.den == 3);

  FareyInterval r = root.child('R');
  CHECK(r.lower.num == 1);
  CHECK(r.lower.den == 1);
  CHECK(r.upper.den == 0);  // infinity

  FareyInterval l = lrl.child('L');
  CHECK(l.lower.value() == Rational(1, 2));
  CHECK(l.upper.value() == Rational(3, 5));
}

TEST_CASE("farey determinant invariant under random words") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    FareyInterval I = FareyInterval::root();
    int len = static_cast<int>(rng() % 41);
    for (int i = 0; i < len; ++i) {
      I = I.child(rng() % 2 ? 'L' : 'R');
      CHECK(I.determinant() == 1);
    }
  }
}

TEST_CASE("farey_locate descends toward x") {
  // 8/5: the chain R, L, R, L reaches (3/2, 5/3) whose mediant is exactly 8/5; the
  // descent is then flagged terminal and keeps 8/5 as an endpoint.
  auto res = farey_locate(Rational(8, 5), [](const FareyInterval& I) {
    return I.finite() && I.length() < Rational(1, 10);
  });
  CHECK(res.terminal);
  CHECK(res.interval.contains_closed(Rational(8, 5)));
  CHECK(res.interval.length() < Rational(1, 10));
  CHECK(res.interval.word.substr(0, 4) == "RLRL");

  auto one = farey_locate(Rational(1), [](const FareyInterval& I) { return I.depth() >= 1; });
  CHECK(one.terminal);
  CHECK(one.interval.upper.num == 1);
  CHECK(one.interval.upper.den == 1);

  auto tt = farey_locate(Rational(2, 3), [](const FareyInterval& I) { return I.depth() >= 3; });
  CHECK(tt.terminal);
  CHECK(tt.interval.lower.value() == Rational(1, 2));
  CHECK(tt.interval.upper.value() == Rational(2, 3));
}

TEST_CASE("farey_locate word runs match the continued fraction prefix") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Rational x(Int(rng() % 5000) + 1, Int(rng() % 5000) + 1);
    auto res = farey_locate(x, [](const FareyInterval& I) { return I.depth() >= 6; });
    if (res.terminal) continue;  // past an exact hit the chain follows the endpoint, not x
    ++checked;
    // run lengths of the word form a prefix of the quotients of x (a0 = 0 shows up as a
    // leading zero-length R run)
    std::vector<Int> qs = cf_expand(x).quotients;
    std::vector<Int> runs;
    char cur = 'R';
    Int count = 0;
    for (char ch : res.interval.word) {
      if (ch == cur)
        ++count;
      else {
        runs.push_back(count);
        count = 1;
        cur = ch;
      }
    }
    runs.push_back(count);
    for (std::size_t i = 0; i < runs.size() && i < qs.size(); ++i) {
      if (i + 1 < runs.size())
        CHECK(runs[i] == qs[i]);
      else
        CHECK(runs[i] <= qs[i]);  // last run may still be growing
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("farey_bridge captures x and k/p with large denominators") {
  // x = [0;4,1,4,1,...], p = 10^4, k = floor(x p): x is within the prefix cylinder
  std::vector<int> prefix;
  for (int i = 0; i < 24; ++i) prefix.push_back(i % 2 == 0 ? (i == 0 ? 0 : 1) : 4);
  // prefix = [0;4,1,4,1,...]
  Int p = 10000;
  // floor(x * p) with x ~ 0.20710678: k = 2071
  Int k = 2071;
  BridgeResult br = farey_bridge(prefix, k, p, 4);
  CHECK(br.interval.contains_closed(Rational(k, p)));
  CHECK(br.backup_levels >= 1);
  CHECK(br.backup_levels <= 5);
  CHECK(br.q_bound_ok);  // q1, q2 >= sqrt(p)/(5 * 6^3), exact comparison

  // trivially valid at p = 1
  std::vector<int> small{2, 2};
  BridgeResult tiny = farey_bridge(small, Int(2), Int(1), 4);
  CHECK(tiny.interval.contains_closed(Rational(2)));
  CHECK(tiny.q_bound_ok);
}

TEST_CASE("farey_bridge on random 4-aloof prefixes at p = 10^6") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> prefix{0};
    for (int i = 0; i < 40; ++i) prefix.push_back(static_cast<int>(rng() % 4) + 1);
    Cylinder cyl_check = Cylinder::of_prefix(prefix);
    Rational mid = (cyl_check.lo + cyl_check.hi) / 2;
    Int p = 1000000;
    Int k = rational_floor(mid * p);
    BridgeResult br = farey_bridge(prefix, k, p, 4);
    CHECK(br.interval.contains_closed(Rational(k, p)));
    // the interval contains the whole prefix cylinder, hence x
    CHECK(br.interval.contains_closed(cyl_check.lo));
    CHECK(br.interval.contains_closed(cyl_check.hi));
    CHECK(br.q_bound_ok);
  }
}

TEST_CASE("quadratic field comparisons are exact") {
  Quad2 sqrt2 = Quad2::sqrt2();
  CHECK((sqrt2 * sqrt2).a == 2);
  CHECK((sqrt2 * sqrt2).b == 0);
  CHECK(Quad2(Rational(141421356, 100000000)) < sqrt2);
  CHECK(Quad2(Rational(141421357, 100000000)) > sqrt2);
  Quad2 lam{Rational(3, 2), Rational(-1, 2)};  // 1 - (sqrt2-1)/2
  Quad2 l2 = Quad2::pow(lam, 2);
  CHECK(l2.a == Rational(11, 4));
  CHECK(l2.b == Rational(-3, 2));
  CHECK(lam.sign() == 1);
  CHECK((lam - Quad2(Rational(1))).sign() < 0);
}
