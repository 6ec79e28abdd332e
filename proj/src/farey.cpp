#include "sqtile/farey.hpp"

#include <stdexcept>

namespace sqtile {

namespace {

// x < end, treating den == 0 as +infinity
bool less_than_end(const Rational& x, const FareyEnd& e) {
  if (e.infinite()) return true;
  return x * e.den < e.num;
}

bool end_less_than(const FareyEnd& e, const Rational& x) {
  if (e.infinite()) return false;
  return Rational(e.num, 1) < x * e.den;
}

}  // namespace

FareyInterval FareyInterval::root() {
  return {{Int(0), Int(1)}, {Int(1), Int(0)}, ""};
}

FareyInterval FareyInterval::child(char side) const {
  FareyEnd med{lower.num + upper.num, lower.den + upper.den};
  FareyInterval c;
  if (side == 'L') {
    c = {lower, med, word + 'L'};
  } else if (side == 'R') {
    c = {med, upper, word + 'R'};
  } else {
    throw std::invalid_argument("farey child side must be 'L' or 'R'");
  }
  return c;
}

FareyInterval FareyInterval::parent() const {
  if (word.empty()) throw std::logic_error("root interval has no parent");
  return farey_interval_of_word(word.substr(0, word.size() - 1));
}

Rational FareyInterval::mediant() const {
  return Rational(lower.num + upper.num, lower.den + upper.den);
}

Rational FareyInterval::length() const {
  if (!finite()) throw std::logic_error("length of an infinite Farey interval");
  return Rational(1, lower.den * upper.den);
}

bool FareyInterval::contains_open(const Rational& x) const {
  return end_less_than(lower, x) && less_than_end(x, upper);
}

bool FareyInterval::contains_closed(const Rational& x) const {
  if (x * lower.den < lower.num) return false;
  if (!upper.infinite() && x * upper.den > upper.num) return false;
  return true;
}

Int FareyInterval::determinant() const {
  return upper.num * lower.den - lower.num * upper.den;
}

FareyInterval farey_interval_of_word(const std::string& word) {
  FareyInterval I = FareyInterval::root();
  for (char c : word) I = I.child(c);
  return I;
}

LocateResult farey_locate(const Rational& x, const std::function<bool(const FareyInterval&)>& stop,
                          std::size_t max_depth) {
  if (x <= 0) throw std::invalid_argument("farey_locate requires x > 0");
  FareyInterval I = FareyInterval::root();
  bool terminal = false;
  for (std::size_t d = 0; d <= max_depth; ++d) {
    if (stop(I)) return {I, terminal};
    if (terminal) {
      // x is the upper endpoint; the R child keeps it so
      I = I.child('R');
      continue;
    }
    Rational m = I.mediant();
    if (x == m) {
      terminal = true;
      I = I.child('L');
    } else if (x < m) {
      I = I.child('L');
    } else {
      I = I.child('R');
    }
  }
  throw std::runtime_error("farey_locate: stop predicate not satisfied before depth limit");
}

namespace {

std::string letters_of_prefix(const std::vector<int>& prefix, int n) {
  std::string letters;
  char cur = 'R';
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    int a = prefix[i];
    if (i == 0 && a == 0) {
      cur = 'L';
      continue;
    }
    if (a < 1) throw std::invalid_argument("continued fraction quotients must be >= 1");
    if (a > n) throw std::invalid_argument("prefix is not n-aloof");
    letters.append(static_cast<std::size_t>(a), cur);
    cur = cur == 'R' ? 'L' : 'R';
  }
  return letters;
}

// cylinder of all continuations of the prefix, as (lo, hi)
std::pair<Rational, Rational> cylinder_of_prefix(const std::vector<int>& prefix) {
  Int h1 = 1, h0 = 0, k1 = 0, k0 = 1;
  for (int a : prefix) {
    Int h = Int(a) * h1 + h0;
    Int k = Int(a) * k1 + k0;
    h0 = h1;
    h1 = h;
    k0 = k1;
    k1 = k;
  }
  Rational e1(h1, k1);
  Rational e2(h1 + h0, k1 + k0);
  return e1 < e2 ? std::make_pair(e1, e2) : std::make_pair(e2, e1);
}

}  // namespace

BridgeResult farey_bridge(const std::vector<int>& aloof_prefix, const Int& k, const Int& p, int n) {
  if (p < 1) throw std::invalid_argument("farey_bridge requires p >= 1");
  if (aloof_prefix.empty()) throw std::invalid_argument("empty prefix");
  std::string letters = letters_of_prefix(aloof_prefix, n);

  Rational kp(k, p);
  auto [cyl_lo, cyl_hi] = cylinder_of_prefix(aloof_prefix);
  Rational inv_p(1, p);
  // necessary condition for |k/p - x| < 1/p given only the prefix
  if (kp < cyl_lo - inv_p || kp > cyl_hi + inv_p)
    throw std::invalid_argument("k/p is not within 1/p of the prefix cylinder");

  // chain from the root along the prefix letters
  std::vector<FareyInterval> chain;
  chain.push_back(FareyInterval::root());
  for (char c : letters) chain.push_back(chain.back().child(c));

  Rational wide_target(Int(n + 1) * Int(n + 2), p);
  std::size_t idx = chain.size();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].finite() && chain[i].length() < wide_target) {
      idx = i;
      break;
    }
  }
  if (idx == chain.size())
    throw std::runtime_error("farey_bridge: prefix too short to reach scale 1/p");

  const FareyInterval& deep = chain[idx];
  for (int j = 1; j <= n + 1 && j <= static_cast<int>(idx); ++j) {
    const FareyInterval& J = chain[idx - j];
    // distance from the deep interval to both endpoints of J must be >= 1/p
    Rational lo_gap = deep.lower.value() - Rational(J.lower.num, J.lower.den);
    if (lo_gap < inv_p) continue;
    if (!J.upper.infinite()) {
      Rational hi_gap = Rational(J.upper.num, J.upper.den) - deep.upper.value();
      if (hi_gap < inv_p) continue;
    }
    if (!J.contains_closed(kp)) continue;

    BridgeResult res;
    res.interval = J;
    res.deep = deep;
    res.backup_levels = j;
    // q1, q2 >= sqrt(p) / ((n+1)(n+2)^((n+2)/2)), compared via squares
    Int scale = Int(n + 1) * Int(n + 1);
    Int pw = 1;
    for (int e = 0; e < n + 2; ++e) pw *= Int(n + 2);
    scale *= pw;
    bool ok = J.lower.den * J.lower.den * scale >= p;
    if (!J.upper.infinite()) ok = ok && J.upper.den * J.upper.den * scale >= p;
    res.q_bound_ok = ok;
    return res;
  }
  throw std::runtime_error("farey_bridge: no backup level within n+1 captured k/p");
}

}  // namespace sqtile
