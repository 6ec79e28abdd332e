#include "sqtile/contfrac.hpp"

#include <stdexcept>

namespace sqtile {

Rational ContinuedFraction::value() const {
  if (quotients.empty()) throw std::invalid_argument("empty continued fraction");
  Rational v(quotients.back());
  for (auto it = quotients.rbegin() + 1; it != quotients.rend(); ++it) {
    v = Rational(*it) + 1 / v;
  }
  return v;
}

Int ContinuedFraction::quotient_sum() const {
  Int s = 0;
  for (const auto& a : quotients) s += a;
  return s;
}

ContinuedFraction cf_expand(const Rational& x) {
  if (x <= 0) throw std::invalid_argument("cf_expand requires a positive rational");
  ContinuedFraction cf;
  Int p = numerator(x), q = denominator(x);
  while (q != 0) {
    Int a = p / q;
    Int r = p - a * q;
    cf.quotients.push_back(a);
    p = q;
    q = r;
  }
  // canonical form: merge a trailing 1 into the previous quotient
  if (cf.quotients.size() > 1 && cf.quotients.back() == 1) {
    cf.quotients.pop_back();
    cf.quotients.back() += 1;
  }
  return cf;
}

std::vector<Rational> approximants(const ContinuedFraction& cf) {
  std::vector<Rational> out;
  out.reserve(cf.quotients.size());
  Int h1 = 1, h0 = 0;  // numerators: h_{k-1}, h_{k-2}
  Int k1 = 0, k0 = 1;  // denominators
  for (const auto& a : cf.quotients) {
    Int h = a * h1 + h0;
    Int k = a * k1 + k0;
    out.emplace_back(h, k);
    h0 = h1;
    h1 = h;
    k0 = k1;
    k1 = k;
  }
  return out;
}

Int greedy_cost(const Int& p, const Int& q) {
  if (p < 1 || q < 1) throw std::invalid_argument("greedy_cost requires positive sides");
  Rational aspect = p >= q ? Rational(p, q) : Rational(q, p);
  return cf_expand(aspect).quotient_sum();
}

}  // namespace sqtile
