#include "sqtile/stats.hpp"

#include "sqtile/contfrac.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace sqtile {

std::vector<Int> cf_digits(const Rational& x) {
  ContinuedFraction cf = cf_expand(x);
  return cf.quotients;
}

CostSample t_epsilon(const std::vector<Int>& digits, const Rational& eps, bool exact_stream) {
  if (digits.empty()) throw std::invalid_argument("t_epsilon requires at least one digit");
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("t_epsilon requires eps in (0,1)");

  // exact value of the full prefix, and the cylinder of its continuations
  Int h1 = 1, h0 = 0, k1 = 0, k0 = 1;
  for (const Int& a : digits) {
    Int h = a * h1 + h0;
    Int k = a * k1 + k0;
    h0 = h1;
    h1 = h;
    k0 = k1;
    k1 = k;
  }
  Rational x_exact(h1, k1);
  Rational cyl_lo(h1, k1), cyl_hi(h1 + h0, k1 + k0);
  if (cyl_hi < cyl_lo) std::swap(cyl_lo, cyl_hi);

  Int ph1 = 1, ph0 = 0, pk1 = 0, pk0 = 1;
  Int T = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const Int& a = digits[i];
    Int h = a * ph1 + ph0;
    Int k = a * pk1 + pk0;
    ph0 = ph1;
    ph1 = h;
    pk0 = pk1;
    pk1 = k;
    T += a;
    if (exact_stream) {
      Rational err = rational_abs(Rational(k) * x_exact - Rational(h));
      if (err < eps) return {T, static_cast<int>(i)};
    } else {
      // certified against every continuation: evaluate |k x - h| at the cylinder ends
      Rational e1 = rational_abs(Rational(k) * cyl_lo - Rational(h));
      Rational e2 = rational_abs(Rational(k) * cyl_hi - Rational(h));
      Rational worst = e1 > e2 ? e1 : e2;
      Rational bests = e1 < e2 ? e1 : e2;
      if (worst < eps) return {T, static_cast<int>(i)};
      if (bests < eps) throw StreamExhausted(T, static_cast<int>(i));  // undecidable here
    }
  }
  if (exact_stream) {
    // the final approximant equals x, so the rule always fires by then
    return {T, static_cast<int>(digits.size()) - 1};
  }
  throw StreamExhausted(T, static_cast<int>(digits.size()));
}

McSummary peres_mc(int samples, const std::vector<Rational>& epsilons, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("peres_mc requires samples >= 1");
  McSummary out;
  out.seed = seed;
  out.samples = samples;
  out.costs.assign(epsilons.size(), {});

  std::mt19937_64 rng(seed);
  const int words = 5;  // 320-bit numerators
  Int denom = Int(1) << (64 * words);

  for (int s = 0; s < samples; ++s) {
    Int num = 0;
    do {
      num = 0;
      for (int w = 0; w < words; ++w) num = (num << 64) | Int(rng());
    } while (num == 0);
    Rational x(num, denom);
    std::vector<Int> digits = cf_digits(x);
    for (std::size_t e = 0; e < epsilons.size(); ++e) {
      CostSample cs = t_epsilon(digits, epsilons[e], true);
      out.costs[e].push_back(cs.T);
    }
  }

  for (std::size_t e = 0; e < epsilons.size(); ++e) {
    double li = std::log(1.0 / static_cast<double>(epsilons[e]));
    // the loglog factor is floored at 1 so reports stay positive for large epsilon
    double scale = li * std::max(1.0, std::log(li));
    std::vector<double> ratios;
    ratios.reserve(out.costs[e].size());
    for (const Int& T : out.costs[e]) ratios.push_back(static_cast<double>(T) / scale);
    std::sort(ratios.begin(), ratios.end());
    auto quantile = [&](double f) {
      double pos = f * (static_cast<double>(ratios.size()) - 1);
      std::size_t i = static_cast<std::size_t>(pos);
      double frac = pos - static_cast<double>(i);
      if (i + 1 < ratios.size()) return ratios[i] * (1 - frac) + ratios[i + 1] * frac;
      return ratios[i];
    };
    EpsSummary es;
    es.epsilon = epsilons[e];
    es.median = quantile(0.5);
    es.q1 = quantile(0.25);
    es.q3 = quantile(0.75);
    es.iqr = es.q3 - es.q1;
    out.per_eps.push_back(es);
  }
  return out;
}

}  // namespace sqtile
