#include "sqtile/aloof.hpp"

#include "sqtile/quadratic.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <tuple>

namespace sqtile {

Cylinder Cylinder::of_prefix(const std::vector<int>& prefix) {
  if (prefix.empty()) throw std::invalid_argument("cylinder prefix must be nonempty");
  Cylinder c;
  c.prefix = prefix;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    int a = prefix[i];
    if (a < 0 || (a == 0 && i != 0) || (i > 0 && a < 1))
      throw std::invalid_argument("invalid continued fraction prefix");
    Int h = Int(a) * c.h1 + c.h0;
    Int k = Int(a) * c.k1 + c.k0;
    c.h0 = c.h1;
    c.h1 = h;
    c.k0 = c.k1;
    c.k1 = k;
  }
  Rational e1(c.h1, c.k1);
  Rational e2(c.h1 + c.h0, c.k1 + c.k0);
  c.lo = e1 < e2 ? e1 : e2;
  c.hi = e1 < e2 ? e2 : e1;
  return c;
}

Cylinder Cylinder::child(int a) const {
  if (a < 1) throw std::invalid_argument("cylinder child quotient must be >= 1");
  Cylinder c;
  c.prefix = prefix;
  c.prefix.push_back(a);
  c.h0 = h1;
  c.k0 = k1;
  c.h1 = Int(a) * h1 + h0;
  c.k1 = Int(a) * k1 + k0;
  Rational e1(c.h1, c.k1);
  Rational e2(c.h1 + c.h0, c.k1 + c.k0);
  c.lo = e1 < e2 ? e1 : e2;
  c.hi = e1 < e2 ? e2 : e1;
  return c;
}

Rational Cylinder::distance(const Rational& x) const {
  if (x < lo) return lo - x;
  if (x > hi) return x - hi;
  return Rational(0);
}

std::string Cylinder::word() const {
  std::string w;
  char cur = 'R';
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    int a = prefix[i];
    if (i == 0 && a == 0) {
      cur = 'L';
      continue;
    }
    w.append(static_cast<std::size_t>(a), cur);
    cur = cur == 'R' ? 'L' : 'R';
  }
  w.push_back(cur);  // cylinder = run word plus one opposite letter
  return w;
}

AloofCover aloof_cover(int n, int depth, std::size_t max_intervals) {
  if (n < 1 || depth < 1) throw std::invalid_argument("aloof_cover requires n >= 1, depth >= 1");
  // 2 * n^depth cylinders at the deepest level
  double est = 2.0;
  for (int i = 0; i < depth; ++i) {
    est *= n;
    if (est > static_cast<double>(max_intervals))
      throw std::runtime_error("aloof_cover: interval count would exceed the configured cap");
  }

  AloofCover cover;
  cover.n = n;
  cover.depth = depth;
  std::vector<Cylinder> level;
  for (int a = n; a >= 1; --a) level.push_back(Cylinder::of_prefix({0, a}));  // (1/(a+1), 1/a)
  for (int a = 1; a <= n; ++a) level.push_back(Cylinder::of_prefix({a}));    // (a, a+1)
  auto by_lo = [](const Cylinder& x, const Cylinder& y) { return x.lo < y.lo; };
  std::sort(level.begin(), level.end(), by_lo);
  cover.levels.push_back(level);
  for (int d = 2; d <= depth; ++d) {
    std::vector<Cylinder> next;
    next.reserve(level.size() * n);
    for (const auto& c : level)
      for (int a = 1; a <= n; ++a) next.push_back(c.child(a));
    std::sort(next.begin(), next.end(), by_lo);
    cover.levels.push_back(next);
    level = cover.levels.back();
  }
  return cover;
}

std::vector<FareyInterval> AloofCover::intervals() const {
  std::vector<FareyInterval> out;
  out.reserve(deepest().size());
  for (const auto& c : deepest()) out.push_back(c.interval());
  return out;
}

std::vector<std::pair<Rational, Rational>> AloofCover::components() const {
  std::vector<std::pair<Rational, Rational>> comps;
  for (const auto& c : deepest()) {
    if (!comps.empty() && comps.back().second == c.lo) {
      comps.back().second = c.hi;
    } else {
      comps.emplace_back(c.lo, c.hi);
    }
  }
  return comps;
}

namespace {

// The removal sequences of the thickness definition are exactly the recursive binary
// splits of the hull: the first gap removed from a piece determines its two flanks and
// the rest happens independently inside them. Feasibility is therefore an interval DP
// over consecutive gap ranges.
struct ThicknessSolver {
  const std::vector<std::pair<Rational, Rational>>& comps;  // closed covered intervals
  std::vector<std::pair<Rational, Rational>> gaps;
  Rational K, eps;
  // memo over gap ranges [i, j]; -1 unknown, 0 infeasible, 1 + k: split at gap k
  std::vector<std::vector<long>> memo;

  ThicknessSolver(const std::vector<std::pair<Rational, Rational>>& c, Rational k, Rational e)
      : comps(c), K(std::move(k)), eps(std::move(e)) {
    for (std::size_t i = 0; i + 1 < comps.size(); ++i)
      gaps.emplace_back(comps[i].second, comps[i + 1].first);
    memo.assign(gaps.size(), std::vector<long>(gaps.size(), -1));
  }

  Rational left_boundary(std::size_t i) const {  // left end of the piece whose gaps start at i
    return i == 0 ? comps.front().first : gaps[i - 1].second;
  }
  Rational right_boundary(std::size_t j) const {
    return j + 1 == gaps.size() ? comps.back().second : gaps[j + 1].first;
  }

  bool feasible(std::size_t i, std::size_t j) {  // gaps i..j inclusive; i > j means none
    if (i > j) return true;
    long& m = memo[i][j];
    if (m >= 0) return m > 0;
    Rational lo = left_boundary(i), hi = right_boundary(j);
    Rational whole = hi - lo;
    for (std::size_t k = i; k <= j; ++k) {
      Rational glen = gaps[k].second - gaps[k].first;
      if (glen > eps * whole) continue;
      Rational left = gaps[k].first - lo;
      Rational right = hi - gaps[k].second;
      if (left * K < right || right * K < left) continue;
      bool sub_left = k == i ? true : feasible(i, k - 1);
      if (!sub_left) continue;
      bool sub_right = k == j ? true : feasible(k + 1, j);
      if (!sub_right) continue;
      m = 1 + static_cast<long>(k);
      return true;
    }
    m = 0;
    return false;
  }

  void witness(std::size_t i, std::size_t j, std::vector<GapCheck>& out) {
    if (i > j) return;
    std::size_t k = static_cast<std::size_t>(memo[i][j] - 1);
    GapCheck chk;
    chk.gap_lo = gaps[k].first;
    chk.gap_hi = gaps[k].second;
    chk.piece_lo = left_boundary(i);
    chk.piece_hi = right_boundary(j);
    chk.left_len = chk.gap_lo - chk.piece_lo;
    chk.right_len = chk.piece_hi - chk.gap_hi;
    chk.len_ok = true;
    chk.ratio_ok = true;
    out.push_back(chk);
    if (k > i) witness(i, k - 1, out);
    if (k < j) witness(k + 1, j, out);
  }
};

}  // namespace

ThicknessReport thickness_check(const AloofCover& cover, const Rational& K, const Rational& eps) {
  ThicknessReport rep;
  rep.K = K;
  rep.epsilon = eps;

  auto comps = cover.components();
  if (comps.size() <= 1) {
    rep.pass = true;  // nothing removed yet; vacuous pass
    return rep;
  }
  ThicknessSolver solver(comps, K, eps);
  std::size_t g = solver.gaps.size();
  if (solver.feasible(0, g - 1)) {
    rep.pass = true;
    solver.witness(0, g - 1, rep.checks);
  } else {
    rep.pass = false;
    // diagnostic: evaluate every gap as a candidate top split of the full hull
    Rational lo = comps.front().first, hi = comps.back().second;
    Rational whole = hi - lo;
    for (std::size_t k = 0; k < g; ++k) {
      GapCheck chk;
      chk.gap_lo = solver.gaps[k].first;
      chk.gap_hi = solver.gaps[k].second;
      chk.piece_lo = lo;
      chk.piece_hi = hi;
      chk.left_len = chk.gap_lo - lo;
      chk.right_len = hi - chk.gap_hi;
      chk.len_ok = chk.gap_hi - chk.gap_lo <= eps * whole;
      chk.ratio_ok = chk.left_len * K >= chk.right_len && chk.right_len * K >= chk.left_len;
      rep.checks.push_back(chk);
      if (!(chk.len_ok && chk.ratio_ok)) ++rep.unresolved;
    }
    if (rep.unresolved == 0) rep.unresolved = g;
  }
  return rep;
}

std::vector<std::pair<Rational, Rational>> subdivide_gaps(const Rational& lo, const Rational& hi,
                                                          const AloofCover& cover, int N) {
  if (N < 1) throw std::invalid_argument("subdivide_gaps requires N >= 1");
  Rational total = hi - lo;
  if (total <= 0) throw std::invalid_argument("empty hull");
  if (N == 1) return {{lo, hi}};

  Rational max_piece = total / N;
  Rational min_piece = total / (5 * N);

  // gaps of the deepest coverage strictly inside [lo, hi]
  std::vector<std::pair<Rational, Rational>> gaps;
  auto comps = cover.components();
  for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
    if (comps[i].second > lo && comps[i + 1].first < hi)
      gaps.emplace_back(comps[i].second, comps[i + 1].first);
  }

  std::vector<std::pair<Rational, Rational>> pieces;
  Rational start = lo;
  for (const auto& g : gaps) {
    Rational span = g.first - start;
    if (span > min_piece) {
      if (span > max_piece) {
        int extra = 1;
        Rational s = span;
        while (s > max_piece && extra < 64) {
          s /= (cover.n + 2);
          ++extra;
        }
        throw SubdivideError("subdivide_gaps: gap spacing too coarse at depth " +
                                 std::to_string(cover.depth) + ", need depth >= " +
                                 std::to_string(cover.depth + extra),
                             cover.depth + extra);
      }
      pieces.emplace_back(start, g.first);
      start = g.second;
    }
  }
  Rational last_span = hi - start;
  if (last_span > max_piece) {
    throw SubdivideError("subdivide_gaps: trailing span too long at depth " +
                             std::to_string(cover.depth) + ", need depth >= " +
                             std::to_string(cover.depth + 1),
                         cover.depth + 1);
  }
  if (last_span > min_piece || pieces.empty()) {
    pieces.emplace_back(start, hi);
  } else {
    // fold the short tail into the previous piece (re-inserting the removed gap)
    Rational prev_lo = pieces.back().first;
    pieces.pop_back();
    if (hi - prev_lo > max_piece)
      throw SubdivideError("subdivide_gaps: cannot balance trailing piece at depth " +
                               std::to_string(cover.depth) + ", need depth >= " +
                               std::to_string(cover.depth + 1),
                           cover.depth + 1);
    pieces.emplace_back(prev_lo, hi);
  }
  return pieces;
}

namespace {

struct SumInterval {
  Rational lo, hi;
};

SumInterval complement_interval(const Rational& x, const Cylinder& c) {
  return {x - c.hi, x - c.lo};
}

bool cyl_contains_closed(const Cylinder& c, const SumInterval& t) {
  return c.lo <= t.lo && t.hi <= c.hi;
}

}  // namespace

HallSplit hall_decompose(const Rational& x, int n, const Rational& resolution,
                         std::uint64_t node_budget) {
  if (n < 4) throw std::invalid_argument("hall_decompose requires n >= 4");
  if (resolution <= 0) throw std::invalid_argument("resolution must be positive");
  // Admissible range: sqrt(2)-1 <= x <= 4+4*sqrt(2), checked exactly.
  Quad2 qx{x, Rational(0)};
  Quad2 lo_bound{Rational(-1), Rational(1)};
  Quad2 hi_bound{Rational(4), Rational(4)};
  if (qx < lo_bound || qx > hi_bound)
    throw std::invalid_argument("hall_decompose: x outside the two-aloof-summands range");

  Int p = rational_floor(1 / resolution);
  if (p < 1) p = 1;
  Rational target = Rational(1, 4 * p);
  if (target > resolution) target = resolution;

  std::vector<Cylinder> roots;
  for (int a = n; a >= 1; --a) roots.push_back(Cylinder::of_prefix({0, a}));
  for (int a = 1; a <= n; ++a) roots.push_back(Cylinder::of_prefix({a}));

  std::uint64_t nodes = 0;
  std::vector<std::pair<Rational, Rational>> trace;

  // Invariant: x - c2 (an interval) is contained in c1, so every choice of x2 in c2
  // can be matched by some x1 in c1 with x1 + x2 = x.
  std::function<bool(Cylinder&, Cylinder&)> dfs = [&](Cylinder& c1, Cylinder& c2) -> bool {
    if (++nodes > node_budget) return false;
    trace.emplace_back(c1.width(), c2.width());
    if (c1.width() < target) return true;

    SumInterval t = complement_interval(x, c2);
    // preferred move: refine c1 around t
    for (int a = 1; a <= n; ++a) {
      Cylinder ch = c1.child(a);
      if (cyl_contains_closed(ch, t)) {
        if (dfs(ch, c2)) {
          c1 = ch;
          return true;
        }
        break;  // at most one child contains t
      }
    }
    // otherwise refine c2; order children by how cleanly x - child sits inside c1
    struct Cand {
      int score;
      int a;
    };
    std::vector<Cand> cands;
    for (int a = 1; a <= n; ++a) {
      Cylinder ch = c2.child(a);
      SumInterval tc = complement_interval(x, ch);
      if (!(tc.lo >= c1.lo && tc.hi <= c1.hi)) continue;  // keep invariant
      int score = 1;
      for (int b = 1; b <= n; ++b) {
        Cylinder c1ch = c1.child(b);
        if (cyl_contains_closed(c1ch, tc)) {
          score = 2;
          break;
        }
      }
      cands.push_back({score, a});
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& u, const Cand& v) { return u.score > v.score; });
    for (const auto& cand : cands) {
      Cylinder ch = c2.child(cand.a);
      if (dfs(c1, ch)) {
        c2 = ch;
        return true;
      }
      if (nodes > node_budget) return false;
    }
    trace.pop_back();
    return false;
  };

  // complement must meet the window holding every n-aloof number
  Rational window_lo(1, n + 1), window_hi(n + 1);
  auto complement_in_window = [&](const Cylinder& c) {
    SumInterval t = complement_interval(x, c);
    return t.hi > window_lo && t.lo < window_hi;
  };

  for (int start_depth = 1; start_depth <= 12; ++start_depth) {
    std::vector<Cylinder> level2;
    if (start_depth == 1) {
      level2 = roots;
    } else {
      // enumerate cylinders of the given depth lazily, pruned to the feasible frontier
      std::vector<Cylinder> cur = roots;
      for (int d = 2; d <= start_depth; ++d) {
        std::vector<Cylinder> nxt;
        for (const auto& c : cur) {
          if (!complement_in_window(c)) continue;
          for (int a = 1; a <= n; ++a) nxt.push_back(c.child(a));
        }
        cur.swap(nxt);
        if (cur.size() > 20000) break;
      }
      level2 = cur;
    }
    for (const auto& c2start : level2) {
      if (!complement_in_window(c2start)) continue;
      SumInterval t = complement_interval(x, c2start);
      // deepest cylinder containing t
      const Cylinder* seed = nullptr;
      for (const auto& r : roots)
        if (cyl_contains_closed(r, t)) {
          seed = &r;
          break;
        }
      if (!seed) continue;
      Cylinder c1 = *seed;
      for (bool descended = true; descended;) {
        descended = false;
        for (int a = 1; a <= n; ++a) {
          Cylinder ch = c1.child(a);
          if (cyl_contains_closed(ch, t)) {
            c1 = ch;
            descended = true;
            break;
          }
        }
      }
      Cylinder c2 = c2start;
      if (dfs(c1, c2)) {
        HallSplit hs;
        hs.x = x;
        hs.p = p;
        hs.cert1 = c1;
        hs.cert2 = c2;
        hs.widths_trace = trace;
        hs.nodes = nodes;
        // window certification: every x1 in cert1 is within 1/p of k1/p
        Rational mid1 = (c1.lo + c1.hi) / 2;
        Int base = rational_floor(mid1 * p);
        bool placed = false;
        for (Int cand = base - 1; cand <= base + 1; ++cand) {
          Rational wl(cand - 1, p), wh(cand + 1, p);
          if (c1.lo > wl && c1.hi < wh) {
            hs.k1 = cand;
            placed = true;
            break;
          }
        }
        if (!placed) throw std::logic_error("hall_decompose: k1 window certification failed");
        Rational xp = x * p;
        if (denominator(xp) == 1) {
          hs.k2 = numerator(xp) - hs.k1;
        } else {
          Rational mid2 = (c2.lo + c2.hi) / 2;
          hs.k2 = rational_floor(mid2 * p + Rational(1, 2));
        }
        return hs;
      }
      if (nodes > node_budget)
        throw std::runtime_error("hall_decompose: search budget exhausted before resolution");
    }
  }
  throw std::runtime_error("hall_decompose: no certificate found (search exhausted)");
}

std::optional<AloofCert> certify_near_aloof(const Rational& r, int n, const Rational& tol,
                                            std::uint64_t budget) {
  if (tol <= 0) return std::nullopt;
  if (r <= 0) return std::nullopt;

  using Entry = std::tuple<Rational, std::uint64_t>;
  struct Cmp {
    bool operator()(const std::pair<Entry, Cylinder>& a, const std::pair<Entry, Cylinder>& b) const {
      return a.first > b.first;  // min-heap on (dist, tick)
    }
  };
  std::priority_queue<std::pair<Entry, Cylinder>, std::vector<std::pair<Entry, Cylinder>>, Cmp> pq;
  std::uint64_t tick = 0;
  for (int a = n; a >= 1; --a) {
    Cylinder c = Cylinder::of_prefix({0, a});
    pq.push({{c.distance(r), tick++}, c});
  }
  for (int a = 1; a <= n; ++a) {
    Cylinder c = Cylinder::of_prefix({a});
    pq.push({{c.distance(r), tick++}, c});
  }
  std::uint64_t nodes = 0;
  while (!pq.empty() && nodes++ < budget) {
    auto [key, c] = pq.top();
    pq.pop();
    Rational d = std::get<0>(key);
    if (d >= tol) return std::nullopt;  // every remaining cylinder is at least this far
    if (d + c.width() < tol) return AloofCert{c, d};
    for (int a = 1; a <= n; ++a) {
      Cylinder ch = c.child(a);
      pq.push({{ch.distance(r), tick++}, ch});
    }
  }
  return std::nullopt;
}

namespace {

bool ratios_within_8(const Int& a, const Int& b, const Int& c, const Int& d) {
  Int lo = std::min(std::min(a, b), std::min(c, d));
  Int hi = std::max(std::max(a, b), std::max(c, d));
  return lo > 0 && hi <= 8 * lo;
}

std::optional<EllSplitResult> try_split_at(const Int& t, const Int& a, const Int& b, const Int& c,
                                           const Int& d, int n, const EllSplitConfig& cfg) {
  if (t <= 0 || t >= a) return std::nullopt;
  Rational r1(t, b + d), r2(a - t, b), r3(a + c - t, d);
  auto c1 = certify_near_aloof(r1, n, Rational(1, b + d), cfg.certify_budget);
  if (!c1) return std::nullopt;
  auto c2 = certify_near_aloof(r2, n, Rational(1, b), cfg.certify_budget);
  if (!c2) return std::nullopt;
  auto c3 = certify_near_aloof(r3, n, Rational(1, d), cfg.certify_budget);
  if (!c3) return std::nullopt;
  return EllSplitResult{t, *c1, *c2, *c3};
}

int certified_count(const Int& t, const Int& a, const Int& b, const Int& c, const Int& d, int n,
                    const EllSplitConfig& cfg) {
  if (t <= 0 || t >= a) return 0;
  int cnt = 0;
  if (certify_near_aloof(Rational(t, b + d), n, Rational(1, b + d), cfg.certify_budget)) ++cnt;
  if (certify_near_aloof(Rational(a - t, b), n, Rational(1, b), cfg.certify_budget)) ++cnt;
  if (certify_near_aloof(Rational(a + c - t, d), n, Rational(1, d), cfg.certify_budget)) ++cnt;
  return cnt;
}

}  // namespace

EllSplitResult ell_split_t(const Int& a, const Int& b, const Int& c, const Int& d, int n,
                           const EllSplitConfig& cfg) {
  if (a < 1 || b < 1 || c < 1 || d < 1) throw std::invalid_argument("ell edges must be positive");
  if (!ratios_within_8(a, b, c, d))
    throw std::invalid_argument("ell_split_t requires edge ratios within [1/8, 8]");
  if (n < 2) throw std::invalid_argument("ell_split_t requires n >= 2");

  if (a <= cfg.scan_bound) {
    Int best_t = 0;
    int best = -1;
    for (Int t = 1; t < a; ++t) {
      if (auto res = try_split_at(t, a, b, c, d, n, cfg)) return *res;
      int cnt = certified_count(t, a, b, c, d, n, cfg);
      if (cnt > best) {
        best = cnt;
        best_t = t;
      }
    }
    throw EllSplitError("ell_split_t: exhaustive scan found no certified split", best_t, best);
  }

  // Large instances: prune t-ranges whose three image intervals cannot come close to the
  // cover, then scan the surviving blocks.
  AloofCover shallow = aloof_cover(std::min(n, 6), cfg.prune_cover_depth);
  auto comps = shallow.components();
  auto near_cover = [&](const Rational& lo, const Rational& hi, const Rational& tol) {
    for (const auto& comp : comps)
      if (comp.second >= lo - tol && comp.first <= hi + tol) return true;
    return false;
  };
  std::vector<std::pair<Int, Int>> stack{{Int(1), a - 1}};
  Int best_t = 0;
  int best = -1;
  while (!stack.empty()) {
    auto [lo_t, hi_t] = stack.back();
    stack.pop_back();
    if (lo_t > hi_t) continue;
    Rational r1l(lo_t, b + d), r1h(hi_t, b + d);
    Rational r2l(a - hi_t, b), r2h(a - lo_t, b);
    Rational r3l(a + c - hi_t, d), r3h(a + c - lo_t, d);
    if (!near_cover(r1l, r1h, Rational(1, b + d)) || !near_cover(r2l, r2h, Rational(1, b)) ||
        !near_cover(r3l, r3h, Rational(1, d)))
      continue;
    if (hi_t - lo_t <= 4096) {
      for (Int t = lo_t; t <= hi_t; ++t) {
        if (auto res = try_split_at(t, a, b, c, d, n, cfg)) return *res;
        int cnt = certified_count(t, a, b, c, d, n, cfg);
        if (cnt > best) {
          best = cnt;
          best_t = t;
        }
      }
    } else {
      Int mid = (lo_t + hi_t) / 2;
      stack.push_back({lo_t, mid});
      stack.push_back({mid + 1, hi_t});
    }
  }
  throw EllSplitError("ell_split_t: pruned search found no certified split", best_t, best);
}

std::string cover_dump_jsonl(const AloofCover& cover) {
  std::ostringstream os;
  for (const auto& c : cover.deepest()) {
    os << "{\"word\":\"" << c.word() << "\",\"lo\":\"" << fraction_str(c.lo) << "\",\"hi\":\""
       << fraction_str(c.hi) << "\"}\n";
  }
  return os.str();
}

}  // namespace sqtile
