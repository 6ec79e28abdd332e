#include "sqtile/kenyon.hpp"

#include "sqtile/greedy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <variant>

namespace sqtile {

std::vector<StageCount> ConstructionTrace::stage_counts() const {
  std::map<int, StageCount> m;
  for (const auto& ev : events) {
    auto& sc = m[ev.stage];
    sc.stage = ev.stage;
    if (ev.kind == 'E')
      ++sc.ells;
    else
      ++sc.rects;
    if (!ev.clean) sc.clean = false;
  }
  std::vector<StageCount> out;
  out.reserve(m.size());
  for (auto& [_, sc] : m) out.push_back(sc);
  return out;
}

namespace {

struct RectTask {
  Rect r;
  int stage;
};
struct EllTask {
  Ell e;
  int stage;
};
using Task = std::variant<RectTask, EllTask>;

struct Builder {
  KenyonConfig cfg;
  KenyonStrategy strategy;
  std::vector<PlacedSquare> squares;
  ConstructionTrace trace;
  std::deque<Task> queue;

  Rational stop_threshold(const Rational& scale) const {
    Int s = rational_ceil(scale);
    Int r = boost::multiprecision::sqrt(s);
    if (r * r < s) ++r;
    Rational t = Rational(cfg.sqrt_factor) * r;
    Rational base(cfg.base_threshold);
    return t > base ? t : base;
  }

  void emit_greedy_complete(const Rect& r) {
    GreedyRun run = greedy_run(r, Corner::UpRight, Rational(0));
    for (auto& s : run.squares) squares.push_back(s);
  }

  /// Deepest checkpoint with aspect in [1,2) and max dimension <= cap; falls back to
  /// dimension-only, then to completing the rectangle.
  struct Pick {
    std::size_t index = 0;  // checkpoint index
    bool complete = false;
  };

  static std::vector<std::size_t> candidates(const GreedyRun& run, const Rational& cap) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < run.checkpoints.size(); ++i) {
      const Rect& r = run.checkpoints[i].residual;
      if (r.empty()) continue;
      if (r.max_dim() > cap) continue;
      Rational asp = r.aspect();
      if (asp >= 1 && asp < 2) out.push_back(i);
    }
    return out;
  }

  Pick pick_single(const GreedyRun& run, const Rational& cap) const {
    auto cand = candidates(run, cap);
    if (!cand.empty()) return {cand.back(), false};
    // fall back to any checkpoint below the cap
    for (std::size_t i = run.checkpoints.size(); i-- > 0;) {
      const Rect& r = run.checkpoints[i].residual;
      if (!r.empty() && r.max_dim() <= cap) return {i, false};
    }
    return {0, true};
  }

  /// Applies a pick: copies the square prefix, returns the residual (empty when complete).
  Rect apply_pick(const GreedyRun& run, const Pick& pick) {
    if (pick.complete) {
      for (const auto& s : run.squares) squares.push_back(s);
      if (!run.complete) {
        // run was stopped by the floor; finish it off
        const Rect& rest = run.checkpoints.back().residual;
        if (!rest.empty()) emit_greedy_complete(rest);
      }
      return Rect{0, 0, 0, 0};
    }
    std::size_t n = run.checkpoints[pick.index].square_count;
    for (std::size_t i = 0; i < n; ++i) squares.push_back(run.squares[i]);
    return run.checkpoints[pick.index].residual;
  }

  /// Chooses checkpoints for two panels whose residuals should be comparable in scale.
  std::pair<Pick, Pick> pick_pair(const GreedyRun& ra, const GreedyRun& rb, const Rational& cap) const {
    auto ca = candidates(ra, cap);
    auto cb = candidates(rb, cap);
    if (ca.empty() || cb.empty()) return {pick_single(ra, cap), pick_single(rb, cap)};
    Rational factor(cfg.scale_match);
    std::pair<Pick, Pick> best{{ca.back(), false}, {cb.back(), false}};
    long best_depth = -1;
    for (std::size_t ia : ca) {
      Rational sa = ra.checkpoints[ia].residual.max_dim();
      for (std::size_t ib : cb) {
        Rational sb = rb.checkpoints[ib].residual.max_dim();
        if (sa > sb * factor || sb > sa * factor) continue;
        long depth = static_cast<long>(ia) + static_cast<long>(ib);
        if (depth > best_depth) {
          best_depth = depth;
          best = {{ia, false}, {ib, false}};
        }
      }
    }
    return best;  // scale-match ignored when impossible
  }

  void push_rect(const Rect& r, int stage) {
    if (r.empty()) return;
    queue.push_back(RectTask{r, stage});
  }

  void event(int stage, char kind, std::string action, std::size_t sq, bool clean) {
    trace.events.push_back({stage, kind, std::move(action), sq, clean});
  }

  /// Union of two residual rectangles sharing a full corner-to-corner contact along the
  /// split line. Enqueues the follow-up task(s).
  void enqueue_union(Rect A, Rect B, int stage, char parent_kind) {
    if (A.empty() && B.empty()) return;
    if (A.empty() || B.empty()) {
      push_rect(A.empty() ? B : A, stage);
      return;
    }
    // orient so A is left of B (vertical contact) or below B (horizontal contact)
    if (B.x + B.w == A.x && (A.y == B.y || A.y + A.h == B.y + B.h)) std::swap(A, B);
    if (B.y + B.h == A.y && (A.x == B.x || A.x + A.w == B.x + B.w)) std::swap(A, B);

    if (A.x + A.w == B.x && A.y == B.y) {  // vertical contact, flush bottom
      if (A.h == B.h) {
        push_rect(Rect{A.x, A.y, A.w + B.w, A.h}, stage);
        return;
      }
      Ell e;
      if (A.h > B.h) {
        e = Ell{A.w, A.h - B.h, B.w, B.h, Placement::translation(A.x, A.y)};
      } else {
        Placement pl;
        pl.m00 = -1;
        pl.tx = B.x + B.w;
        pl.ty = A.y;
        e = Ell{B.w, B.h - A.h, A.w, A.h, pl};
      }
      queue.push_back(EllTask{e, stage});
      return;
    }
    if (A.x + A.w == B.x && A.y + A.h == B.y + B.h) {  // vertical contact, flush top
      Rational top = A.y + A.h;
      Ell e;
      if (A.h > B.h) {
        Placement pl;
        pl.m11 = -1;
        pl.tx = A.x;
        pl.ty = top;
        e = Ell{A.w, A.h - B.h, B.w, B.h, pl};
      } else {
        Placement pl;
        pl.m00 = -1;
        pl.m11 = -1;
        pl.tx = B.x + B.w;
        pl.ty = top;
        e = Ell{B.w, B.h - A.h, A.w, A.h, pl};
      }
      queue.push_back(EllTask{e, stage});
      return;
    }
    if (A.y + A.h == B.y && A.x == B.x) {  // horizontal contact, flush left
      if (A.w == B.w) {
        push_rect(Rect{A.x, A.y, A.w, A.h + B.h}, stage);
        return;
      }
      Ell e;
      if (A.w > B.w) {
        e = Ell{B.w, B.h, A.w - B.w, A.h, Placement::translation(A.x, A.y)};
      } else {
        Placement pl;
        pl.m11 = -1;
        pl.tx = A.x;
        pl.ty = B.y + B.h;
        e = Ell{A.w, A.h, B.w - A.w, B.h, pl};
      }
      queue.push_back(EllTask{e, stage});
      return;
    }
    if (A.y + A.h == B.y && A.x + A.w == B.x + B.w) {  // horizontal contact, flush right
      Rational right = A.x + A.w;
      Ell e;
      if (A.w > B.w) {
        Placement pl;
        pl.m00 = -1;
        pl.tx = right;
        pl.ty = A.y;
        e = Ell{B.w, B.h, A.w - B.w, A.h, pl};
      } else {
        Placement pl;
        pl.m00 = -1;
        pl.m11 = -1;
        pl.tx = right;
        pl.ty = B.y + B.h;
        e = Ell{A.w, A.h, B.w - A.w, B.h, pl};
      }
      queue.push_back(EllTask{e, stage});
      return;
    }
    throw std::logic_error(std::string("residuals are not flush (parent ") + parent_kind + ")");
  }

  void process_rect(const RectTask& task) {
    Rect r = task.r;
    if (r.max_dim() <= Rational(cfg.base_threshold)) {
      emit_greedy_complete(r);
      event(task.stage, 'R', "base", 0, false);
      return;
    }

    // strip down to aspect < 2
    std::size_t emitted_before = squares.size();
    bool wide = r.w >= r.h;
    Rational longd = wide ? r.w : r.h;
    Rational shortd = wide ? r.h : r.w;
    Int m = rational_floor(longd / shortd) - 1;
    for (Int i = 0; i < m; ++i) {
      // eat from the high end, keeping the panel at the origin side
      if (wide) {
        squares.push_back({r.x + r.w - shortd, r.y, shortd});
        r.w -= shortd;
      } else {
        squares.push_back({r.x, r.y + r.h - shortd, shortd});
        r.h -= shortd;
      }
    }
    longd = wide ? r.w : r.h;
    if (longd == shortd) {
      squares.push_back({r.x, r.y, shortd});
      event(task.stage, 'R', "strip-complete", squares.size() - emitted_before, false);
      return;
    }

    // aspect now in (1,2): split the long side at k1 from the aloof-sum decomposition
    Int S = numerator(shortd);
    Int L = numerator(longd);
    Rational x(L, S);
    Int k1;
    bool hall_ok = true;
    try {
      HallSplit hs = hall_decompose(x, cfg.hall_n, Rational(1, S), cfg.hall_budget);
      k1 = hs.k1;
    } catch (const std::exception&) {
      k1 = (L + 1) / 2;
      hall_ok = false;
    }
    if (k1 < 1 || k1 >= L) {
      k1 = (L + 1) / 2;
      hall_ok = false;
    }

    Rect pa, pb;
    Corner ka, kb;
    if (wide) {
      Rational xs = r.x + Rational(k1);
      pa = Rect{r.x, r.y, Rational(k1), r.h};
      pb = Rect{xs, r.y, r.w - k1, r.h};
      ka = Corner::LowRight;  // cling to the split line, flush bottom
      kb = Corner::LowLeft;
    } else {
      Rational ys = r.y + Rational(k1);
      pa = Rect{r.x, r.y, r.w, Rational(k1)};
      pb = Rect{r.x, ys, r.w, r.h - k1};
      ka = Corner::UpLeft;  // cling to the split line, flush left
      kb = Corner::LowLeft;
    }

    Rational cap = stop_threshold(r.max_dim());
    Rational floor_dim = cap / (4 * cfg.scale_match);
    GreedyRun ra = greedy_run(pa, ka, floor_dim);
    GreedyRun rb = greedy_run(pb, kb, floor_dim);

    if (strategy == KenyonStrategy::Baseline) {
      Pick qa = pick_single(ra, cap), qb = pick_single(rb, cap);
      Rect rra = apply_pick(ra, qa);
      Rect rrb = apply_pick(rb, qb);
      push_rect(rra, task.stage + 1);
      push_rect(rrb, task.stage + 1);
      event(task.stage, 'R', hall_ok ? "split2" : "split2-fallback",
            squares.size() - emitted_before, false);
      return;
    }

    auto [qa, qb] = pick_pair(ra, rb, cap);
    Rect rra = apply_pick(ra, qa);
    Rect rrb = apply_pick(rb, qb);
    bool clean = hall_ok && !rra.empty() && !rrb.empty();
    std::size_t before_union = queue.size();
    enqueue_union(rra, rrb, task.stage + 1, 'R');
    bool spawned_ell = queue.size() > before_union && std::holds_alternative<EllTask>(queue.back());
    event(task.stage, 'R', hall_ok ? "split" : "split-fallback", squares.size() - emitted_before,
          clean && spawned_ell);
  }

  void process_ell(const EllTask& task) {
    std::size_t emitted_before = squares.size();
    EllReduceResult red = ell_reduce(task.e);
    for (const auto& s : red.squares) squares.push_back(s);
    if (red.rect) {
      push_rect(*red.rect, task.stage + 1);
      event(task.stage, 'E', "reduce-collapse", squares.size() - emitted_before, false);
      return;
    }
    Ell e = *red.ell;
    Rational scale = std::max(e.bound_w(), e.bound_h());
    if (scale <= Rational(cfg.base_threshold)) {
      // two rectangles, any simple finish
      Rect left = e.place.map_rect(Rect{0, 0, e.a, e.b + e.d});
      Rect right = e.place.map_rect(Rect{e.a, 0, e.c, e.d});
      emit_greedy_complete(left);
      emit_greedy_complete(right);
      event(task.stage, 'E', "base", squares.size() - emitted_before, false);
      return;
    }

    if (denominator(e.a) != 1 || denominator(e.b) != 1 || denominator(e.c) != 1 ||
        denominator(e.d) != 1)
      throw std::logic_error("ell with non-integer edges in the integer pipeline");
    Int a = numerator(e.a), b = numerator(e.b), c = numerator(e.c), d = numerator(e.d);
    Int t_int;
    try {
      EllSplitResult split = ell_split_t(a, b, c, d, cfg.split_n);
      t_int = split.t;
    } catch (const EllSplitError&) {
      // no certified split at this scale; finish the ell directly
      Rect left = e.place.map_rect(Rect{0, 0, e.a, e.b + e.d});
      Rect right = e.place.map_rect(Rect{e.a, 0, e.c, e.d});
      emit_greedy_complete(left);
      emit_greedy_complete(right);
      event(task.stage, 'E', "split3-fallback", squares.size() - emitted_before, false);
      return;
    }
    Rational t(t_int);

    Rect r1 = e.place.map_rect(Rect{0, 0, t, e.b + e.d});
    Rect r2 = e.place.map_rect(Rect{t, e.d, e.a - t, e.b});
    Rect r3 = e.place.map_rect(Rect{t, 0, e.a + e.c - t, e.d});
    auto [jx, jy] = e.place.apply(t, e.b + e.d);  // shared corner of r1 and r2
    Corner c1 = corner_of_point(r1, jx, jy);
    Corner c2 = corner_of_point(r2, jx, jy);

    Rational cap = stop_threshold(scale);
    Rational floor_dim = cap / (4 * cfg.scale_match);
    GreedyRun g1 = greedy_run(r1, c1, floor_dim);
    GreedyRun g2 = greedy_run(r2, c2, floor_dim);
    GreedyRun g3 = greedy_run(r3, Corner::LowLeft, floor_dim);

    auto [q1, q2] = pick_pair(g1, g2, cap);
    Rect rr1 = apply_pick(g1, q1);
    Rect rr2 = apply_pick(g2, q2);
    Pick q3 = pick_single(g3, cap);
    Rect rr3 = apply_pick(g3, q3);

    bool clean = !rr1.empty() && !rr2.empty() && !rr3.empty();
    std::size_t before_union = queue.size();
    enqueue_union(rr1, rr2, task.stage + 1, 'E');
    bool spawned_ell = queue.size() > before_union && std::holds_alternative<EllTask>(queue.back());
    push_rect(rr3, task.stage + 1);
    event(task.stage, 'E', "split3", squares.size() - emitted_before, clean && spawned_ell);
  }
};

}  // namespace

KenyonResult kenyon_tile(const Int& p, const Int& q, KenyonStrategy strategy, const KenyonConfig& cfg) {
  if (p < 1 || q < 1) throw std::invalid_argument("kenyon_tile requires positive sides");
  Int pp = p, qq = q;
  if (pp > qq) std::swap(pp, qq);
  Int g = boost::multiprecision::gcd(pp, qq);
  Int ps = pp / g, qs = qq / g;

  Builder builder;
  builder.cfg = cfg;
  builder.strategy = strategy;
  builder.queue.push_back(RectTask{Rect{0, 0, Rational(qs), Rational(ps)}, 0});
  while (!builder.queue.empty()) {
    Task task = builder.queue.front();
    builder.queue.pop_front();
    if (std::holds_alternative<RectTask>(task))
      builder.process_rect(std::get<RectTask>(task));
    else
      builder.process_ell(std::get<EllTask>(task));
  }

  KenyonResult res;
  res.tiling.width = Rational(qs);
  res.tiling.height = Rational(ps);
  res.tiling.squares = std::move(builder.squares);
  res.trace = std::move(builder.trace);
  if (g > 1) {
    Rational scale(g);
    res.tiling.width *= scale;
    res.tiling.height *= scale;
    for (auto& s : res.tiling.squares) {
      s.x *= scale;
      s.y *= scale;
      s.side *= scale;
    }
  }
  return res;
}

}  // namespace sqtile
