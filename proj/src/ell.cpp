#include "sqtile/ell.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqtile {

PlacedSquare Placement::map_square(const PlacedSquare& s) const {
  auto [x1, y1] = apply(s.x, s.y);
  auto [x2, y2] = apply(s.x + s.side, s.y + s.side);
  return {x1 < x2 ? x1 : x2, y1 < y2 ? y1 : y2, s.side};
}

Rect Placement::map_rect(const Rect& r) const {
  auto [x1, y1] = apply(r.x, r.y);
  auto [x2, y2] = apply(r.x + r.w, r.y + r.h);
  Rect out;
  out.x = x1 < x2 ? x1 : x2;
  out.y = y1 < y2 ? y1 : y2;
  out.w = rational_abs(x2 - x1);
  out.h = rational_abs(y2 - y1);
  return out;
}

Placement Placement::compose(const Placement& inner) const {
  Placement p;
  p.m00 = m00 * inner.m00 + m01 * inner.m10;
  p.m01 = m00 * inner.m01 + m01 * inner.m11;
  p.m10 = m10 * inner.m00 + m11 * inner.m10;
  p.m11 = m10 * inner.m01 + m11 * inner.m11;
  auto [x, y] = apply(inner.tx, inner.ty);
  p.tx = x;
  p.ty = y;
  return p;
}

Rational Ell::min_edge() const { return std::min(std::min(a, b), std::min(c, d)); }
Rational Ell::max_edge() const { return std::max(std::max(a, b), std::max(c, d)); }

namespace {

void emit(std::vector<PlacedSquare>& out, const Ell& e, const Rational& u, const Rational& v,
          const Rational& side) {
  out.push_back(e.place.map_square({u, v, side}));
}

std::optional<Rect> degenerate_rect(const Ell& e) {
  if (e.a > 0 && e.b > 0 && e.c > 0 && e.d > 0) return std::nullopt;
  Rect std_rect;
  if (e.c == 0 && e.b > 0)
    std_rect = {0, 0, e.a, e.b + e.d};
  else if (e.b == 0)
    std_rect = {0, 0, e.a + e.c, e.d};
  else if (e.a == 0)
    std_rect = {0, 0, e.c, e.d};
  else  // d == 0
    std_rect = {0, 0, e.a, e.b};
  return e.place.map_rect(std_rect);
}

// squares of side a (resp. d) while b/a >= 2 (resp. c/d >= 2)
void normalize_in_place(Ell& e, std::vector<PlacedSquare>& out) {
  while (e.b >= 2 * e.a) {
    emit(out, e, 0, e.d + e.b - e.a, e.a);
    e.b -= e.a;
  }
  while (e.c >= 2 * e.d) {
    emit(out, e, e.a + e.c - e.d, 0, e.d);
    e.c -= e.d;
  }
}

// k squares of side d at the right end of the bottom strip; the remaining region is the
// ell (b, kd-c, d, a+c-kd) under the quarter-turn (u,v) -> (v, b+d-u).
void move_kd(Ell& e, int k, std::vector<PlacedSquare>& out) {
  for (int j = 1; j <= k; ++j) emit(out, e, e.a + e.c - j * e.d, 0, e.d);
  Placement tau;
  tau.m00 = 0;
  tau.m01 = 1;
  tau.m10 = -1;
  tau.m11 = 0;
  tau.tx = 0;
  tau.ty = e.b + e.d;
  Ell ne;
  ne.a = e.b;
  ne.b = k * e.d - e.c;
  ne.c = e.d;
  ne.d = e.a + e.c - k * e.d;
  ne.place = e.place.compose(tau);
  e = ne;
}

// square of side b at the top-right of the upper rectangle plus a square of side d at the
// right of the bottom strip; same orientation afterwards.
void move_b_d(Ell& e, std::vector<PlacedSquare>& out) {
  emit(out, e, e.a - e.b, e.d, e.b);
  emit(out, e, e.a + e.c - e.d, 0, e.d);
  e = Ell{e.a - e.b, e.b, e.c + e.b - e.d, e.d, e.place};
}

// two side-b squares plus one side-d square
void move_2b_d(Ell& e, std::vector<PlacedSquare>& out) {
  emit(out, e, e.a - e.b, e.d, e.b);
  emit(out, e, e.a - 2 * e.b, e.d, e.b);
  emit(out, e, e.a + e.c - e.d, 0, e.d);
  e = Ell{e.a - 2 * e.b, e.b, e.c + 2 * e.b - e.d, e.d, e.place};
}

// relabel via the diagonal reflection (u,v) -> (v,u): quadruple reverses
void reverse_labels(Ell& e) {
  Placement tau;
  tau.m00 = 0;
  tau.m01 = 1;
  tau.m10 = 1;
  tau.m11 = 0;
  e = Ell{e.d, e.c, e.b, e.a, e.place.compose(tau)};
}

// square of side a at the top of the upper rectangle (requires b >= a)
void shave_top(Ell& e, std::vector<PlacedSquare>& out) {
  emit(out, e, 0, e.d + e.b - e.a, e.a);
  e.b -= e.a;
}

}  // namespace

EllMoveResult ell_normalize(Ell e) {
  EllMoveResult res;
  if (auto r = degenerate_rect(e)) {
    res.rect = r;
    return res;
  }
  normalize_in_place(e, res.squares);
  res.ell = e;
  return res;
}

EllReduceResult ell_reduce(Ell e, int max_iter) {
  EllReduceResult res;
  if (auto r = degenerate_rect(e)) {
    res.rect = r;
    return res;
  }

  for (int iter = 0; iter < max_iter; ++iter) {
    EllReduceStep step;
    step.a = e.a;
    step.b = e.b;
    step.c = e.c;
    step.d = e.d;
    step.area_before = e.area();
    step.min_edge_before = e.min_edge();
    std::size_t emitted_before = res.squares.size();

    normalize_in_place(e, res.squares);
    if (auto r = degenerate_rect(e)) { res.rect = r; break; }

    const Rational &a = e.a, &b = e.b, &c = e.c, &d = e.d;
    Rational mx_ab = std::max(a, b);
    if (c > mx_ab || d > mx_ab) {
      reverse_labels(e);
      step.tag = "reverse";
    } else if (a >= b && a >= c && a >= d) {
      if (d <= b && d <= c) {  // 1a
        if (3 * d >= a) { step.tag = "1a-done"; }
        else { move_kd(e, 3, res.squares); step.tag = "1a"; }
      } else if (c <= b && c <= d) {  // 1b
        if (3 * c >= a) { step.tag = "1b-done"; }
        else if (d - c >= c) { move_kd(e, 1, res.squares); step.tag = "1b-1d"; }
        else if (a + c - 2 * d > c) { move_kd(e, 2, res.squares); step.tag = "1b-2d"; }
        else { step.tag = "1b-small-done"; }
      } else {  // 1c
        if (3 * b >= a) { step.tag = "1c-done"; }
        else if (d - c >= b) { move_kd(e, 1, res.squares); step.tag = "1c-1d"; }
        else if (c > d) { move_b_d(e, res.squares); step.tag = "1c-bd"; }
        else { move_2b_d(e, res.squares); step.tag = "1c-2bd"; }
      }
    } else {  // b is the longest edge
      if (a <= c && a <= d) {  // 2a
        step.tag = "2a-done";
      } else if (c <= d) {  // 2b
        if (a > 2 * d) {
          if (d - c > c) { move_kd(e, 1, res.squares); step.tag = "2b-1d"; }
          else { move_kd(e, 2, res.squares); step.tag = "2b-2d"; }
        } else if (b <= 8 * c) {
          // covers the d < 2c argument (b < 2a <= 4d < 8c) and every other in-ratio case
          step.tag = "2b-done";
        } else if (a >= d) {
          // b > 8c forces d >= 2c here, so the side-d square keeps the minimum
          move_kd(e, 1, res.squares);
          step.tag = "2b-tall-1d";
        } else if (b >= a + c) {
          shave_top(e, res.squares);  // b - a >= c keeps the minimum
          step.tag = "2b-tall-shave";
        } else {
          // thin-notch corner: no square move preserves the minimum edge; shave anyway
          shave_top(e, res.squares);
          step.tag = "2b-deadlock-shave";
        }
      } else {  // 2c
        if (a + c - 3 * d >= d) { move_kd(e, 3, res.squares); step.tag = "2c-3d"; }
        else { step.tag = "2c-done"; }
      }
    }

    step.squares_emitted = res.squares.size() - emitted_before;
    if (res.rect) {
      step.area_after = 0;
      step.min_edge_after = step.min_edge_before;
      res.steps.push_back(step);
      break;
    }
    if (auto r = degenerate_rect(e)) {
      res.rect = r;
      step.area_after = r->area();
      step.min_edge_after = step.min_edge_before;
      res.steps.push_back(step);
      break;
    }
    step.area_after = e.area();
    step.min_edge_after = e.min_edge();
    res.steps.push_back(step);
    if (step.tag.ends_with("done")) break;
  }

  if (!res.rect) {
    res.ell = e;
    if (e.max_edge() > 8 * e.min_edge())
      throw std::logic_error("ell_reduce exited with edge ratios above 8");
  }
  return res;
}

}  // namespace sqtile
