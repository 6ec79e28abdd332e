#include "sqtile/greedy.hpp"

#include <stdexcept>

namespace sqtile {

namespace {

bool keeps_high_x(Corner c) { return c == Corner::LowRight || c == Corner::UpRight; }
bool keeps_high_y(Corner c) { return c == Corner::UpLeft || c == Corner::UpRight; }

}  // namespace

GreedyRun greedy_run(const Rect& r, Corner keep, const Rational& floor_dim) {
  if (r.empty()) throw std::invalid_argument("greedy_run requires a nonempty rectangle");
  GreedyRun run;
  Rect cur = r;
  run.checkpoints.push_back({cur, 0});
  while (!cur.empty()) {
    if (floor_dim > 0 && cur.max_dim() <= floor_dim) return run;
    PlacedSquare sq;
    if (cur.w >= cur.h) {
      sq.side = cur.h;
      sq.y = cur.y;
      if (keeps_high_x(keep)) {
        sq.x = cur.x;
        cur.x += cur.h;
      } else {
        sq.x = cur.x + cur.w - cur.h;
      }
      cur.w -= cur.h;
    } else {
      sq.side = cur.w;
      sq.x = cur.x;
      if (keeps_high_y(keep)) {
        sq.y = cur.y;
        cur.y += cur.w;
      } else {
        sq.y = cur.y + cur.h - cur.w;
      }
      cur.h -= cur.w;
    }
    run.squares.push_back(sq);
    run.checkpoints.push_back({cur, run.squares.size()});
  }
  run.complete = true;
  return run;
}

Tiling greedy_tile(const Int& w, const Int& h) {
  if (w < 1 || h < 1) throw std::invalid_argument("greedy_tile requires positive sides");
  GreedyRun run = greedy_run(Rect{0, 0, Rational(w), Rational(h)}, Corner::UpRight, Rational(0));
  Tiling t;
  t.width = Rational(w);
  t.height = Rational(h);
  t.squares = std::move(run.squares);
  return t;
}

Corner corner_of_point(const Rect& r, const Rational& px, const Rational& py) {
  bool hix, hiy;
  if (px == r.x)
    hix = false;
  else if (px == r.x + r.w)
    hix = true;
  else
    throw std::logic_error("point is not on a rectangle corner (x)");
  if (py == r.y)
    hiy = false;
  else if (py == r.y + r.h)
    hiy = true;
  else
    throw std::logic_error("point is not on a rectangle corner (y)");
  if (hix) return hiy ? Corner::UpRight : Corner::LowRight;
  return hiy ? Corner::UpLeft : Corner::LowLeft;
}

}  // namespace sqtile
