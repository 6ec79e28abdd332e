#include "sqtile/epsilon_tiler.hpp"

#include <stdexcept>

namespace sqtile {

EpsilonResult epsilon_tile(const Rational& x, const Rational& eps) {
  if (x < 1) throw std::invalid_argument("epsilon_tile requires x >= 1");
  if (eps <= 0) throw std::invalid_argument("epsilon_tile requires eps > 0");

  EpsilonResult res;
  res.tiling.width = x;
  res.tiling.height = 1;

  if (eps >= x) {
    res.tiling.residual = Rect{0, 0, x, 1};
    res.tiling.residual_trivial = true;
    res.trivial = true;
    return res;
  }

  Int strip = rational_floor(x) - 1;
  if (strip < 0) strip = 0;
  res.strip_squares = static_cast<std::size_t>(strip);

  const Quad2 one_plus_delta{Rational(1, 2), Rational(1, 2)};  // (1+sqrt 2)/2
  Rect cur{0, 0, x, 1};
  Rational eps2 = eps * eps;
  auto& squares = res.tiling.squares;

  while (true) {
    if (cur.empty()) return res;  // tiled exactly
    if (cur.w * cur.w + cur.h * cur.h <= eps2) {
      res.tiling.residual = cur;
      return res;
    }
    if (cur.w == cur.h) {
      squares.push_back({cur.x, cur.y, cur.w});
      return res;
    }
    Rational aspect = cur.aspect();
    if (Quad2(aspect) >= one_plus_delta) {
      // one greedy square, eating from the side away from the top-right corner
      if (cur.w > cur.h) {
        squares.push_back({cur.x, cur.y, cur.h});
        cur.x += cur.h;
        cur.w -= cur.h;
      } else {
        squares.push_back({cur.x, cur.y, cur.w});
        cur.y += cur.w;
        cur.h -= cur.w;
      }
    } else {
      // aspect-2 rectangle as two half-side squares along the shorter side
      if (cur.w >= cur.h) {
        Rational s = cur.h / 2;
        squares.push_back({cur.x, cur.y, s});
        squares.push_back({cur.x, cur.y + s, s});
        cur.x += s;
        cur.w -= s;
      } else {
        Rational s = cur.w / 2;
        squares.push_back({cur.x, cur.y, s});
        squares.push_back({cur.x + s, cur.y, s});
        cur.y += s;
        cur.h -= s;
      }
    }
  }
}

}  // namespace sqtile
