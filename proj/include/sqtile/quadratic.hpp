#pragma once

#include "sqtile/rational.hpp"

namespace sqtile {

/// Exact element of Q(sqrt 2), stored as a + b*sqrt(2).
struct Quad2 {
  Rational a;
  Rational b;

  Quad2() : a(0), b(0) {}
  Quad2(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
  explicit Quad2(const Rational& r) : a(r), b(0) {}

  static Quad2 sqrt2() { return {Rational(0), Rational(1)}; }

  Quad2 operator+(const Quad2& o) const { return {a + o.a, b + o.b}; }
  Quad2 operator-(const Quad2& o) const { return {a - o.a, b - o.b}; }
  Quad2 operator*(const Quad2& o) const { return {a * o.a + 2 * b * o.b, a * o.b + b * o.a}; }
  Quad2 operator-() const { return {-a, -b}; }

  int sign() const {
    int sa = a == 0 ? 0 : (a > 0 ? 1 : -1);
    int sb = b == 0 ? 0 : (b > 0 ? 1 : -1);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with 2 b^2
    Rational aa = a * a, bb2 = 2 * b * b;
    if (aa == bb2) return 0;
    return (aa > bb2) ? sa : sb;
  }

  bool operator<(const Quad2& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const Quad2& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const Quad2& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const Quad2& o) const { return (*this - o).sign() >= 0; }
  bool operator==(const Quad2& o) const { return a == o.a && b == o.b; }

  double approx() const {
    return static_cast<double>(a) + static_cast<double>(b) * 1.4142135623730951;
  }

  static Quad2 pow(const Quad2& base, unsigned k) {
    Quad2 r{Rational(1), Rational(0)};
    Quad2 p = base;
    unsigned e = k;
    while (e) {
      if (e & 1) r = r * p;
      p = p * p;
      e >>= 1;
    }
    return r;
  }
};

inline bool quad_less(const Rational& r, const Quad2& q) { return Quad2(r) < q; }

}  // namespace sqtile
