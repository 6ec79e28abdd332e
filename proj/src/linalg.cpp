#include "sqtile/linalg.hpp"

#include <stdexcept>

namespace sqtile {

std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> rhs) {
  const std::size_t n = A.size();
  if (rhs.size() != n) throw std::invalid_argument("solve_linear dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("solve_linear: singular matrix");
    std::swap(A[piv], A[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (A[row][col] == 0) continue;
      Rational f = A[row][col] / A[col][col];
      A[row][col] = 0;
      for (std::size_t j = col + 1; j < n; ++j) A[row][j] -= f * A[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= A[i][j] * x[j];
    x[i] = acc / A[i][i];
  }
  return x;
}

Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      sign = -sign;
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      for (std::size_t j = col + 1; j < n; ++j) {
        m[row][j] = (m[row][j] * m[col][col] - m[row][col] * m[col][j]) / prev;
      }
      m[row][col] = 0;
    }
    prev = m[col][col];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace sqtile
