#pragma once

#include "sqtile/rational.hpp"

#include <vector>

namespace sqtile {

/// Solves A x = rhs exactly by Gaussian elimination with pivoting.
/// Throws std::runtime_error on a singular matrix.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> rhs);

/// Exact determinant of an integer matrix (Bareiss fraction-free elimination).
Int bareiss_det(std::vector<std::vector<Int>> m);

}  // namespace sqtile
