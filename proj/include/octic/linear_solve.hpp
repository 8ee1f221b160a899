#pragma once

#include <cstddef>
#include <vector>

#include "octic/rational.hpp"

namespace octic {

struct LinearSolution {
  bool solved = false;          // false: rank below the number of unknowns
  std::size_t rank = 0;
  std::vector<Rational> x;      // filled when solved
};

/// Solves A x = b exactly for an m x n system with m >= n. Each row is
/// scaled to integers and eliminated fraction-free (Bareiss); the unique
/// solution is recovered by back substitution. Throws
/// ErrorCode::InterpolationInconsistent when the rows contradict each other.
LinearSolution solve_exact(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b);

}  // namespace octic
