#include "octic/linear_solve.hpp"

#include <utility>

#include "octic/error.hpp"

namespace octic {

LinearSolution solve_exact(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw Error(ErrorCode::InvalidArgument, "right-hand side has the wrong length");
  const std::size_t n = m ? a[0].size() : 0;

  // Augmented integer matrix, one common denominator cleared per row.
  std::vector<std::vector<Integer>> mat(m, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw Error(ErrorCode::InvalidArgument, "ragged coefficient matrix");
    Integer scale = b[i].denominator();
    for (const auto& v : a[i]) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.denominator().get_mpz_t());
    for (std::size_t j = 0; j <= n; ++j) {
      const Rational& v = j < n ? a[i][j] : b[i];
      mat[i][j] = v.numerator() * (scale / v.denominator());
    }
  }

  std::size_t rank = 0;
  Integer previous = 1;
  for (std::size_t k = 0; k < n && rank < m; ++k) {
    std::size_t p = rank;
    while (p < m && mat[p][k] == 0) ++p;
    if (p == m) continue;
    std::swap(mat[p], mat[rank]);
    const auto& pivot_row = mat[rank];
    for (std::size_t i = rank + 1; i < m; ++i) {
      auto& r = mat[i];
      for (std::size_t j = k + 1; j <= n; ++j) {
        r[j] = pivot_row[k] * r[j] - r[k] * pivot_row[j];
        mpz_divexact(r[j].get_mpz_t(), r[j].get_mpz_t(), previous.get_mpz_t());
      }
      r[k] = 0;
    }
    previous = pivot_row[k];
    ++rank;
  }

  // Rows below the rank are zero on the left; a nonzero right side means
  // no solution at all, which no amount of extra rows can repair.
  for (std::size_t i = rank; i < m; ++i) {
    if (mat[i][n] != 0) throw Error(ErrorCode::InterpolationInconsistent, "interpolation inconsistent");
  }

  LinearSolution out;
  out.rank = rank;
  if (rank < n) return out;
  out.x.assign(n, Rational(0));
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(mat[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) {
      if (mat[ii][j] != 0) acc -= Rational(mat[ii][j]) * out.x[j];
    }
    out.x[ii] = acc / Rational(mat[ii][ii]);
  }
  out.solved = true;
  return out;
}

}  // namespace octic
