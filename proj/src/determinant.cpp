#include "ssr/determinant.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace ssr {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Scales every row by the lcm of its denominators. Returns the product of the
// scale factors so that det(m) = det(result) / scale.
IntRows clear_denominators(const Mat& m, Integer& scale) {
  IntRows out(m.rows(), std::vector<Integer>(m.cols()));
  scale = 1;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    Integer row_lcm = 1;
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      const Scalar& x = m(i, j);
      Integer& cell = out[i - 1][j - 1];
      mpz_divexact(cell.get_mpz_t(), row_lcm.get_mpz_t(), x.get_den_mpz_t());
      cell *= x.get_num();
    }
    scale *= row_lcm;
  }
  return out;
}

// Bareiss elimination over the first `cols` columns. Returns the number of
// pivots found; `sign` tracks row swaps and `last_pivot` the final pivot.
std::size_t bareiss(IntRows& a, std::size_t cols, int& sign, Integer& last_pivot) {
  const std::size_t rows = a.size();
  Integer prev = 1;
  Integer tmp;
  std::size_t rank = 0;
  sign = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap(a[pivot], a[rank]);
      sign = -sign;
    }
    const Integer& p = a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        // a[r][k] = (a[r][k] * p - a[r][c] * a[rank][k]) / prev, exact.
        tmp = a[r][k] * p;
        tmp -= a[r][c] * a[rank][k];
        mpz_divexact(a[r][k].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = p;
    ++rank;
  }
  last_pivot = prev;
  return rank;
}

}  // namespace

Scalar det_exact(const Mat& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("det_exact: matrix is not square");
  }
  const std::size_t n = m.rows();
  switch (n) {
    case 0:
      return Scalar(1);
    case 1:
      return m(1, 1);
    case 2:
      return Scalar(m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
    default:
      break;
  }
  Integer scale;
  IntRows a = clear_denominators(m, scale);
  int sign = 1;
  Integer last;
  const std::size_t rank = bareiss(a, n, sign, last);
  if (rank < n) return Scalar(0);
  // With full rank the final Bareiss pivot is the determinant of the
  // row-permuted integer matrix.
  Scalar det(a[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

std::size_t rank_exact(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Integer scale;
  IntRows a = clear_denominators(m, scale);
  int sign = 1;
  Integer last;
  return bareiss(a, m.cols(), sign, last);
}

}  // namespace ssr
