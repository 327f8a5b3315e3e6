#ifndef SSR_DETERMINANT_HPP
#define SSR_DETERMINANT_HPP

#include <cstddef>

#include "ssr/matrix.hpp"
#include "ssr/scalar.hpp"

namespace ssr {

/// Exact determinant of a square matrix; the 0 x 0 matrix has determinant 1.
///
/// Each row is scaled by the lcm of its denominators, the resulting integer
/// matrix is reduced with Bareiss fraction-free elimination (row pivoting on
/// the first non-zero entry) and the scaling is divided back out at the end.
/// Throws std::invalid_argument for non-square input.
Scalar det_exact(const Mat& m);

/// Exact rank via the same fraction-free elimination.
std::size_t rank_exact(const Mat& m);

}  // namespace ssr

#endif  // SSR_DETERMINANT_HPP
