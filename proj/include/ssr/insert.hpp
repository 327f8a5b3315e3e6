#ifndef SSR_INSERT_HPP
#define SSR_INSERT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ssr/construct.hpp"
#include "ssr/matrix.hpp"

namespace ssr {

enum class Axis { row, col };

/// Case split of a contiguous square window through the new column:
/// I when l < r, II when r < l, III when l == r.
enum class WindowCase { I, II, III };

/// A contiguous square window of the candidate matrix that contains the new
/// column: `l` columns to its left, `r` to its right, rows
/// [row_start, row_start + size).
struct InsertionContext {
  std::size_t l = 0;
  std::size_t r = 0;
  std::size_t m_val = 0;
  std::size_t row_start = 1;
  std::size_t size = 1;
  WindowCase kind = WindowCase::III;
};

WindowCase classify_window(std::size_t l, std::size_t r);

/// Every window of a `rows` x (2 flank + 1) candidate whose new column sits
/// after column `flank`, restricted to sizes <= max_size. Ordered by
/// (l, r, row_start).
std::vector<InsertionContext> insertion_windows(std::size_t rows, std::size_t flank,
                                                std::size_t max_size);

/// 2n x 2n SSR(eps) -> 2n x (2n+1) SSR(eps) with the new column at n+1.
Mat insert_middle_even_square(const Mat& a, ConstructionTrace* trace = nullptr);

/// Inserts a line between lines k and k+1 (1 <= k < count) of an SSR matrix.
/// `new_size_sign` follows the extend_border rule: required exactly when the
/// insertion raises min(m, n).
Mat insert_line(const Mat& a, Axis axis, std::size_t k,
                std::optional<int> new_size_sign = std::nullopt,
                ConstructionTrace* trace = nullptr);

/// Interior insertion for SSR_p matrices, p < min(m, n).
Mat insert_line_ssr_p(const Mat& a, std::size_t p, Axis axis, std::size_t k,
                      ConstructionTrace* trace = nullptr);

}  // namespace ssr

#endif  // SSR_INSERT_HPP
