#include "ssr/insert.hpp"

#include <algorithm>
#include <stdexcept>

#include "construct_internal.hpp"
#include "ssr/determinant.hpp"
#include "ssr/verify.hpp"

namespace ssr {

WindowCase classify_window(std::size_t l, std::size_t r) {
  if (l < r) return WindowCase::I;
  if (r < l) return WindowCase::II;
  return WindowCase::III;
}

std::vector<InsertionContext> insertion_windows(std::size_t rows, std::size_t flank,
                                                std::size_t max_size) {
  const std::size_t limit = std::min(rows, max_size);
  std::vector<InsertionContext> out;
  for (std::size_t l = 0; l <= flank; ++l) {
    for (std::size_t r = 0; r <= flank; ++r) {
      const std::size_t d = l + r + 1;
      if (d > limit) continue;
      for (std::size_t s = 1; s + d - 1 <= rows; ++s) {
        out.push_back({l, r, std::min(l, r), s, d, classify_window(l, r)});
      }
    }
  }
  return out;
}

namespace {

// Chooses the new middle column for `f`, a matrix whose candidate gap lies
// after column `flank` with `flank` columns on each side:
//
//   c = sum_{i=1}^{pairs} (-1)^(i-1) y_i (c^(flank-i+1) + c^(flank+i)).
//
// A window with min(l, r) = t-1 sees y_t, ..., y_pairs only (both columns of
// the lower pairs lie inside it), and its determinant is alpha + y_t beta with
// beta of sign eps_d. Walking t downward, y_t clears -alpha/beta over every
// such window; y_pairs = 1.
Column middle_column(const Mat& f, std::size_t flank, std::size_t pairs, std::size_t max_size,
                     const SignPattern& eps, bool odd_order, ConstructionTrace* trace) {
  const std::size_t rows = f.rows();
  const auto windows = insertion_windows(rows, flank, max_size);

  std::vector<Scalar> y(pairs + 1);
  Mat tilde;
  for (std::size_t t = pairs; t >= 1; --t) {
    Scalar best = 0;
    for (const InsertionContext& w : windows) {
      if (w.m_val != t - 1) continue;
      if (odd_order && t == pairs && w.kind != WindowCase::III) {
        throw std::logic_error("insert: window of case I/II at the top level for odd order");
      }
      const std::size_t d = w.size;
      tilde = Mat(d, d);
      for (std::size_t i = 1; i <= d; ++i) {
        const std::size_t src = w.row_start + i - 1;
        for (std::size_t j = 1; j <= w.l; ++j) tilde(i, j) = f(src, flank - w.l + j);
        for (std::size_t j = 1; j <= w.r; ++j) tilde(i, w.l + 1 + j) = f(src, flank + j);
      }
      // Sum of det(window with the middle column replaced by each column of
      // pair i that lies outside the window).
      auto pair_det = [&](std::size_t i) {
        Scalar total = 0;
        auto with_column = [&](std::size_t col) {
          for (std::size_t r = 1; r <= d; ++r) tilde(r, w.l + 1) = f(w.row_start + r - 1, col);
          total += det_exact(tilde);
        };
        if (i > w.l) with_column(flank - i + 1);
        if (i > w.r) with_column(flank + i);
        return (i % 2 == 1) ? total : Scalar(-total);
      };
      const Scalar beta = pair_det(t);
      if (sign_of(beta) != eps[d]) {
        throw std::logic_error("insert: coefficient of y_" + std::to_string(t) +
                               " has the wrong sign; input is not SSR");
      }
      Scalar alpha = 0;
      for (std::size_t i = t + 1; i <= pairs; ++i) alpha += y[i] * pair_det(i);
      const Scalar bound = -alpha / beta;
      if (bound > best) best = bound;
    }
    y[t] = (t == pairs) ? Scalar(1) : detail::clear_bound(best);
  }

  Column c(rows);
  for (std::size_t i = 1; i <= pairs; ++i) {
    const Scalar coeff = (i % 2 == 1) ? y[i] : Scalar(-y[i]);
    for (std::size_t r = 1; r <= rows; ++r) {
      c[r - 1] += coeff * (f(r, flank - i + 1) + f(r, flank + i));
    }
  }
  if (trace) trace->y_choices.emplace_back(y.begin() + 1, y.end());
  return c;
}

Mat trim(const Mat& a, std::size_t top, std::size_t rows, std::size_t left, std::size_t cols) {
  Mat out(rows, cols);
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j = 1; j <= cols; ++j) out(i, j) = a(top + i, left + j);
  }
  return out;
}

void check_position(std::size_t k, std::size_t lines, const char* operation) {
  if (lines < 2 || k < 1 || k > lines - 1) {
    throw ContractError(std::string(operation) + ": position " + std::to_string(k) +
                        " outside [1, " + std::to_string(lines > 0 ? lines - 1 : 0) + "]");
  }
}

Mat insert_column(const Mat& a, std::size_t k, std::optional<int> new_size_sign,
                  ConstructionTrace* trace) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  check_position(k, n, "insert_line");
  if (new_size_sign && *new_size_sign != 1 && *new_size_sign != -1) {
    throw ContractError("insert_line: new_size_sign must be +1 or -1");
  }
  const bool grows = m > n;
  if (grows && !new_size_sign) {
    throw ContractError("insert_line: the insertion creates minors of size " +
                        std::to_string(n + 1) + "; a new-size sign is required");
  }
  if (!grows && new_size_sign) {
    throw ContractError("insert_line: the insertion creates no new minor size; a new-size "
                        "sign must not be given");
  }
  SignPattern eps = detail::require_ssr(a, a.min_dim(), trace, "insert_line");

  // Pad to a 2N x 2N SSR matrix whose central gap is the gap after column k.
  const std::size_t half = std::max({k, n - k, (m + 1) / 2});
  const std::size_t left = half - k;
  const std::size_t right = half - (n - k);
  const std::size_t top = (2 * half - m + 1) / 2;
  const std::size_t bottom = 2 * half - m - top;

  Mat padded = a;
  auto pad = [&](Side side, std::size_t count) {
    for (std::size_t s = 0; s < count; ++s) {
      std::optional<int> rel;
      if (detail::creates_new_size(padded, side)) {
        const std::size_t size = padded.min_dim() + 1;
        // The only padding size that survives the final trim is n+1 (m > n).
        rel = (grows && size == n + 1) ? *new_size_sign : 1;
        eps = eps.extended(*rel * eps.last());
        if (trace) trace->pattern_extensions.push_back({size, eps.last()});
      }
      padded = detail::extend(padded, side, rel, std::nullopt, trace);
    }
  };
  pad(Side::left, left);
  pad(Side::right, right);
  pad(Side::top, top);
  pad(Side::bottom, bottom);

  const Column c = middle_column(padded, half, half, 2 * half, eps, false, trace);
  const Mat full = padded.with_column_inserted(half + 1, c);
  return trim(full, top, m, left, n + 1);
}

Mat insert_column_ssr_p(const Mat& a, std::size_t p, std::size_t k, ConstructionTrace* trace) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (p < 1 || p >= std::min(m, n)) {
    throw ContractError("insert_line_ssr_p: need 1 <= p < min(m, n)");
  }
  check_position(k, n, "insert_line_ssr_p");
  const SignPattern eps = detail::require_ssr(a, p, trace, "insert_line_ssr_p");

  // Order-p windows through the new column reach at most p-1 columns on each
  // side; for p = 1 the two neighbours are used.
  const std::size_t flank = std::max<std::size_t>(p - 1, 1);
  const std::size_t have_left = std::min(k, flank);
  const std::size_t have_right = std::min(n - k, flank);
  IndexSet cols;
  for (std::size_t j = k - have_left + 1; j <= k + have_right; ++j) cols.push_back(j);
  IndexSet all_rows;
  for (std::size_t i = 1; i <= m; ++i) all_rows.push_back(i);
  Mat window = submatrix(a, all_rows, cols);
  for (std::size_t s = have_left; s < flank; ++s) {
    window = detail::extend(window, Side::left, std::nullopt, p, trace);
  }
  for (std::size_t s = have_right; s < flank; ++s) {
    window = detail::extend(window, Side::right, std::nullopt, p, trace);
  }
  const Column c = middle_column(window, flank, (p + 1) / 2, p, eps, p % 2 == 1, trace);
  return a.with_column_inserted(k + 1, c);
}

}  // namespace

Mat insert_middle_even_square(const Mat& a, ConstructionTrace* trace) {
  if (!a.is_square() || a.rows() == 0 || a.rows() % 2 != 0) {
    throw ContractError("insert_middle_even_square: need a square matrix of even order");
  }
  const SignPattern eps =
      detail::require_ssr(a, a.min_dim(), trace, "insert_middle_even_square");
  const std::size_t half = a.rows() / 2;
  return a.with_column_inserted(half + 1, middle_column(a, half, half, a.rows(), eps, false, trace));
}

Mat insert_line(const Mat& a, Axis axis, std::size_t k, std::optional<int> new_size_sign,
                ConstructionTrace* trace) {
  if (axis == Axis::row) return transpose(insert_column(transpose(a), k, new_size_sign, trace));
  return insert_column(a, k, new_size_sign, trace);
}

Mat insert_line_ssr_p(const Mat& a, std::size_t p, Axis axis, std::size_t k,
                      ConstructionTrace* trace) {
  if (axis == Axis::row) return transpose(insert_column_ssr_p(transpose(a), p, k, trace));
  return insert_column_ssr_p(a, p, k, trace);
}

}  // namespace ssr
