#ifndef SSR_MATRIX_HPP
#define SSR_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "ssr/scalar.hpp"

namespace ssr {

/// Ordered set of 1-based row or column indices, strictly increasing.
using IndexSet = std::vector<std::size_t>;

using Column = std::vector<Scalar>;

/// Dense m x n matrix of exact rationals.
///
/// All indexing in the public interface is 1-based: entry (1, 1) is the
/// top-left corner and column j of an m x n matrix is j in [1, n]. Values are
/// never mutated in place by the library operations; each operation returns a
/// new matrix.
class Mat {
 public:
  Mat() = default;
  /// Zero matrix.
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);
  explicit Mat(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t min_dim() const { return rows_ < cols_ ? rows_ : cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[(i - 1) * cols_ + (j - 1)];
  }
  Scalar& operator()(std::size_t i, std::size_t j) {
    return data_[(i - 1) * cols_ + (j - 1)];
  }

  /// Bounds-checked access; throws std::out_of_range.
  const Scalar& at(std::size_t i, std::size_t j) const;

  Column column(std::size_t j) const;
  std::vector<Scalar> row(std::size_t i) const;

  /// Copy with `col` placed as column `position` (1 <= position <= cols+1).
  Mat with_column_inserted(std::size_t position, const Column& col) const;
  Mat without_column(std::size_t j) const;
  Mat without_row(std::size_t i) const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Sign pattern (eps_1, ..., eps_p); every entry is exactly +1 or -1.
class SignPattern {
 public:
  SignPattern() = default;
  explicit SignPattern(std::vector<int> signs);

  /// Parses a string over {'+', '-'}; throws std::invalid_argument otherwise.
  static SignPattern parse(std::string_view text);

  std::size_t size() const { return signs_.size(); }
  bool empty() const { return signs_.empty(); }
  /// eps_k, 1-based.
  int operator[](std::size_t k) const { return signs_[k - 1]; }
  int last() const { return signs_.back(); }
  const std::vector<int>& values() const { return signs_; }

  SignPattern prefix(std::size_t p) const;
  SignPattern extended(int sign) const;
  std::string to_string() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  std::vector<int> signs_;
};

/// {start, start+1, ..., start+length-1}; bounds are checked where used.
struct ContiguousSet {
  std::size_t start = 1;
  std::size_t length = 1;

  std::size_t last() const { return start + length - 1; }
  IndexSet indices() const;

  friend bool operator==(const ContiguousSet&, const ContiguousSet&) = default;
};

/// A_{I x J}. Index sets must be non-empty, strictly increasing and in range;
/// throws std::out_of_range / std::invalid_argument otherwise.
Mat submatrix(const Mat& a, const IndexSet& rows, const IndexSet& cols);

/// det A_{I x J} for |I| = |J| >= 1.
Scalar minor(const Mat& a, const IndexSet& rows, const IndexSet& cols);

/// Contiguous minor with rows [row_start, row_start+k) and columns
/// [col_start, col_start+k). No validation beyond debug asserts.
Scalar contiguous_minor(const Mat& a, std::size_t row_start, std::size_t col_start,
                        std::size_t k);

/// P_n: ones on the anti-diagonal.
Mat exchange_matrix(std::size_t n);

/// A * P_n.
Mat reverse_columns(const Mat& a);
/// P_m * A.
Mat reverse_rows(const Mat& a);
Mat transpose(const Mat& a);
Mat multiply(const Mat& a, const Mat& b);
Mat identity(std::size_t n);

/// eps'_i = (-1)^floor(i/2) eps_i, the pattern of A * P_n when A is SSR(eps).
SignPattern transform_sign_pattern(const SignPattern& eps);

/// All n-k+1 contiguous subsets of [n] of size k, by increasing start.
std::vector<ContiguousSet> contiguous_sets(std::size_t n, std::size_t k);

std::string format_index_set(const IndexSet& s);

}  // namespace ssr

#endif  // SSR_MATRIX_HPP
