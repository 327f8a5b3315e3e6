#include "ssr/matrix.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

#include "ssr/determinant.hpp"

namespace ssr {

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Mat: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat::Mat(const std::vector<std::vector<Scalar>>& rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.front().size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Mat: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

const Scalar& Mat::at(std::size_t i, std::size_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw std::out_of_range("Mat::at: index (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") outside " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return (*this)(i, j);
}

Column Mat::column(std::size_t j) const {
  if (j < 1 || j > cols_) throw std::out_of_range("Mat::column: index out of range");
  Column out;
  out.reserve(rows_);
  for (std::size_t i = 1; i <= rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

std::vector<Scalar> Mat::row(std::size_t i) const {
  if (i < 1 || i > rows_) throw std::out_of_range("Mat::row: index out of range");
  return {data_.begin() + static_cast<std::ptrdiff_t>((i - 1) * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>(i * cols_)};
}

Mat Mat::with_column_inserted(std::size_t position, const Column& col) const {
  if (position < 1 || position > cols_ + 1) {
    throw std::out_of_range("Mat::with_column_inserted: position out of range");
  }
  if (col.size() != rows_) {
    throw std::invalid_argument("Mat::with_column_inserted: column length mismatch");
  }
  Mat out(rows_, cols_ + 1);
  for (std::size_t i = 1; i <= rows_; ++i) {
    for (std::size_t j = 1; j <= cols_ + 1; ++j) {
      if (j < position) {
        out(i, j) = (*this)(i, j);
      } else if (j == position) {
        out(i, j) = col[i - 1];
      } else {
        out(i, j) = (*this)(i, j - 1);
      }
    }
  }
  return out;
}

Mat Mat::without_column(std::size_t j) const {
  if (j < 1 || j > cols_) throw std::out_of_range("Mat::without_column: index out of range");
  Mat out(rows_, cols_ - 1);
  for (std::size_t i = 1; i <= rows_; ++i) {
    for (std::size_t c = 1, d = 1; c <= cols_; ++c) {
      if (c != j) out(i, d++) = (*this)(i, c);
    }
  }
  return out;
}

Mat Mat::without_row(std::size_t i) const {
  if (i < 1 || i > rows_) throw std::out_of_range("Mat::without_row: index out of range");
  Mat out(rows_ - 1, cols_);
  for (std::size_t r = 1, d = 1; r <= rows_; ++r) {
    if (r == i) continue;
    for (std::size_t c = 1; c <= cols_; ++c) out(d, c) = (*this)(r, c);
    ++d;
  }
  return out;
}

SignPattern::SignPattern(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("SignPattern: entries must be +1 or -1");
    }
  }
}

SignPattern SignPattern::parse(std::string_view text) {
  std::vector<int> signs;
  signs.reserve(text.size());
  for (char ch : text) {
    if (ch == '+') {
      signs.push_back(1);
    } else if (ch == '-') {
      signs.push_back(-1);
    } else {
      throw std::invalid_argument("malformed sign pattern '" + std::string(text) +
                                  "': expected only '+' and '-'");
    }
  }
  if (signs.empty()) throw std::invalid_argument("empty sign pattern");
  return SignPattern(std::move(signs));
}

SignPattern SignPattern::prefix(std::size_t p) const {
  if (p > signs_.size()) throw std::out_of_range("SignPattern::prefix: too long");
  return SignPattern(std::vector<int>(signs_.begin(), signs_.begin() + static_cast<std::ptrdiff_t>(p)));
}

SignPattern SignPattern::extended(int sign) const {
  std::vector<int> out = signs_;
  out.push_back(sign);
  return SignPattern(std::move(out));
}

std::string SignPattern::to_string() const {
  std::string out;
  out.reserve(signs_.size());
  for (int s : signs_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

IndexSet ContiguousSet::indices() const {
  IndexSet out(length);
  for (std::size_t t = 0; t < length; ++t) out[t] = start + t;
  return out;
}

namespace {

void check_index_set(const IndexSet& s, std::size_t bound, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string(what) + " index set is empty");
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (s[t] < 1 || s[t] > bound) {
      throw std::out_of_range(std::string(what) + " index " + std::to_string(s[t]) +
                              " outside [1, " + std::to_string(bound) + "]");
    }
    if (t > 0 && s[t] <= s[t - 1]) {
      throw std::invalid_argument(std::string(what) + " indices must be strictly increasing");
    }
  }
}

}  // namespace

Mat submatrix(const Mat& a, const IndexSet& rows, const IndexSet& cols) {
  check_index_set(rows, a.rows(), "row");
  check_index_set(cols, a.cols(), "column");
  Mat out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i + 1, j + 1) = a(rows[i], cols[j]);
  }
  return out;
}

Scalar minor(const Mat& a, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) {
    throw std::invalid_argument("minor: row and column index sets differ in size");
  }
  return det_exact(submatrix(a, rows, cols));
}

Scalar contiguous_minor(const Mat& a, std::size_t row_start, std::size_t col_start,
                        std::size_t k) {
  assert(row_start + k - 1 <= a.rows() && col_start + k - 1 <= a.cols());
  if (k == 1) return a(row_start, col_start);
  Mat sub(k, k);
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) sub(i, j) = a(row_start + i - 1, col_start + j - 1);
  }
  return det_exact(sub);
}

Mat exchange_matrix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("exchange_matrix: n must be positive");
  Mat p(n, n);
  for (std::size_t i = 1; i <= n; ++i) p(i, n + 1 - i) = 1;
  return p;
}

Mat reverse_columns(const Mat& a) {
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) out(i, j) = a(i, a.cols() + 1 - j);
  }
  return out;
}

Mat reverse_rows(const Mat& a) {
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) out(i, j) = a(a.rows() + 1 - i, j);
  }
  return out;
}

Mat transpose(const Mat& a) {
  Mat out(a.cols(), a.rows());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

Mat multiply(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= b.cols(); ++j) {
      Scalar acc = 0;
      for (std::size_t k = 1; k <= a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

Mat identity(std::size_t n) {
  Mat out(n, n);
  for (std::size_t i = 1; i <= n; ++i) out(i, i) = 1;
  return out;
}

SignPattern transform_sign_pattern(const SignPattern& eps) {
  std::vector<int> out(eps.size());
  for (std::size_t i = 1; i <= eps.size(); ++i) {
    out[i - 1] = ((i / 2) % 2 == 0) ? eps[i] : -eps[i];
  }
  return SignPattern(std::move(out));
}

std::vector<ContiguousSet> contiguous_sets(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw std::invalid_argument("contiguous_sets: need 1 <= k <= n");
  std::vector<ContiguousSet> out;
  out.reserve(n - k + 1);
  for (std::size_t s = 1; s + k - 1 <= n; ++s) out.push_back({s, k});
  return out;
}

std::string format_index_set(const IndexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (t) os << ',';
    os << s[t];
  }
  os << '}';
  return os.str();
}

}  // namespace ssr
