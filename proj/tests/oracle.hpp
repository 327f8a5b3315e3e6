#ifndef SSR_TESTS_ORACLE_HPP
#define SSR_TESTS_ORACLE_HPP

// Test-only reference implementations. Nothing here calls into the library's
// determinant or verification code.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ssr/matrix.hpp"

namespace ssr::oracle {

/// Laplace expansion along the first row on a plain nested vector.
inline Scalar cofactor_det(const std::vector<std::vector<Scalar>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Scalar total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(a[0][j]) == 0) continue;
    std::vector<std::vector<Scalar>> sub(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) sub[i - 1].push_back(a[i][c]);
      }
    }
    const Scalar term = a[0][j] * cofactor_det(sub);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

inline Scalar cofactor_det(const Mat& m) {
  std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i + 1, j + 1);
  }
  return cofactor_det(a);
}

/// Sign pattern of order p if every minor of size <= p is non-zero with a
/// common sign per size; enumerates index sets as bitmasks, so only for
/// dimensions below 16.
inline std::optional<std::vector<int>> brute_pattern(const Mat& m, std::size_t p) {
  std::vector<int> pattern;
  for (std::size_t k = 1; k <= p; ++k) {
    int sign = 0;
    for (std::uint32_t rm = 0; rm < (1u << m.rows()); ++rm) {
      if (static_cast<std::size_t>(__builtin_popcount(rm)) != k) continue;
      for (std::uint32_t cm = 0; cm < (1u << m.cols()); ++cm) {
        if (static_cast<std::size_t>(__builtin_popcount(cm)) != k) continue;
        std::vector<std::vector<Scalar>> sub;
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (!(rm >> i & 1u)) continue;
          std::vector<Scalar> row;
          for (std::size_t j = 0; j < m.cols(); ++j) {
            if (cm >> j & 1u) row.push_back(m(i + 1, j + 1));
          }
          sub.push_back(std::move(row));
        }
        const int s = sgn(cofactor_det(sub));
        if (s == 0) return std::nullopt;
        if (sign == 0) sign = s;
        if (s != sign) return std::nullopt;
      }
    }
    pattern.push_back(sign);
  }
  return pattern;
}

/// Every pattern in {+1,-1}^len, in binary counting order with '+' first.
inline std::vector<SignPattern> all_patterns(std::size_t len) {
  std::vector<SignPattern> out;
  for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
    std::vector<int> s(len);
    for (std::size_t i = 0; i < len; ++i) s[i] = (bits >> i & 1u) ? -1 : 1;
    out.emplace_back(std::move(s));
  }
  return out;
}

inline Mat random_integer_matrix(std::mt19937& rng, std::size_t m, std::size_t n, int lo,
                                 int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Mat a(m, n);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) a(i, j) = dist(rng);
  }
  return a;
}

inline Mat random_rational_matrix(std::mt19937& rng, std::size_t m, std::size_t n) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  Mat a(m, n);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      Scalar x(num(rng), den(rng));
      x.canonicalize();
      a(i, j) = x;
    }
  }
  return a;
}

}  // namespace ssr::oracle

#endif  // SSR_TESTS_ORACLE_HPP
