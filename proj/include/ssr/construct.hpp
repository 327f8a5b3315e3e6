#ifndef SSR_CONSTRUCT_HPP
#define SSR_CONSTRUCT_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssr/matrix.hpp"

namespace ssr {

/// Message used when a sign pattern does not have the required length.
inline constexpr const char* kPatternLengthMessage =
    "The length of the sign pattern is not correct!";

/// Caller-side misuse: bad shape, index, order, or a sign argument supplied
/// or omitted against the operation's rules.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input matrix is not SSR (or SSR_p) as the operation requires.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Side { left, right, top, bottom };

std::string to_string(Side side);
Side parse_side(std::string_view text);

/// One perturbation of the new column: delta added to entry (row, 1), with
/// 0 < |delta| < lambda / Lambda.
struct PerturbationRecord {
  std::size_t row = 0;
  Scalar delta;
  Scalar lambda;
  Scalar Lambda;
};

/// eps_size chosen when minors of a new size first appeared.
struct PatternExtension {
  std::size_t size = 0;
  int sign = 0;
};

/// Everything chosen while building a matrix, in order of choice.
struct ConstructionTrace {
  /// Positive coefficients y_1..y_q of each inserted column, before the
  /// alternating signs are applied.
  std::vector<std::vector<Scalar>> y_choices;
  std::vector<PerturbationRecord> delta_choices;
  std::vector<PatternExtension> pattern_extensions;
  /// Set when an input exceeded kOracleDimLimit and its precondition was
  /// checked with the contiguous-minor criterion only.
  bool oracle_skipped = false;

  void append(const ConstructionTrace& other);
};

struct Construction {
  Mat matrix;
  ConstructionTrace trace;
};

/// Coefficients x_i (i != k, increasing i) with c^k = sum x_i c^i for an
/// (n-1) x n matrix, via Cramer's rule. For SSR input the signs follow
/// sign(x_i) = (-1)^i for odd k and (-1)^(i-1) for even k. SSR-ness is the
/// caller's responsibility; throws ContractError on a shape mismatch or when
/// the remaining columns are singular.
std::vector<Scalar> column_relation(const Mat& a, std::size_t k);

/// Adds c = sum_{i<=q} (-1)^(i-1) y_i c^i on the left, q = min(m, n).
/// For m <= n the result is SSR(eps); for m > n it is SSR_n(eps) with every
/// (n+1) x (n+1) minor exactly zero. Throws PreconditionError when A is not SSR.
Mat add_col_left(const Mat& a, ConstructionTrace* trace = nullptr);

/// Perturbs the first m-n entries of column 1 of Ahat = [c | A] (A m x n SSR,
/// m > n, c in the span of A) so the result is SSR_{n+1}. new_sign = +1 makes
/// eps_{n+1} = eps_n, -1 makes eps_{n+1} = -eps_n.
Mat perturb_first_column(const Mat& ahat, int new_sign, ConstructionTrace* trace = nullptr);

/// Adds one line on `side` of an SSR matrix. `new_size_sign` must be given
/// exactly when the line creates minors of size min(m,n)+1; +1 repeats the
/// last sign of the pattern, -1 flips it.
Mat extend_border(const Mat& a, Side side, std::optional<int> new_size_sign = std::nullopt,
                  ConstructionTrace* trace = nullptr);

/// m x n SSR(eps), len(eps) = min(m, n).
Construction ssr_construction(std::size_t m, std::size_t n, const SignPattern& eps);

/// m x n SSR_p(eps) with p < min(m, n), len(eps) = p.
Construction ssr_p_construction(std::size_t m, std::size_t n, std::size_t p,
                                const SignPattern& eps);

/// Adds one line on `side` of an SSR_p matrix keeping it SSR_p. Only the p
/// lines nearest to the new one are used to form it.
Mat extend_border_ssr_p(const Mat& a, std::size_t p, Side side,
                        ConstructionTrace* trace = nullptr);

}  // namespace ssr

#endif  // SSR_CONSTRUCT_HPP
