#ifndef SSR_VERIFY_HPP
#define SSR_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "ssr/matrix.hpp"

namespace ssr {

enum class Verdict { accepted, rejected };

/// The offending minor of a rejected matrix. `required_sign` is the sign the
/// minor should have had: the expected eps_k when one was supplied, otherwise
/// the sign of the first minor of that size in enumeration order.
struct MinorWitness {
  IndexSet rows;
  IndexSet cols;
  Scalar value;
  int required_sign = 0;
};

/// Outcome of an SSR_p check.
///
/// accepted: `inferred_pattern` holds eps_1..eps_p and `witness` is empty.
/// rejected: `witness` holds the first offending minor under the enumeration
/// order (size ascending, then row set, then column set, lexicographically)
/// and `inferred_pattern` is empty.
struct SsrReport {
  Verdict verdict = Verdict::rejected;
  std::size_t order_checked = 0;
  std::optional<SignPattern> inferred_pattern;
  std::optional<MinorWitness> witness;

  bool accepted() const { return verdict == Verdict::accepted; }
};

/// Enumeration bound for the full-minor oracle used internally by the
/// constructions: inputs with min(m, n) up to this size are checked with
/// verify_full, larger ones with verify_contiguous.
inline constexpr std::size_t kOracleDimLimit = 7;

/// Karlin's criterion: SSR_p(eps) iff every contiguous k x k minor has sign
/// eps_k for k = 1..p. Throws std::invalid_argument when p is outside
/// [1, min(m, n)] or `expected` has length other than p.
SsrReport verify_contiguous(const Mat& a, std::size_t p,
                            const std::optional<SignPattern>& expected = std::nullopt);

/// Brute-force oracle over every k x k minor, k <= p. Cost is
/// sum_k C(m,k) C(n,k) determinants; intended for min(m, n) <= 7.
SsrReport verify_full(const Mat& a, std::size_t p,
                      const std::optional<SignPattern>& expected = std::nullopt);

/// verify_full at p = min(m, n).
SsrReport infer_sign_pattern(const Mat& a);

/// verify_full up to kOracleDimLimit, verify_contiguous above it.
SsrReport verify_auto(const Mat& a, std::size_t p,
                      const std::optional<SignPattern>& expected = std::nullopt);

/// One-line human readable summary of the witness.
std::string describe(const MinorWitness& w);

}  // namespace ssr

#endif  // SSR_VERIFY_HPP
