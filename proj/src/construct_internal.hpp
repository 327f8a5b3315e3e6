#ifndef SSR_CONSTRUCT_INTERNAL_HPP
#define SSR_CONSTRUCT_INTERNAL_HPP

// Unchecked building blocks shared by the construct and insert modules. None
// of these verify their input; callers establish the SSR precondition once at
// the public entry point.

#include <cstddef>
#include <optional>

#include "ssr/construct.hpp"
#include "ssr/verify.hpp"

namespace ssr::detail {

/// Left-border column built from the first q = min(m, n, order) columns.
Mat add_col_left(const Mat& a, std::optional<std::size_t> order, ConstructionTrace* trace);

Mat perturb_first_column(const Mat& ahat, int new_sign, ConstructionTrace* trace);

/// Smallest half-integer strictly above max(0, bound).
Scalar clear_bound(const Scalar& bound);

/// Largest power of two not exceeding limit / 2, for 0 < limit <= 1.
Scalar dyadic_below_half(const Scalar& limit);

/// True when adding a line on `side` raises min(m, n).
bool creates_new_size(const Mat& a, Side side);

/// Border extension. Without `order` the result is SSR and `rel_sign` must be
/// present exactly when creates_new_size; with `order` the result is SSR_order
/// and `rel_sign` is ignored.
Mat extend(const Mat& a, Side side, std::optional<int> rel_sign,
           std::optional<std::size_t> order, ConstructionTrace* trace);

/// Verifies SSR_p at the entry of a public operation and returns the pattern.
/// Throws PreconditionError on rejection.
SignPattern require_ssr(const Mat& a, std::size_t p, ConstructionTrace* trace,
                        const char* operation);

}  // namespace ssr::detail

#endif  // SSR_CONSTRUCT_INTERNAL_HPP
