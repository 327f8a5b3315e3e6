#ifndef SSR_SCALAR_HPP
#define SSR_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ssr {

/// Exact rational number. GMP keeps every mpq_class result in canonical
/// form: positive denominator, gcd(|num|, den) = 1, zero stored as 0/1.
using Scalar = mpq_class;

/// Arbitrary-precision integer used by the fraction-free kernels.
using Integer = mpz_class;

/// Exact sign of x: -1, 0 or +1.
inline int sign_of(const Scalar& x) { return sgn(x); }

/// "num/den", with the denominator omitted when it is 1 ("3/2", "-7", "0").
std::string to_string(const Scalar& x);

/// Parses the canonical textual form produced by to_string. Non-canonical
/// spellings ("2/4", "3/1", "-0", "+1", " 1") are rejected with
/// std::invalid_argument.
Scalar parse_scalar(std::string_view text);

}  // namespace ssr

#endif  // SSR_SCALAR_HPP
