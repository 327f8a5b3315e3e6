#include "ssr/scalar.hpp"

#include <stdexcept>
#include <string>

namespace ssr {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

[[noreturn]] void bad_scalar(std::string_view text) {
  throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
}

}  // namespace

std::string to_string(const Scalar& x) { return x.get_str(10); }

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);

  if (!is_digits(num)) bad_scalar(text);
  if (num.size() > 1 && num.front() == '0') bad_scalar(text);
  if (slash != std::string_view::npos) {
    if (!is_digits(den) || den.front() == '0') bad_scalar(text);
  }

  Scalar value(std::string(body), 10);
  value.canonicalize();
  if (negative) value = -value;
  // Only the canonical spelling round-trips, which rejects "2/4", "3/1", "-0".
  if (to_string(value) != text) bad_scalar(text);
  return value;
}

}  // namespace ssr
