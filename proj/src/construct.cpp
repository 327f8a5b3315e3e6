#include "ssr/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "construct_internal.hpp"
#include "ssr/determinant.hpp"
#include "ssr/verify.hpp"

namespace ssr {

std::string to_string(Side side) {
  switch (side) {
    case Side::left:
      return "left";
    case Side::right:
      return "right";
    case Side::top:
      return "top";
    case Side::bottom:
      return "bottom";
  }
  return "?";
}

Side parse_side(std::string_view text) {
  if (text == "left") return Side::left;
  if (text == "right") return Side::right;
  if (text == "top") return Side::top;
  if (text == "bottom") return Side::bottom;
  throw ContractError("unknown side '" + std::string(text) + "'");
}

void ConstructionTrace::append(const ConstructionTrace& other) {
  y_choices.insert(y_choices.end(), other.y_choices.begin(), other.y_choices.end());
  delta_choices.insert(delta_choices.end(), other.delta_choices.begin(),
                       other.delta_choices.end());
  pattern_extensions.insert(pattern_extensions.end(), other.pattern_extensions.begin(),
                            other.pattern_extensions.end());
  oracle_skipped = oracle_skipped || other.oracle_skipped;
}

namespace detail {

Scalar clear_bound(const Scalar& bound) {
  if (sign_of(bound) <= 0) return Scalar(1, 2);
  const Scalar twice = 2 * bound;
  Integer whole;
  mpz_fdiv_q(whole.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
  Scalar y(whole + 1, 2);
  y.canonicalize();
  return y;
}

Scalar dyadic_below_half(const Scalar& limit) {
  // 2^-j <= limit / 2  <=>  2^(j+1) >= den / num.
  Scalar d(1, 2);
  while (d > limit / 2) d /= 2;
  return d;
}

Mat add_col_left(const Mat& a, std::optional<std::size_t> order, ConstructionTrace* trace) {
  const std::size_t m = a.rows();
  std::size_t q = a.min_dim();
  if (order) q = std::min(q, *order);

  // y[1..q]; y[q] = 1 and each lower y_k clears every bound coming from the
  // k x k contiguous minors through the new column.
  std::vector<Scalar> y(q + 1);
  y[q] = 1;
  Mat with_ci;
  for (std::size_t k = q - 1; k >= 1; --k) {
    Scalar best = 0;
    for (std::size_t s = 1; s + k - 1 <= m; ++s) {
      const Scalar lead = contiguous_minor(a, s, 1, k);
      if (sign_of(lead) == 0) {
        throw std::logic_error("add_col_left: vanishing contiguous minor, input is not SSR");
      }
      // sum_{i>k} (-1)^(i+k) y_i det[c^1 .. c^(k-1) | c^i][I]
      Scalar acc = 0;
      with_ci = Mat(k, k);
      for (std::size_t r = 1; r <= k; ++r) {
        for (std::size_t j = 1; j < k; ++j) with_ci(r, j) = a(s + r - 1, j);
      }
      for (std::size_t i = k + 1; i <= q; ++i) {
        for (std::size_t r = 1; r <= k; ++r) with_ci(r, k) = a(s + r - 1, i);
        const Scalar term = y[i] * det_exact(with_ci);
        if ((i + k) % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      const Scalar bound = -acc / lead;
      if (bound > best) best = bound;
    }
    y[k] = clear_bound(best);
  }

  Column c(m);
  for (std::size_t i = 1; i <= q; ++i) {
    const Scalar coeff = (i % 2 == 1) ? y[i] : Scalar(-y[i]);
    for (std::size_t r = 1; r <= m; ++r) c[r - 1] += coeff * a(r, i);
  }
  if (trace) trace->y_choices.emplace_back(y.begin() + 1, y.end());
  return a.with_column_inserted(1, c);
}

Mat perturb_first_column(const Mat& ahat, int new_sign, ConstructionTrace* trace) {
  const std::size_t m = ahat.rows();
  const std::size_t n = ahat.cols() - 1;
  const std::size_t top = std::min(n + 1, m);
  Mat current = ahat;
  // A_k = [e^k | A] differs from Ahat only in column 1.
  Mat unit = ahat;
  for (std::size_t k = 1; k + n <= m; ++k) {
    for (std::size_t r = 1; r <= m; ++r) unit(r, 1) = (r == k) ? 1 : 0;

    std::optional<Scalar> lambda;
    std::optional<Scalar> Lambda;
    auto consider = [&](const Scalar& minor_value) {
      if (sign_of(minor_value) == 0) return;
      const Scalar mod = abs(minor_value);
      if (!lambda || mod < *lambda) lambda = mod;
      if (!Lambda || mod > *Lambda) Lambda = mod;
    };
    // Contiguous minors on columns [1, r] whose rows contain row k.
    for (std::size_t r = 1; r <= top; ++r) {
      const std::size_t first = k >= r ? k - r + 1 : 1;
      for (std::size_t s = first; s <= k && s + r - 1 <= m; ++s) {
        consider(contiguous_minor(current, s, 1, r));
        consider(contiguous_minor(unit, s, 1, r));
      }
    }
    if (!lambda) {
      throw std::logic_error("perturb_first_column: no non-zero minor bounds the perturbation");
    }
    const Scalar delta = new_sign * dyadic_below_half(*lambda / *Lambda);
    current(k, 1) += delta;
    if (trace) trace->delta_choices.push_back({k, delta, *lambda, *Lambda});
  }
  return current;
}

bool creates_new_size(const Mat& a, Side side) {
  if (side == Side::left || side == Side::right) return a.rows() > a.cols();
  return a.cols() > a.rows();
}

namespace {

Mat extend_left(const Mat& a, std::optional<int> rel_sign, std::optional<std::size_t> order,
                ConstructionTrace* trace) {
  if (order) return detail::add_col_left(a, order, trace);
  Mat out = detail::add_col_left(a, std::nullopt, trace);
  if (a.rows() > a.cols()) {
    if (!rel_sign) throw std::logic_error("extend: missing sign for the new minor size");
    out = detail::perturb_first_column(out, *rel_sign, trace);
  }
  return out;
}

// Relative sign request after conjugating by the exchange matrix: if the
// reversed matrix has min dimension q, eps'_{q+1} eps'_q = (-1)^q eps_{q+1} eps_q.
std::optional<int> through_reversal(std::optional<int> rel_sign, std::size_t q) {
  if (!rel_sign) return rel_sign;
  return q % 2 == 0 ? *rel_sign : -*rel_sign;
}

}  // namespace

Mat extend(const Mat& a, Side side, std::optional<int> rel_sign,
           std::optional<std::size_t> order, ConstructionTrace* trace) {
  const std::size_t q = a.min_dim();
  switch (side) {
    case Side::left:
      return extend_left(a, rel_sign, order, trace);
    case Side::right:
      return reverse_columns(
          extend_left(reverse_columns(a), through_reversal(rel_sign, q), order, trace));
    case Side::top:
      return transpose(extend_left(transpose(a), rel_sign, order, trace));
    case Side::bottom:
      return transpose(reverse_columns(extend_left(
          reverse_columns(transpose(a)), through_reversal(rel_sign, q), order, trace)));
  }
  throw std::logic_error("extend: unknown side");
}

SignPattern require_ssr(const Mat& a, std::size_t p, ConstructionTrace* trace,
                        const char* operation) {
  const SsrReport report = verify_auto(a, p);
  if (trace && a.min_dim() > kOracleDimLimit) trace->oracle_skipped = true;
  if (!report.accepted()) {
    std::string why = std::string(operation) + ": input is not SSR";
    if (p < a.min_dim()) why += "_" + std::to_string(p);
    if (report.witness) why += " (" + describe(*report.witness) + ")";
    throw PreconditionError(why);
  }
  return *report.inferred_pattern;
}

}  // namespace detail

namespace {

void check_sign_value(std::optional<int> s) {
  if (s && *s != 1 && *s != -1) throw ContractError("new_size_sign must be +1 or -1");
}

}  // namespace

std::vector<Scalar> column_relation(const Mat& a, std::size_t k) {
  const std::size_t n = a.cols();
  if (n < 2 || a.rows() + 1 != n) {
    throw ContractError("column_relation: need an (n-1) x n matrix");
  }
  if (k < 1 || k > n) throw ContractError("column_relation: column index out of range");
  const Mat rest = a.without_column(k);
  const Scalar denom = det_exact(rest);
  if (sign_of(denom) == 0) {
    throw ContractError("column_relation: remaining columns are linearly dependent");
  }
  const Column target = a.column(k);
  std::vector<Scalar> x;
  x.reserve(n - 1);
  // Cramer's rule: replace the column that holds c^i in `rest` by c^k.
  for (std::size_t pos = 1; pos <= n - 1; ++pos) {
    Mat replaced = rest;
    for (std::size_t r = 1; r <= rest.rows(); ++r) replaced(r, pos) = target[r - 1];
    x.push_back(det_exact(replaced) / denom);
  }
  return x;
}

Mat add_col_left(const Mat& a, ConstructionTrace* trace) {
  if (a.rows() == 0 || a.cols() == 0) throw ContractError("add_col_left: empty matrix");
  detail::require_ssr(a, a.min_dim(), trace, "add_col_left");
  return detail::add_col_left(a, std::nullopt, trace);
}

Mat perturb_first_column(const Mat& ahat, int new_sign, ConstructionTrace* trace) {
  check_sign_value(new_sign);
  if (ahat.cols() < 2 || ahat.rows() <= ahat.cols() - 1) {
    throw ContractError("perturb_first_column: need an m x (n+1) matrix with m > n");
  }
  const std::size_t n = ahat.cols() - 1;
  const Mat a = ahat.without_column(1);
  detail::require_ssr(a, n, trace, "perturb_first_column");
  if (rank_exact(ahat) != n) {
    throw PreconditionError("perturb_first_column: first column is not in the span of the rest");
  }
  return detail::perturb_first_column(ahat, new_sign, trace);
}

Mat extend_border(const Mat& a, Side side, std::optional<int> new_size_sign,
                  ConstructionTrace* trace) {
  if (a.rows() == 0 || a.cols() == 0) throw ContractError("extend_border: empty matrix");
  check_sign_value(new_size_sign);
  const bool grows = detail::creates_new_size(a, side);
  if (grows && !new_size_sign) {
    throw ContractError("extend_border: adding on the " + to_string(side) +
                        " creates minors of size " + std::to_string(a.min_dim() + 1) +
                        "; a new-size sign is required");
  }
  if (!grows && new_size_sign) {
    throw ContractError("extend_border: adding on the " + to_string(side) +
                        " creates no new minor size; a new-size sign must not be given");
  }
  const SignPattern eps = detail::require_ssr(a, a.min_dim(), trace, "extend_border");
  Mat out = detail::extend(a, side, new_size_sign, std::nullopt, trace);
  if (grows && trace) {
    trace->pattern_extensions.push_back({a.min_dim() + 1, *new_size_sign * eps.last()});
  }
  return out;
}

namespace {

Mat seed_2x2(const SignPattern& eps) {
  if (eps[1] > 0 && eps[2] > 0) return Mat{{2, 1}, {1, 1}};
  if (eps[1] > 0) return Mat{{1, 1}, {2, 1}};
  if (eps[2] > 0) return Mat{{-2, -1}, {-1, -1}};
  return Mat{{-1, -1}, {-2, -1}};
}

Mat constant_matrix(std::size_t m, std::size_t n, int value) {
  Mat out(m, n);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) out(i, j) = value;
  }
  return out;
}

void check_output(const Mat& out, std::size_t p, const SignPattern& eps,
                  ConstructionTrace& trace, const char* operation) {
  if (out.min_dim() > kOracleDimLimit) trace.oracle_skipped = true;
  const SsrReport report = verify_auto(out, p, eps);
  if (!report.accepted()) {
    throw std::logic_error(std::string(operation) + ": produced matrix fails verification (" +
                           describe(*report.witness) + ")");
  }
}

}  // namespace

Construction ssr_construction(std::size_t m, std::size_t n, const SignPattern& eps) {
  if (m == 0 || n == 0) throw ContractError("ssr_construction: dimensions must be positive");
  const std::size_t d = std::min(m, n);
  if (eps.size() != d) throw ContractError(kPatternLengthMessage);

  Construction result;
  ConstructionTrace& trace = result.trace;
  if (d == 1) {
    result.matrix = constant_matrix(m, n, eps[1]);
    return result;
  }

  Mat a = seed_2x2(eps);
  // Alternate left insertion and transposition; every second step the matrix
  // turns square and the new top size gets its sign from the perturbation.
  // 2d - 4 steps take the 2 x 2 seed to d x d.
  for (std::size_t step = 1; step + 4 <= 2 * d; ++step) {
    const std::size_t q = a.min_dim();
    Mat b = detail::add_col_left(a, std::nullopt, &trace);
    if (b.is_square()) {
      b = detail::perturb_first_column(b, eps[q + 1] * eps[q], &trace);
      trace.pattern_extensions.push_back({q + 1, eps[q + 1]});
    }
    a = transpose(b);
  }
  if (m != n) {
    for (std::size_t s = 0; s < std::max(m, n) - d; ++s) {
      a = detail::add_col_left(a, std::nullopt, &trace);
    }
    if (d != m) a = transpose(a);
  }
  check_output(a, d, eps, trace, "ssr_construction");
  result.matrix = std::move(a);
  return result;
}

Construction ssr_p_construction(std::size_t m, std::size_t n, std::size_t p,
                                const SignPattern& eps) {
  if (eps.size() != p) throw ContractError(kPatternLengthMessage);
  if (p < 1 || p >= std::min(m, n)) {
    throw ContractError("ssr_p_construction: need 1 <= p < min(m, n); use ssr_construction "
                        "for p = min(m, n)");
  }
  Construction result = ssr_construction(p, p, eps);
  ConstructionTrace& trace = result.trace;
  Mat a = std::move(result.matrix);
  for (std::size_t s = 0; s < m - p; ++s) a = detail::add_col_left(a, p, &trace);
  a = transpose(a);
  // Columns beyond the p-th never enter an order-p minor through column 1, so
  // only the first p columns are combined.
  for (std::size_t s = 0; s < n - p; ++s) a = detail::add_col_left(a, p, &trace);
  check_output(a, p, eps, trace, "ssr_p_construction");
  result.matrix = std::move(a);
  return result;
}

Mat extend_border_ssr_p(const Mat& a, std::size_t p, Side side, ConstructionTrace* trace) {
  if (p < 1 || p > a.min_dim()) {
    throw ContractError("extend_border_ssr_p: order p outside [1, min(m, n)]");
  }
  detail::require_ssr(a, p, trace, "extend_border_ssr_p");
  return detail::extend(a, side, std::nullopt, p, trace);
}

}  // namespace ssr
