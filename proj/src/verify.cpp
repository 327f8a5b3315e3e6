#include "ssr/verify.hpp"

#include <stdexcept>
#include <vector>

#include "ssr/determinant.hpp"

namespace ssr {

namespace {

void check_order(const Mat& a, std::size_t p, const std::optional<SignPattern>& expected) {
  if (p < 1 || p > a.min_dim()) {
    throw std::invalid_argument("order p=" + std::to_string(p) + " outside [1, " +
                                std::to_string(a.min_dim()) + "]");
  }
  if (expected && expected->size() != p) {
    throw std::invalid_argument("expected sign pattern has length " +
                                std::to_string(expected->size()) + ", need " +
                                std::to_string(p));
  }
}

// Collects eps_k while minors of one size stream in; produces the witness on
// the first zero or disagreeing minor.
class SignTracker {
 public:
  explicit SignTracker(const std::optional<SignPattern>& expected) : expected_(expected) {}

  void start_size(std::size_t k) {
    current_ = expected_ ? (*expected_)[k] : 0;
  }

  // Returns false when (rows, cols, value) is a witness.
  bool accept(const IndexSet& rows, const IndexSet& cols, const Scalar& value) {
    const int s = sign_of(value);
    if (current_ == 0 && s != 0) current_ = s;
    if (s != 0 && s == current_) return true;
    witness_ = MinorWitness{rows, cols, value, current_ == 0 ? 0 : current_};
    return false;
  }

  void finish_size() { pattern_.push_back(current_); }

  SsrReport report(std::size_t p) const {
    SsrReport r;
    r.order_checked = p;
    if (witness_) {
      r.verdict = Verdict::rejected;
      r.witness = witness_;
    } else {
      r.verdict = Verdict::accepted;
      r.inferred_pattern = SignPattern(pattern_);
    }
    return r;
  }

 private:
  const std::optional<SignPattern>& expected_;
  int current_ = 0;
  std::vector<int> pattern_;
  std::optional<MinorWitness> witness_;
};

// Advances `c` to the next k-combination of [n] in lexicographic order.
bool next_combination(IndexSet& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t t = k; t-- > 0;) {
    if (c[t] < n - (k - 1 - t)) {
      ++c[t];
      for (std::size_t u = t + 1; u < k; ++u) c[u] = c[u - 1] + 1;
      return true;
    }
  }
  return false;
}

IndexSet first_combination(std::size_t k) {
  IndexSet c(k);
  for (std::size_t t = 0; t < k; ++t) c[t] = t + 1;
  return c;
}

}  // namespace

SsrReport verify_contiguous(const Mat& a, std::size_t p,
                            const std::optional<SignPattern>& expected) {
  check_order(a, p, expected);
  SignTracker tracker(expected);
  for (std::size_t k = 1; k <= p; ++k) {
    tracker.start_size(k);
    for (std::size_t i = 1; i + k - 1 <= a.rows(); ++i) {
      for (std::size_t j = 1; j + k - 1 <= a.cols(); ++j) {
        const Scalar value = contiguous_minor(a, i, j, k);
        if (!tracker.accept(ContiguousSet{i, k}.indices(), ContiguousSet{j, k}.indices(),
                            value)) {
          return tracker.report(p);
        }
      }
    }
    tracker.finish_size();
  }
  return tracker.report(p);
}

SsrReport verify_full(const Mat& a, std::size_t p, const std::optional<SignPattern>& expected) {
  check_order(a, p, expected);
  SignTracker tracker(expected);
  Mat sub;
  for (std::size_t k = 1; k <= p; ++k) {
    tracker.start_size(k);
    sub = Mat(k, k);
    IndexSet rows = first_combination(k);
    do {
      IndexSet cols = first_combination(k);
      do {
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub(i + 1, j + 1) = a(rows[i], cols[j]);
        }
        if (!tracker.accept(rows, cols, det_exact(sub))) return tracker.report(p);
      } while (next_combination(cols, a.cols()));
    } while (next_combination(rows, a.rows()));
    tracker.finish_size();
  }
  return tracker.report(p);
}

SsrReport infer_sign_pattern(const Mat& a) { return verify_full(a, a.min_dim()); }

SsrReport verify_auto(const Mat& a, std::size_t p, const std::optional<SignPattern>& expected) {
  if (a.min_dim() <= kOracleDimLimit) return verify_full(a, p, expected);
  return verify_contiguous(a, p, expected);
}

std::string describe(const MinorWitness& w) {
  std::string out = "rows " + format_index_set(w.rows) + " cols " + format_index_set(w.cols) +
                    " minor " + to_string(w.value);
  if (w.required_sign != 0) {
    out += std::string(" (required sign ") + (w.required_sign > 0 ? '+' : '-') + ")";
  }
  return out;
}

}  // namespace ssr
