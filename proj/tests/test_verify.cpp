#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "ssr/construct.hpp"
#include "ssr/verify.hpp"

using namespace ssr;

namespace {

const Mat kCounterexample{{10, 1, 3, 6}, {1, 1, 2, 1}, {1, 2, 3, 1}};

void check_same(const SsrReport& a, const SsrReport& b) {
  CHECK(a.verdict == b.verdict);
  CHECK(a.inferred_pattern == b.inferred_pattern);
}

}  // namespace

TEST_CASE("verify_contiguous examples") {
  const auto seed = verify_contiguous(Mat{{2, 1}, {1, 1}}, 2);
  REQUIRE(seed.accepted());
  CHECK(seed.order_checked == 2);
  CHECK(*seed.inferred_pattern == SignPattern::parse("++"));
  CHECK_FALSE(seed.witness);

  const auto ones = verify_contiguous(Mat{{1, 1, 1, 1, 1}}, 1);
  REQUIRE(ones.accepted());
  CHECK(*ones.inferred_pattern == SignPattern::parse("+"));

  // Size 2 contiguous minors in (row, col) start order: 10-1=9 sets eps_2 = +,
  // then rows {1,2} cols {2,3} give 1*2-3*1 = -1.
  const auto counter = verify_contiguous(kCounterexample, 3);
  REQUIRE_FALSE(counter.accepted());
  CHECK_FALSE(counter.inferred_pattern);
  REQUIRE(counter.witness);
  CHECK(counter.witness->rows == IndexSet{1, 2});
  CHECK(counter.witness->cols == IndexSet{2, 3});
  CHECK(counter.witness->value == -1);
  CHECK(counter.witness->required_sign == 1);
}

TEST_CASE("verify_full examples") {
  const auto seed = verify_full(Mat{{1, 1}, {2, 1}}, 2);
  REQUIRE(seed.accepted());
  CHECK(*seed.inferred_pattern == SignPattern::parse("+-"));

  const auto zero = verify_full(Mat{{1, 2}, {0, 3}, {4, 5}}, 1);
  REQUIRE(zero.witness);
  CHECK(zero.witness->rows == IndexSet{2});
  CHECK(zero.witness->cols == IndexSet{1});
  CHECK(zero.witness->value == 0);

  const Mat built = ssr_construction(3, 4, SignPattern::parse("+-+")).matrix;
  const auto report = verify_full(built, 3);
  REQUIRE(report.accepted());
  CHECK(*report.inferred_pattern == SignPattern::parse("+-+"));
  CHECK(oracle::brute_pattern(built, 3) == std::vector<int>{1, -1, 1});

  const auto counter = verify_full(kCounterexample, 3);
  REQUIRE(counter.witness);
  CHECK(counter.witness->rows == IndexSet{1, 2});
  CHECK(counter.witness->cols == IndexSet{2, 3});
  CHECK(counter.witness->value == -1);
  CHECK(describe(*counter.witness) == "rows {1,2} cols {2,3} minor -1 (required sign +)");
}

TEST_CASE("expected pattern is enforced") {
  const Mat a{{2, 1}, {1, 1}};
  CHECK(verify_full(a, 2, SignPattern::parse("++")).accepted());
  const auto wrong = verify_full(a, 2, SignPattern::parse("+-"));
  REQUIRE(wrong.witness);
  CHECK(wrong.witness->rows == IndexSet{1, 2});
  CHECK(wrong.witness->required_sign == -1);
  const auto wrong_first = verify_contiguous(a, 2, SignPattern::parse("-+"));
  REQUIRE(wrong_first.witness);
  CHECK(wrong_first.witness->rows == IndexSet{1});
  CHECK(wrong_first.witness->cols == IndexSet{1});
  CHECK(wrong_first.witness->value == 2);
}

TEST_CASE("infer_sign_pattern") {
  CHECK(*infer_sign_pattern(Mat{{-1, -1}, {-2, -1}}).inferred_pattern ==
        SignPattern::parse("--"));
  CHECK(*infer_sign_pattern(Mat{{-2, -1}, {-1, -1}}).inferred_pattern ==
        SignPattern::parse("-+"));
  const auto id = infer_sign_pattern(identity(2));
  REQUIRE(id.witness);
  CHECK(id.witness->rows == IndexSet{1});
  CHECK(id.witness->cols == IndexSet{2});
  CHECK(id.witness->value == 0);
}

TEST_CASE("order and length errors") {
  const Mat a{{2, 1}, {1, 1}};
  CHECK_THROWS_AS(verify_full(a, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_full(a, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_contiguous(a, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_contiguous(a, 2, SignPattern::parse("+")), std::invalid_argument);
}

TEST_CASE("rejection witness disagrees with its required sign") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Mat a = oracle::random_integer_matrix(rng, 3, 3, -2, 2);
    for (std::size_t p = 1; p <= 3; ++p) {
      const auto r = verify_full(a, p);
      if (r.accepted()) {
        CHECK(r.inferred_pattern->size() == p);
        continue;
      }
      REQUIRE(r.witness);
      CHECK(r.witness->rows.size() <= p);
      CHECK((sign_of(r.witness->value) == 0 ||
             sign_of(r.witness->value) != r.witness->required_sign));
      CHECK(minor(a, r.witness->rows, r.witness->cols) == r.witness->value);
    }
  }
}

TEST_CASE("contiguous criterion matches full enumeration on {-2,-1,1,2} matrices") {
  const int vals[] = {-2, -1, 1, 2};
  for (std::size_t m = 1; m <= 2; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const std::size_t cells = m * n;
      std::size_t total = 1;
      for (std::size_t c = 0; c < cells; ++c) total *= 4;
      for (std::size_t code = 0; code < total; ++code) {
        Mat a(m, n);
        std::size_t rest = code;
        for (std::size_t c = 0; c < cells; ++c) {
          a(c / n + 1, c % n + 1) = vals[rest % 4];
          rest /= 4;
        }
        for (std::size_t p = 1; p <= std::min(m, n); ++p) {
          check_same(verify_contiguous(a, p), verify_full(a, p));
        }
      }
    }
  }
}

TEST_CASE("monotone in the order, invariant under transpose") {
  std::mt19937 rng(5);
  std::size_t accepted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Mat a;
    if (trial % 2 == 0) {
      a = oracle::random_integer_matrix(rng, 3, 4, 1, 3);
    } else {
      const auto pats = oracle::all_patterns(3);
      a = ssr_construction(3, 4, pats[trial % pats.size()]).matrix;
    }
    for (std::size_t p = 1; p <= 3; ++p) {
      const auto r = verify_full(a, p);
      check_same(r, verify_full(transpose(a), p));
      if (!r.accepted()) continue;
      ++accepted;
      for (std::size_t q = 1; q <= p; ++q) {
        const auto s = verify_full(a, q);
        REQUIRE(s.accepted());
        CHECK(*s.inferred_pattern == r.inferred_pattern->prefix(q));
      }
    }
  }
  CHECK(accepted > 100);
}

TEST_CASE("reversing columns transforms the pattern") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& eps : oracle::all_patterns(3)) {
      const Mat a = ssr_construction(3, n + 1, eps).matrix;
      for (std::size_t p = 1; p <= 3; ++p) {
        const auto r = verify_full(reverse_columns(a), p);
        REQUIRE(r.accepted());
        CHECK(*r.inferred_pattern == transform_sign_pattern(eps.prefix(p)));
      }
    }
  }
}

TEST_CASE("verify_auto switches to the contiguous test above the oracle limit") {
  const Mat big = ssr_construction(8, 8, SignPattern(std::vector<int>(8, 1))).matrix;
  const auto r = verify_auto(big, 8);
  REQUIRE(r.accepted());
  CHECK(*r.inferred_pattern == SignPattern(std::vector<int>(8, 1)));
}
