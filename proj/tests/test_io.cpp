#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "ssr/construct.hpp"
#include "ssr/io.hpp"

using namespace ssr;

TEST_CASE("csv text") {
  const Mat a{{1, Scalar(-3, 2)}, {0, 7}};
  CHECK(to_csv(a) == "1,-3/2\n0,7\n");
  CHECK(parse_csv("1,-3/2\n0,7\n") == a);
  CHECK(parse_csv("1,-3/2\r\n\r\n0,7") == a);
  CHECK_THROWS_AS(parse_csv("1,2\n3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("1,2/4\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("1,0.5\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("1,,2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv(""), std::invalid_argument);
}

TEST_CASE("json document") {
  MatrixDocument doc;
  doc.matrix = Mat{{1, 1}, {2, 1}};
  doc.pattern = SignPattern::parse("+-");
  doc.order = 2;
  const std::string text = to_json(doc);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 2);
  CHECK(j["entries"][1][0] == "2");
  CHECK(j["metadata"]["pattern"] == "+-");
  CHECK(j["metadata"]["order"] == 2);
  CHECK(parse_json(text) == doc);
  CHECK(parse_document(text) == doc);
  CHECK(parse_document("\n\n1,1\n2,1\n").matrix == doc.matrix);

  CHECK_THROWS_AS(parse_json(R"({"rows":1,"cols":2,"entries":[["1"]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json(R"({"rows":1,"cols":1,"entries":[[1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json(R"({"rows":1,"cols":1,"entries":[["2/2"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_json("{not json"), std::invalid_argument);
}

TEST_CASE("formats") {
  CHECK(parse_format("csv") == DocumentFormat::csv);
  CHECK(parse_format("json") == DocumentFormat::json);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("serialize round-trips exactly") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + trial % 4;
    const std::size_t n = 1 + (trial / 4) % 5;
    MatrixDocument doc;
    doc.matrix = oracle::random_rational_matrix(rng, m, n);
    doc.matrix(1, 1) = Scalar(mpz_class("-98765432109876543210"), mpz_class("12345678901"));
    doc.matrix(1, 1).canonicalize();
    CHECK(parse_document(serialize(doc, DocumentFormat::csv)) == doc);
    if (trial % 2 == 0) {
      doc.pattern = oracle::all_patterns(std::min(m, n))[trial % (1u << std::min(m, n))];
      doc.order = std::min(m, n);
    }
    CHECK(parse_document(serialize(doc, DocumentFormat::json)) == doc);
  }
}

TEST_CASE("trace survives the json form") {
  const auto built = ssr_construction(3, 4, SignPattern::parse("+-+"));
  MatrixDocument doc;
  doc.matrix = built.matrix;
  doc.trace = trace_to_json(built.trace);
  const auto& t = *doc.trace;
  CHECK(t["y_choices"].size() == built.trace.y_choices.size());
  CHECK(t["delta_choices"].size() == built.trace.delta_choices.size());
  CHECK(parse_json(to_json(doc)) == doc);
}
