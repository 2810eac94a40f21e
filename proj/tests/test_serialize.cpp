#include <cmath>

#include "doctest.h"

#include "braidmono/serialize.hpp"

using namespace braidmono;

TEST_CASE("complex parsing") {
  CHECK(parse_complex("2") == Complex(2.0));
  CHECK(parse_complex("-0.5") == Complex(-0.5));
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("2i") == Complex(0.0, 2.0));
  CHECK(parse_complex("1+2i") == Complex(1.0, 2.0));
  CHECK(parse_complex("1-2i") == Complex(1.0, -2.0));
  CHECK(parse_complex("-1.5-0.25i") == Complex(-1.5, -0.25));
  CHECK(parse_complex("1e-3+2.5e-2i") == Complex(1e-3, 2.5e-2));
  CHECK(parse_complex("3.5e+2i") == Complex(0.0, 350.0));
  CHECK(parse_complex(" 1 + 2i ") == Complex(1.0, 2.0));
}

TEST_CASE("complex parsing failures") {
  CHECK_THROWS_AS(parse_complex(""), InputParseError);
  CHECK_THROWS_AS(parse_complex("1+"), InputParseError);
  CHECK_THROWS_AS(parse_complex("1+2"), InputParseError);
  CHECK_THROWS_AS(parse_complex("2j"), InputParseError);
  CHECK_THROWS_AS(parse_complex("1++2i"), InputParseError);
  CHECK_THROWS_AS(parse_complex("abc"), InputParseError);
}

TEST_CASE("format and parse round trip") {
  for (Complex z : {Complex(0.0), Complex(1.5), Complex(0.0, -2.0),
                    Complex(-3.25, 0.125), Complex(2.0, 1.0)}) {
    CHECK(parse_complex(format_complex(z)) == z);
  }
}

TEST_CASE("polynomial parsing") {
  const Polynomial p = parse_poly("0 -3 0 1");
  CHECK(p.degree() == 3);
  CHECK(p.coeffs()[1] == Complex(-3.0));
  // non-monic input is scaled
  CHECK(parse_poly("0 -6 0 2") == p);
  // complex coefficients
  CHECK(parse_poly("1+i 0 1").coeffs()[0] == Complex(1.0, 1.0));
  CHECK_THROWS_AS(parse_poly(""), InputParseError);
  CHECK_THROWS_AS(parse_poly("1 2"), InputParseError);
  CHECK_THROWS_AS(parse_poly("0 0 x"), InputParseError);
  // trimming can drop the degree below 2
  CHECK_THROWS_AS(parse_poly("1 2 0 0"), InputParseError);
}

TEST_CASE("json document round trip") {
  const Polynomial p = parse_poly("0 -3 0 1");
  const MonodromyResult result = braid_monodromy(p, 0);
  const std::string text = to_json_text(result);

  const ResultJson document = parse_result_json(text);
  CHECK(to_json_text(document) == text);
  CHECK(document == parse_result_json(to_json_text(document)));

  REQUIRE(document.entries.size() == 2);
  CHECK(document.entries[0].word == std::vector<int>{2});
  CHECK(document.entries[1].word == std::vector<int>{1});
  CHECK(document.infinity_word == std::vector<int>{2, 1});
  CHECK(document.group_order == 6);
  CHECK(document.group_full);
  CHECK(document.branch_points.size() == 2);
  CHECK(document.fiber.size() == 3);
  // permutations are stored one-based
  CHECK(document.entries[0].perm == std::vector<int>{1, 3, 2});
}

TEST_CASE("json parsing failures") {
  CHECK_THROWS_AS(parse_result_json("not json"), InputParseError);
  CHECK_THROWS_AS(parse_result_json("{}"), InputParseError);
  CHECK_THROWS_AS(parse_result_json("{\"branch_points\": 3}"),
                  InputParseError);
}

TEST_CASE("text report contains the headline facts") {
  const Polynomial p = parse_poly("0 -3 0 1");
  const FullMonodromyReport report = verify_full_monodromy(p, 0);
  const std::string text = to_text(report);
  CHECK(text.find("verdict: consistent") != std::string::npos);
  CHECK(text.find("composite identity: true") != std::string::npos);
  CHECK(text.find("fan conjugator: [-1 -2]") != std::string::npos);
  CHECK(text.find("infinity word: [2 1]") != std::string::npos);

  const std::string group = group_text(report.result.group_report);
  CHECK(group == "order=6 full=true cyclic=false transitive=true");
}

TEST_CASE("offset is added back in reports") {
  const Polynomial p = parse_poly("5 -3 0 1");  // z^3 - 3z + 5
  const MonodromyResult result = braid_monodromy(p, 0);
  const ResultJson document = parse_result_json(to_json_text(result));
  for (Complex b : document.branch_points) {
    const double to_either = std::min(std::abs(b - Complex(3.0)),
                                      std::abs(b - Complex(7.0)));
    CHECK(to_either < 1e-9);
  }
}
