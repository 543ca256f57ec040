// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "verimap/errors.hpp"
#include "verimap/formula.hpp"
#include "verimap/model_io.hpp"

using namespace verimap;
using namespace verimap::testing;

namespace {

const char* kCanonicalExample =
    "var x1 in 1..4\n"
    "var x2 in 1..4\n"
    "dist x1 = [0.9, 0.1, 0, 0]\n"
    "dist x2 = [0.24966675033324964, 0.24966675033324964, "
    "0.24966675033324964, 0.25099974900025096]\n"
    "constraint x1 + x2 = 5\n";

template <typename E>
std::string message_of(const char* text) {
  try {
    load_model(text);
  } catch (const E& e) {
    return e.what();
  }
  FAIL("expected an exception for: ", text);
  return {};
}

}  // namespace

TEST_CASE("load_model parses the bundled example") {
  Model m = load_model(kExampleText);
  Model want = example_clean();
  REQUIRE(m.size() == 2);
  CHECK(m.variable(0).name == "x1");
  CHECK(m.variable(1).name == "x2");
  CHECK(m.variable(0).domain == DomainSpec::range(1, 4));
  CHECK(m.dist(0) == want.dist(0));
  CHECK(m.dist(1) == want.dist(1));
  CHECK(to_string(m.constraint()) == "x1 + x2 = 5");
}

TEST_CASE("load_model skips comments, blank lines and extra spacing") {
  Model m = load_model(
      "# header comment\n"
      "\n"
      "   \t \n"
      "  var   x   in   0..1\n"
      "   # indented comment\n"
      "\tdist x = [ 0.25 ,0.75 ]\n"
      "constraint   x = 1\n");
  REQUIRE(m.size() == 1);
  CHECK(m.dist(0).probs == std::vector<double>{0.25, 0.75});
  CHECK(to_string(m.constraint()) == "x = 1");
}

TEST_CASE("dist_from_file_probs acceptance bands") {
  // Exact sums pass through verbatim.
  CHECK(dist_from_file_probs({0.5, 0.5}).probs == std::vector<double>{0.5, 0.5});
  // Sub-tolerance deviation is kept verbatim, not renormalized.
  std::vector<double> tiny{0.25, 0.25, 0.25, 0.25 + 5e-10};
  CHECK(dist_from_file_probs(tiny).probs == tiny);
  // Decimal-rounding deviation is renormalized to sum 1.
  CategoricalDist renorm = dist_from_file_probs({0.249667, 0.249667, 0.249667, 0.251});
  double total = 0.0;
  for (double p : renorm.probs) total += p;
  CHECK(std::abs(total - 1.0) <= 1e-12);
  CHECK(renorm.probs[3] == doctest::Approx(0.251).epsilon(1e-5));
  // Beyond the file tolerance is an error.
  CHECK_THROWS_AS(dist_from_file_probs({0.3, 0.3, 0.3}), DistSumError);
  CHECK_THROWS_AS(dist_from_file_probs({0.5, 0.50011}), DistSumError);
  // Entries must be finite and non-negative.
  CHECK_THROWS_AS(dist_from_file_probs({-0.1, 1.1}), DomainError);
  CHECK_THROWS_AS(dist_from_file_probs({std::numeric_limits<double>::quiet_NaN(), 1.0}),
                  DomainError);
}

TEST_CASE("load_model enforces statement order") {
  CHECK(message_of<FileSyntaxError>(
            "var x in 0..1\ndist x = [1, 0]\nvar y in 0..1\nconstraint true")
            .find("must precede") != std::string::npos);
  CHECK(message_of<FileSyntaxError>(
            "var x in 0..1\ndist x = [1, 0]\nconstraint true\ndist x = [1, 0]")
            .find("must precede") != std::string::npos);
  CHECK(message_of<FileSyntaxError>("dist x = [1]\nconstraint true")
            .find("before any var") != std::string::npos);
  CHECK(message_of<FileSyntaxError>("constraint true")
            .find("before any var") != std::string::npos);
}

TEST_CASE("load_model reports missing statements") {
  CHECK(message_of<FileSyntaxError>("") == "missing constraint statement");
  CHECK(message_of<FileSyntaxError>("var x in 0..1\ndist x = [1, 0]") ==
        "missing constraint statement");
  CHECK(message_of<FileSyntaxError>("var x in 0..1\nconstraint x = 0") ==
        "missing dist for 'x'");
}

TEST_CASE("load_model reports duplicates") {
  CHECK(message_of<DuplicateNameError>(
            "var x in 0..1\nvar x in 0..3\nconstraint true")
            .find("line 2: duplicate variable 'x'") != std::string::npos);
  CHECK(message_of<FileSyntaxError>("var x in 0..1\ndist x = [1, 0]\n"
                                    "dist x = [0, 1]\nconstraint true")
            .find("duplicate dist for 'x'") != std::string::npos);
  CHECK(message_of<FileSyntaxError>(
            "var x in 0..1\ndist x = [1, 0]\nconstraint true\nconstraint true")
            .find("duplicate constraint") != std::string::npos);
}

TEST_CASE("load_model line-stamps statement errors") {
  std::string arity = message_of<ArityError>(
      "var x in 0..1\ndist x = [0.2, 0.3, 0.5]\nconstraint true");
  CHECK(arity.find("line 2:") != std::string::npos);
  CHECK(arity.find("3 entries, domain has 2") != std::string::npos);

  std::string unknown = message_of<UnknownVariableError>(
      "var x in 0..1\ndist y = [1, 0]\nconstraint true");
  CHECK(unknown.find("line 2:") != std::string::npos);
  CHECK(unknown.find("undeclared variable 'y'") != std::string::npos);

  std::string range =
      message_of<DomainError>("var x in 2..1\ndist x = [1]\nconstraint true");
  CHECK(range.find("line 1: empty range 2..1") != std::string::npos);

  std::string sum = message_of<DistSumError>(
      "var x in 0..1\ndist x = [0.7, 0.7]\nconstraint true");
  CHECK(sum.find("line 2:") != std::string::npos);

  std::string neg = message_of<DomainError>(
      "var x in 0..1\ndist x = [-0.5, 1.5]\nconstraint true");
  CHECK(neg.find("line 2:") != std::string::npos);

  std::string in_constraint = message_of<UnknownVariableError>(
      "var x in 0..1\ndist x = [1, 0]\nconstraint y = 1");
  CHECK(in_constraint.find("line 3:") != std::string::npos);
}

TEST_CASE("load_model rewrites constraint syntax errors to file offsets") {
  try {
    load_model("var x in 0..1\ndist x = [1, 0]\nconstraint x +");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    ParseDiagnostic d = e.diagnostic();
    CHECK(d.message.find("line 3:") != std::string::npos);
    CHECK(d.offset == 14);
    CHECK(std::string(e.what()).find("offset 14") != std::string::npos);
  }
}

TEST_CASE("load_model malformed statement diagnostics") {
  CHECK(message_of<FileSyntaxError>("flurb x\nconstraint true")
            .find("unknown statement 'flurb'") != std::string::npos);
  CHECK(message_of<FileSyntaxError>("var x on 0..1\nconstraint true")
            .find("expected 'in'") != std::string::npos);
  CHECK(message_of<FileSyntaxError>("var x in a..b\nconstraint true")
            .find("expected an integer") != std::string::npos);
  CHECK(message_of<FileSyntaxError>("var x in 0..1 junk\nconstraint true")
            .find("trailing input after var statement") != std::string::npos);
  CHECK(message_of<FileSyntaxError>(
            "var x in 0..1\ndist x = 1, 0\nconstraint true")
            .find("expected '['") != std::string::npos);
  CHECK(message_of<FileSyntaxError>(
            "var x in 0..1\ndist x = [1, 0] junk\nconstraint true")
            .find("trailing input after dist statement") != std::string::npos);
  CHECK(message_of<FileSyntaxError>(
            "var x in 0..1\ndist x = [1; 0]\nconstraint true")
            .find("expected ']'") != std::string::npos);
  CHECK(message_of<FileSyntaxError>("var\nconstraint true")
            .find("expected an identifier") != std::string::npos);
  // Messages carry a line and column position.
  CHECK(message_of<FileSyntaxError>("var x on 0..1\nconstraint true")
            .find("line 1, col") != std::string::npos);
}

TEST_CASE("canonical serialization of the example is stable") {
  Model m = load_model(kExampleText);
  CHECK(canonical_serialization(m) == kCanonicalExample);
  Model again = load_model(canonical_serialization(m));
  CHECK(canonical_serialization(again) == kCanonicalExample);
}

TEST_CASE("canonical round-trip preserves every field") {
  Rng rng(61);
  for (int i = 0; i < 60; ++i) {
    Model m = random_model(rng);
    std::string canon = canonical_serialization(m);
    Model back = load_model(canon);
    REQUIRE(back.size() == m.size());
    for (std::size_t v = 0; v < m.size(); ++v) {
      CHECK(back.variable(v) == m.variable(v));
      CHECK(back.dist(v) == m.dist(v));
    }
    CHECK(structurally_equal(back.constraint(), m.constraint()));
    CHECK(canonical_serialization(back) == canon);
  }
}

TEST_CASE("canonical serialization needs contiguous domains") {
  Model sparse = build_model({{"x", DomainSpec{{1, 3, 9}}, {}}},
                             {CategoricalDist{{0.2, 0.3, 0.5}}},
                             parse("x = 3"));
  CHECK_THROWS_AS(canonical_serialization(sparse), DomainError);
  CHECK_THROWS_AS(model_digest(sparse), DomainError);
}

TEST_CASE("model digest format and sensitivity") {
  Model m = load_model(kExampleText);
  std::string digest = model_digest(m);
  CHECK(digest == "fnv1a64:9430ae126121c4a5");
  REQUIRE(digest.size() == 8 + 16);
  CHECK(digest.substr(0, 8) == "fnv1a64:");
  for (char c : digest.substr(8)) {
    bool hex = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    CHECK(hex);
  }
  CHECK(model_digest(example_clean()) == digest);
  CHECK(model_digest(example_attacked()) != digest);

  Model other = build_model({m.variable(0), m.variable(1)},
                            {m.dist(0), m.dist(1)}, parse("x1 + x2 = 4"));
  CHECK(model_digest(other) != digest);
}

TEST_CASE("parse_prob_list accepts CLI-style lists") {
  CHECK(parse_prob_list("0.1, 0.9") == std::vector<double>{0.1, 0.9});
  CHECK(parse_prob_list("1") == std::vector<double>{1.0});
  CHECK(parse_prob_list(" 0.25 ,0.25,  0.5 ") ==
        std::vector<double>{0.25, 0.25, 0.5});
  CHECK(parse_prob_list("2.5e-1, 7.5e-1") == std::vector<double>{0.25, 0.75});
  CHECK_THROWS_AS(parse_prob_list("0.5, 0.5 x"), FileSyntaxError);
  CHECK_THROWS_AS(parse_prob_list("abc"), FileSyntaxError);
  CHECK_THROWS_AS(parse_prob_list(""), FileSyntaxError);
  CHECK_THROWS_AS(parse_prob_list("0.5,,0.5"), FileSyntaxError);
}
