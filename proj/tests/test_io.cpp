#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liealg/algebra_io.hpp"
#include "liealg/builtins.hpp"
#include "liealg/report.hpp"
#include "liealg/suites.hpp"

#include <sstream>

using namespace liealg;

TEST_CASE("every builtin round-trips through the file format") {
  for (const std::string name : {"sl2", "sl3", "sp4", "heisenberg:2", "takiff:sl2",
                                 "reductive-sl2", "oscillator:1", "sl21"}) {
    const auto g = make_builtin(name);
    const AlgebraFile file{name, g, {}};
    std::stringstream buffer(algebra_file_text(file));
    const auto reloaded = load_algebra_file(buffer);
    CHECK(reloaded.algebra == g); // constants, labels, parity all equal
    CHECK(reloaded.name == name);
  }
}

TEST_CASE("representation blocks round-trip") {
  const auto g = make_builtin("sl2");
  const AlgebraFile file{"sl2", g, {{"adjoint", make_named_rep(g, "adjoint")},
                                    {"fund", make_named_rep(g, "irrep:1")}}};
  std::stringstream buffer(algebra_file_text(file));
  const auto reloaded = load_algebra_file(buffer);
  REQUIRE(reloaded.representations.size() == 2);
  CHECK(reloaded.representations[0].first == "adjoint");
  CHECK(reloaded.representations[0].second.matrices() ==
        make_named_rep(g, "adjoint").matrices());
  CHECK(reloaded.representations[1].second.dim_v() == 2);
  CHECK(validate(reloaded.representations[1].second).ok());
}

TEST_CASE("parser reports line numbers") {
  const auto expect_error_on_line = [](const std::string& text, int line) {
    std::stringstream in(text);
    try {
      load_algebra_file(in);
      FAIL("expected a parse error");
    } catch (const ParseError& err) {
      CHECK(err.line == line);
    }
  };
  expect_error_on_line("algebra g dim 2\nb 0 1 5 1\n", 2);        // index range
  expect_error_on_line("algebra g dim 2\nb 0 1 1 1/0\n", 2);      // zero denominator
  expect_error_on_line("algebra g dim 2\nbogus 1\n", 2);          // unknown directive
  expect_error_on_line("b 0 1 1 1\n", 1);                         // missing header
  expect_error_on_line("algebra g dim 2 graded 0\n", 1);          // short bit list
  expect_error_on_line("algebra g dim 1\nm 0 0 0 1\n", 2);        // m outside rep
}

TEST_CASE("comments, blank lines, and bare integers parse") {
  std::stringstream in(
      "# heisenberg(1)\n"
      "algebra h1 dim 3\n"
      "\n"
      "b 0 1 2 1\n"
      "b 1 0 2 -1   # antisymmetric partner\n");
  const auto parsed = load_algebra_file(in);
  CHECK(parsed.algebra.dim() == 3);
  CHECK(parsed.algebra.constant(0, 1, 2) == Rational(1));
  CHECK(validate(parsed.algebra).ok());
}

TEST_CASE("graded headers carry parity") {
  std::stringstream in("algebra g dim 2 graded 0 1\n");
  const auto parsed = load_algebra_file(in);
  REQUIRE(parsed.algebra.graded());
  CHECK(parsed.algebra.parity_of(0) == Parity::even);
  CHECK(parsed.algebra.parity_of(1) == Parity::odd);
}

TEST_CASE("report JSON schema is stable") {
  ReportDocument doc;
  doc.instance = "example";
  doc.checks.push_back({"check", "claim", "0", "0", true});
  const auto json = doc.to_json();
  REQUIRE(json.contains("instance"));
  REQUIRE(json.contains("checks"));
  REQUIRE(json.contains("pass"));
  CHECK(json["pass"].get<bool>());
  REQUIRE(json["checks"].is_array());
  const auto& record = json["checks"][0];
  for (const char* key : {"name", "claim", "expected", "computed", "pass"}) {
    CHECK(record.contains(key));
  }

  doc.checks.push_back({"failing", "claim", "0", "1", false});
  CHECK_FALSE(doc.pass());
  CHECK_FALSE(doc.to_json()["pass"].get<bool>());
}

TEST_CASE("builtin registry") {
  CHECK(is_builtin("sl2"));
  CHECK(is_builtin("oscillator:3"));
  CHECK_FALSE(is_builtin("oscillator:0"));
  CHECK_FALSE(is_builtin("so5"));
  CHECK_THROWS_AS(make_builtin("so5"), std::invalid_argument);
  CHECK(make_builtin("heisenberg:2").dim() == 5);
  CHECK_THROWS_AS(make_named_rep(make_builtin("sl3"), "irrep:2"), std::invalid_argument);
  CHECK(make_named_rep(make_builtin("sl2"), "irrep:2").dim_v() == 3);
  CHECK(make_named_rep(make_builtin("sl3"), "trivial:2").dim_v() == 2);
}

TEST_CASE("unknown suite names are rejected") {
  CHECK_THROWS_AS(run_suite("everything"), std::invalid_argument);
}
