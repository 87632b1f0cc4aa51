#include "mindchange/io.hpp"

#include <doctest.h>

#include <stdexcept>

#include "generators.hpp"

using namespace mindchange;

TEST_CASE("space files round trip") {
  auto s = FiniteSpace::sierpinski();
  auto text = io::space_to_json(s);
  CHECK(io::space_from_json(text) == s);
  CHECK(text.find("\"points\"") != std::string::npos);

  for (const auto& sp : enumerate_spaces(3)) {
    CHECK(io::space_from_json(io::space_to_json(sp)) == sp);
  }
  CHECK_THROWS_AS(io::space_from_json("{\"points\": [\"a\"]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::space_from_json("not json"), std::invalid_argument);
  // File-level validation still applies.
  CHECK_THROWS_AS(
      io::space_from_json(R"({"points": ["a","b"], "opens": [[],[0,1]]})"),
      std::invalid_argument);
}

TEST_CASE("map files round trip against their spaces") {
  auto s = FiniteSpace::sierpinski();
  auto two = FiniteSpace::discrete(2);
  auto f = make_point_map(s, two, {0, 1});
  auto text = io::map_to_json(f);
  auto g = io::map_from_json(text, s, two);
  CHECK(g.assignment == f.assignment);
  CHECK_THROWS_AS(io::map_from_json("{\"map\": [0]}", s, two),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::map_from_json("{\"map\": [0, 7]}", s, two),
                  std::invalid_argument);
}

TEST_CASE("run files round trip") {
  testgen::Rng rng(0x10);
  for (int i = 0; i < 200; ++i) {
    auto r = testgen::random_valid_run(rng);
    auto text = io::run_to_json(r);
    auto back = io::run_from_json(text);
    CHECK(back.bound == r.bound);
    CHECK(back.bound_inclusive == r.bound_inclusive);
    REQUIRE(back.steps.size() == r.steps.size());
    for (std::size_t k = 0; k < r.steps.size(); ++k) {
      CHECK(back.steps[k].tag == r.steps[k].tag);
      CHECK(back.steps[k].guess == r.steps[k].guess);
    }
  }
  PlainRun p{{Guess{{1, 2}}, Guess{{3}}}};
  auto back = io::plain_run_from_json(io::plain_run_to_json(p));
  CHECK(back.steps == p.steps);
  CHECK_THROWS_AS(io::run_from_json("{\"steps\": []}"), std::invalid_argument);
}

TEST_CASE("enumeration files round trip and report line numbers") {
  auto order = MonomialOrder::grevlex();
  IdealEnumeration e{2,
                     {Polynomial::parse("x1^2*x2 - 1/2", 2), Polynomial(2),
                      Polynomial::parse("x2", 2)}};
  auto text = io::enumeration_to_text(e, order);
  auto back = io::enumeration_from_text(text, 2);
  REQUIRE(back.items.size() == 3);
  CHECK(back.items[0] == e.items[0]);
  CHECK(back.items[1].is_zero());
  CHECK(back.items[2] == e.items[2]);

  try {
    io::enumeration_from_text("x1\nx1 + oops\n", 1);
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& err) {
    CHECK(std::string(err.what()).starts_with("line 2:"));
  }
}
