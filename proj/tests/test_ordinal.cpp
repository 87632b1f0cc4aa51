#include "mindchange/ordinal.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "generators.hpp"

using mindchange::Ordinal;
using mindchange::validate_strictly_decreasing;

namespace {
Ordinal nat(std::uint64_t k) { return Ordinal::natural(k); }
}  // namespace

TEST_CASE("make accepts canonical normal forms") {
  // w*2+5
  auto o = Ordinal::make({{nat(1), 2}, {nat(0), 5}});
  CHECK(o.str() == "w*2+5");
  CHECK(Ordinal::make({}).is_zero());
}

TEST_CASE("make rejects malformed term lists") {
  CHECK_THROWS_WITH_AS(Ordinal::make({{nat(0), 3}, {nat(1), 1}}),
                       "exponents not decreasing at index 1",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Ordinal::make({{nat(2), 1}, {nat(2), 1}}),
                       "exponents not decreasing at index 1",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Ordinal::make({{nat(1), 0}}),
                       "zero coefficient at index 0", std::invalid_argument);
}

TEST_CASE("comparison examples") {
  CHECK(Ordinal::omega() > nat(3));
  // w^2*2+w > w^2*2+5
  auto a = Ordinal::make({{nat(2), 2}, {nat(1), 1}});
  auto b = Ordinal::make({{nat(2), 2}, {nat(0), 5}});
  CHECK(a > b);
  CHECK(a == a);
  // prefix extension is strictly larger
  auto c = Ordinal::make({{nat(2), 2}});
  CHECK(a > c);
  CHECK(c < a);
}

TEST_CASE("omega_pow builds single-term bounds") {
  CHECK(Ordinal::omega_pow(nat(0), 7) == nat(7));
  CHECK(Ordinal::omega_pow(nat(1), 1) == Ordinal::omega());
  CHECK(Ordinal::omega_pow(nat(2), 3).str() == "w^2*3");
  CHECK_THROWS_AS(Ordinal::omega_pow(nat(1), 0), std::invalid_argument);
}

TEST_CASE("validate_strictly_decreasing") {
  CHECK(!validate_strictly_decreasing({Ordinal::omega(), nat(5), nat(2)}));
  auto v = validate_strictly_decreasing({nat(5), Ordinal::omega()});
  REQUIRE(v.has_value());
  CHECK(*v == 1);
  CHECK(!validate_strictly_decreasing({}));
  CHECK(!validate_strictly_decreasing({nat(7)}));
  auto eq = validate_strictly_decreasing({nat(3), nat(3)});
  REQUIRE(eq.has_value());
  CHECK(*eq == 1);
}

TEST_CASE("text grammar round trips and sugar forms") {
  CHECK(Ordinal::parse("0").is_zero());
  CHECK(Ordinal::parse("w") == Ordinal::omega());
  CHECK(Ordinal::parse("w^1*1") == Ordinal::omega());
  CHECK(Ordinal::parse("w*3") == Ordinal::make({{nat(1), 3}}));
  CHECK(Ordinal::parse("w^2") == Ordinal::make({{nat(2), 1}}));
  CHECK(Ordinal::parse("w^2*3+w*1+5").str() == "w^2*3+w*1+5");
  CHECK(Ordinal::parse("w^w*2") ==
        Ordinal::make({{Ordinal::omega(), 2}}));
  CHECK(Ordinal::parse("w^(w*2+1)*2").str() == "w^(w*2+1)*2");
  CHECK_THROWS_AS(Ordinal::parse("5+3"), std::invalid_argument);
  CHECK_THROWS_AS(Ordinal::parse("w+w"), std::invalid_argument);
  CHECK_THROWS_AS(Ordinal::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Ordinal::parse("w^"), std::invalid_argument);
  CHECK_THROWS_AS(Ordinal::parse("w*0"), std::invalid_argument);
  CHECK_THROWS_AS(Ordinal::parse("w+0"), std::invalid_argument);
}

TEST_CASE("total order laws on seeded values") {
  testgen::Rng rng(0xa11ce);
  for (int i = 0; i < 2000; ++i) {
    auto a = testgen::random_ordinal(rng, 4, 6);
    auto b = testgen::random_ordinal(rng, 4, 6);
    auto c = testgen::random_ordinal(rng, 4, 6);
    // trichotomy
    int rel = (a < b) + (a == b) + (a > b);
    CHECK(rel == 1);
    // antisymmetry
    if (a <= b && b <= a) CHECK(a == b);
    // transitivity
    if (a <= b && b <= c) CHECK(a <= c);
  }
}

TEST_CASE("parse(format(x)) == x on seeded values") {
  testgen::Rng rng(0xf00d);
  for (int i = 0; i < 2000; ++i) {
    auto a = testgen::random_ordinal(rng, 4, 9);
    CHECK(Ordinal::parse(a.str()) == a);
  }
}

TEST_CASE("encode/decode round trip") {
  testgen::Rng rng(0xbeef);
  for (int i = 0; i < 500; ++i) {
    auto a = testgen::random_ordinal(rng, 4, 9);
    std::vector<std::uint64_t> buf;
    a.encode(buf);
    std::size_t pos = 0;
    CHECK(Ordinal::decode(buf, pos) == a);
    CHECK(pos == buf.size());
  }
}

TEST_CASE("random strict descents terminate within the counting bound") {
  // Below w^k with coefficients <= C there are only (C+1)^k distinct
  // ordinals, so any strict descent has at most that many steps.
  testgen::Rng rng(0x5eed);
  const std::uint64_t k = 3, C = 3;
  std::uint64_t bound = 1;
  for (std::uint64_t i = 0; i < k; ++i) bound *= (C + 1);
  for (int walk = 0; walk < 200; ++walk) {
    std::vector<Ordinal> descent{testgen::random_ordinal(rng, k, C)};
    while (!descent.back().is_zero()) {
      descent.push_back(testgen::random_smaller(rng, descent.back(), C));
      REQUIRE(descent.size() <= bound + 1);
    }
    CHECK(!validate_strictly_decreasing(descent));
  }
}
