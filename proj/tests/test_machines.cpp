#include "mindchange/machines.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace mindchange;

namespace {

PointMap sierpinski_classifier() {
  return make_point_map(FiniteSpace::sierpinski(), FiniteSpace::discrete(2),
                        {0, 1});
}

std::vector<Guess> guesses(const TaggedRun& r) {
  std::vector<Guess> out;
  for (const auto& s : r.steps) out.push_back(s.guess);
  return out;
}

std::vector<PointMap> all_maps(const FiniteSpace& dom, const FiniteSpace& cod) {
  std::vector<PointMap> out;
  const int n = dom.point_count(), k = cod.point_count();
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(make_point_map(dom, cod, a));
    int i = 0;
    while (i < n && a[static_cast<std::size_t>(i)] == k - 1) {
      a[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
    ++a[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

TEST_CASE("piece construction enforces the invariants") {
  auto s = FiniteSpace::sierpinski();
  // {bot} refuted by {top}
  auto p = make_refutable_piece(s, 1, 2, {0, 1}, s.full_mask());
  CHECK(p.membership == 1);
  CHECK_THROWS_AS(make_refutable_piece(s, 1, 1, {0, 1}, s.full_mask()),
                  std::invalid_argument);  // refutation not open
  CHECK_THROWS_AS(make_refutable_piece(s, 3, 2, {0, 1}, s.full_mask()),
                  std::invalid_argument);  // piece meets its refutation
  // identity-style table is not locally constant on the whole space
  CHECK_THROWS_AS(make_refutable_piece(s, 3, 0, {0, 1}, s.full_mask()),
                  std::invalid_argument);
}

TEST_CASE("level pieces order deepest first") {
  auto f = sierpinski_classifier();
  auto pieces = level_pieces(f);
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].membership == 1);  // {bot}
  CHECK(pieces[0].refutation == 2);  // {top}
  CHECK(pieces[1].membership == 2);
  CHECK(pieces[1].refutation == 0);
}

TEST_CASE("glue machine on the classifier") {
  auto f = sierpinski_classifier();
  auto pieces = level_pieces(f);
  auto s = f.domain;

  auto top = glue_machine(pieces, canonical_names(s, 1, 2)[0]);
  CHECK(guesses(top.run) == std::vector<Guess>{Guess::point(0), Guess::point(1)});
  CHECK(mind_changes(top.run) == 1);
  CHECK(top.converged_to == Guess::point(1));
  CHECK(validate_run(top.run).valid);
  CHECK(top.run.steps[0].tag == Ordinal::natural(1));
  CHECK(top.run.steps[1].tag == Ordinal::natural(0));

  auto bot = glue_machine(pieces, canonical_names(s, 0, 2)[0]);
  CHECK(guesses(bot.run) == std::vector<Guess>{Guess::point(0)});
  CHECK(mind_changes(bot.run) == 0);

  // A continuous map has the one-piece cover and a constant run.
  auto c = make_point_map(s, FiniteSpace::discrete(2), {1, 1});
  auto cover = level_pieces(c);
  REQUIRE(cover.size() == 1);
  auto r = glue_machine(cover, canonical_names(s, 0, 2)[0]);
  CHECK(mind_changes(r.run) == 0);
}

TEST_CASE("glue machine error paths") {
  auto s = FiniteSpace::sierpinski();
  auto f = sierpinski_classifier();
  auto pieces = level_pieces(f);
  // Name proving {top} refutes the bottom piece; with only that piece left
  // every piece can be refuted.
  std::vector<RefutablePiece> only_bot{pieces[0]};
  CHECK_THROWS_WITH_AS(glue_machine(only_bot, canonical_names(s, 1, 2)[0]),
                       "cover violation", std::runtime_error);
  NamePrefix bad{s, {1, 0}};  // {top} then the empty set
  CHECK_THROWS_WITH_AS(glue_machine(pieces, bad), "inconsistent name",
                       std::runtime_error);
}

TEST_CASE("counter machine on the classifier") {
  auto f = sierpinski_classifier();
  auto d = canonical_decomposition(f);
  auto s = f.domain;

  auto bot = ordinal_counter_machine(d, f, canonical_names(s, 0, 2)[0]);
  REQUIRE(bot.run.steps.size() == 1);
  CHECK(bot.run.steps[0].tag == Ordinal::natural(1));
  CHECK(bot.converged_to == Guess::point(0));

  // Name of top listing the whole space before {top}.
  NamePrefix late{s, {2, 1}};
  auto top = ordinal_counter_machine(d, f, late);
  REQUIRE(top.run.steps.size() == 2);
  CHECK(top.run.steps[0].tag == Ordinal::natural(1));
  CHECK(top.run.steps[0].guess == Guess::point(0));
  CHECK(top.run.steps[1].tag == Ordinal::natural(0));
  CHECK(top.run.steps[1].guess == Guess::point(1));
  CHECK(validate_run(top.run).valid);

  auto id2 = make_point_map(FiniteSpace::discrete(2), FiniteSpace::discrete(2),
                            {0, 1});
  auto rd = ordinal_counter_machine(canonical_decomposition(id2), id2,
                                    canonical_names(id2.domain, 1, 3)[0]);
  REQUIRE(rd.run.steps.size() == 1);
  CHECK(rd.run.steps[0].tag == Ordinal::natural(0));
}

TEST_CASE("counter machine rejects bad inputs") {
  auto f = sierpinski_classifier();
  CHECK_THROWS_AS(
      ordinal_counter_machine(Decomposition{{3}}, f,
                              canonical_names(f.domain, 0, 2)[0]),
      std::invalid_argument);  // single-open decomposition is invalid for f
  auto d = canonical_decomposition(f);
  NamePrefix empty{f.domain, {}};
  CHECK_THROWS_WITH_AS(ordinal_counter_machine(d, f, empty),
                       "no piece activated", std::runtime_error);
}

TEST_CASE("identification through derived sets") {
  auto flat2 = FiniteSpace::flat(2);
  // opens sorted: 0,{0},{1},{0,1},X -> indices 0..4
  auto r0 = cb_identifier(flat2, canonical_names(flat2, 0, 3)[0]);
  CHECK(r0.converged_to == Guess::point(0));
  CHECK(mind_changes(r0.run) <= 1);

  auto rb = cb_identifier(flat2, canonical_names(flat2, 2, 3)[0]);
  REQUIRE(rb.run.steps.size() == 1);
  CHECK(rb.run.steps[0].tag == Ordinal::natural(1));
  CHECK(rb.converged_to == Guess::point(2));

  auto d2 = FiniteSpace::discrete(2);
  for (int x = 0; x < 2; ++x) {
    for (const auto& nm : canonical_names(d2, x, 3, 3, 11)) {
      auto r = cb_identifier(d2, nm);
      CHECK(mind_changes(r.run) == 0);
      CHECK(r.converged_to == Guess::point(x));
    }
  }
}

TEST_CASE("simulation sweep over small spaces") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& sp : enumerate_spaces(n)) {
      const int horizon = static_cast<int>(sp.opens().size());
      for (const auto& f : all_maps(sp, FiniteSpace::discrete(2))) {
        auto summary = simulate_all(sp, f, horizon, 2, 5);
        CHECK(summary.ok);
      }
      for (const auto& f : all_maps(sp, FiniteSpace::sierpinski())) {
        auto summary = simulate_all(sp, f, horizon, 2, 5);
        if (!summary.ok) {
          for (const auto& fail : summary.failures) MESSAGE(fail);
        }
        CHECK(summary.ok);
      }
    }
  }
}

TEST_CASE("continuous maps on discrete domains never change their mind") {
  auto d3 = FiniteSpace::discrete(3);
  auto f = make_point_map(d3, FiniteSpace::discrete(3), {2, 0, 1});
  auto summary = simulate_all(d3, f, 4, 3, 9);
  CHECK(summary.ok);
  for (const auto& st : summary.per_point) CHECK(st.max_changes == 0);
}

TEST_CASE("glue machine is sound across sampled names on discrete codomains") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& sp : enumerate_spaces(n)) {
      const int horizon = static_cast<int>(sp.opens().size());
      for (const auto& f : all_maps(sp, FiniteSpace::discrete(2))) {
        auto pieces = level_pieces(f);
        for (int x = 0; x < sp.point_count(); ++x) {
          for (const auto& nm : canonical_names(sp, x, horizon, 2, 3)) {
            auto report = glue_machine(pieces, nm);
            CHECK(validate_run(report.run).valid);
            CHECK(report.converged_to == Guess::point(f(x)));
          }
        }
      }
    }
  }
}
