// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned here; randomized parts print their seeds.

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "mindchange/groebner.hpp"
#include "mindchange/hierarchy.hpp"
#include "mindchange/machines.hpp"
#include "mindchange/runs.hpp"
#include "mindchange/space.hpp"
#include "mindchange/sweep.hpp"

#include "generators.hpp"

using namespace mindchange;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL")
            << " - " << detail << "\n";
  if (!pass) ++failures;
}

// Independent derivative-iteration oracle built on the closure operator.
int cb_rank_oracle(const FiniteSpace& s) {
  Mask cur = s.full_mask();
  int rank = 0;
  while (true) {
    Mask next = 0;
    for (int x = 0; x < s.point_count(); ++x) {
      if (!((cur >> x) & 1u)) continue;
      if ((s.closure(cur & ~(Mask{1} << x)) >> x) & 1u) next |= Mask{1} << x;
    }
    if (next == cur) return rank;
    cur = next;
    ++rank;
  }
}

std::vector<FiniteSpace> corpus4() {
  std::vector<FiniteSpace> out;
  for (int n = 1; n <= 4; ++n) {
    for (auto& sp : enumerate_spaces(n)) out.push_back(std::move(sp));
  }
  return out;
}

// Criteria 1-4 ride on one corpus sweep.
void criteria_1_to_4(int jobs) {
  SweepOptions options;
  options.max_points = 4;
  options.max_alpha = 4;
  options.jobs = jobs;
  options.samples = 2;
  options.seed = 20260809;
  const SweepResult r = run_sweep(options);

  report(1, r.level_failures == 0 && r.seconds <= 60.0,
         "level equals exhaustive piecewise minimum on " +
             std::to_string(r.level_checks) + " maps over " +
             std::to_string(r.spaces) + " spaces, " +
             std::to_string(r.level_failures) + " counterexamples, " +
             std::to_string(r.seconds) + " s at " + std::to_string(jobs) +
             " jobs (limit 60 s)");
  report(2, r.preimage_failures == 0,
         "two-sided preimage membership matches the level threshold in " +
             std::to_string(r.preimage_checks) + " checks, " +
             std::to_string(r.preimage_failures) + " counterexamples");
  report(3, r.machine_failures == 0,
         "counter machine valid/convergent/tag-bounded on " +
             std::to_string(r.simulated_runs) + " simulated runs, " +
             std::to_string(r.machine_failures) + " failures");
  report(4, r.bound_failures == 0,
         "every level stays within the point count (" +
             std::to_string(r.level_checks) + " maps, " +
             std::to_string(r.bound_failures) + " violations)");
}

void criterion_5() {
  const std::uint64_t seed = 501;
  testgen::Rng rng(seed);
  const auto order = MonomialOrder::grevlex();
  int oracle_matches = 0;
  bool tags_ok = true;
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    IdealEnumeration e;
    e.nvars = 1;
    const int items = static_cast<int>(testgen::pick(rng, 1, 12));
    for (int i = 0; i < items; ++i)
      e.items.push_back(testgen::random_polynomial(rng, 1, 8, 4));
    const auto [run, basis] = run_learner(e, order);
    if (basis == buchberger(e.items, order)) ++oracle_matches;
    for (std::size_t k = 1; k < run.steps.size(); ++k) {
      const std::vector<Polynomial> prefix(
          e.items.begin(), e.items.begin() + static_cast<std::ptrdiff_t>(k));
      const int d = testgen::gcd_degree_oracle(prefix);
      const Ordinal expect =
          d < 0 ? Ordinal::omega() : Ordinal::natural(static_cast<std::uint64_t>(d));
      if (!(run.steps[k].tag == expect)) tags_ok = false;
    }
  }
  report(5, oracle_matches == trials && tags_ok,
         "univariate learner: " + std::to_string(oracle_matches) + "/" +
             std::to_string(trials) +
             " oracle matches, emission tags equal the gcd degree exactly (seed " +
             std::to_string(seed) + ")");
}

std::vector<Ordinal> random_realizable_targets(testgen::Rng& rng) {
  std::vector<Ordinal> targets;
  bool column = false;
  std::uint64_t l = testgen::pick(rng, 1, 5), m = 0;
  auto push = [&](std::uint64_t pl, std::uint64_t pm) {
    std::vector<Ordinal::Term> terms;
    if (pl) terms.emplace_back(Ordinal::natural(1), pl);
    if (pm) terms.emplace_back(Ordinal::natural(0), pm);
    targets.push_back(Ordinal::make(std::move(terms)));
  };
  push(l, 0);
  const int steps = static_cast<int>(testgen::pick(rng, 1, 6));
  for (int i = 0; i < steps; ++i) {
    if (!column) {
      if (l == 0) break;
      if (testgen::pick(rng, 0, 1) == 0) {
        l = testgen::pick(rng, 0, l - 1);
        push(l, 0);
      } else {
        l = l - 1;
        m = testgen::pick(rng, 1, 4);
        push(l, m);
        column = true;
      }
    } else {
      if (m > 1 && testgen::pick(rng, 0, 1) == 0) {
        m = testgen::pick(rng, 1, m - 1);
        push(l, m);
      } else {
        l = testgen::pick(rng, 0, l);
        push(l, 0);
        column = false;
      }
    }
  }
  return targets;
}

void criterion_6() {
  const std::uint64_t seed = 601;
  testgen::Rng rng(seed);
  const auto order = MonomialOrder::grevlex();
  const Ordinal w2 = Ordinal::parse("w^2");
  int oracle_matches = 0;
  bool tags_ok = true;
  const int trials = 100;
  for (int trial = 0; trial < trials; ++trial) {
    IdealEnumeration e;
    e.nvars = 2;
    const int items = static_cast<int>(testgen::pick(rng, 1, 10));
    for (int i = 0; i < items; ++i)
      e.items.push_back(testgen::random_polynomial(rng, 2, 6, 4));
    const auto [run, basis] = run_learner(e, order);
    if (basis == buchberger(e.items, order)) ++oracle_matches;
    const auto tags = change_point_tags(run);
    if (validate_strictly_decreasing(tags)) tags_ok = false;
    for (const auto& t : tags) {
      if (!(t < w2)) tags_ok = false;
    }
  }
  int round_trips = 0;
  const int adversary_trials = 20;
  for (int trial = 0; trial < adversary_trials; ++trial) {
    const auto targets = random_realizable_targets(rng);
    const auto e = adversary(targets, 2);
    const auto [run, basis] = run_learner(e, order);
    if (change_point_tags(run) == targets) ++round_trips;
  }
  report(6,
         oracle_matches == trials && tags_ok && round_trips == adversary_trials,
         "bivariate learner: " + std::to_string(oracle_matches) + "/" +
             std::to_string(trials) +
             " oracle matches, change tags strictly descend below w^2, " +
             std::to_string(round_trips) + "/" +
             std::to_string(adversary_trials) +
             " adversary round trips (seed " + std::to_string(seed) + ")");
}

void criterion_7() {
  const std::uint64_t seed = 701;
  std::uint64_t runs = 0;
  std::uint64_t bad = 0;
  bool ranks_ok = true;
  for (const auto& sp : corpus4()) {
    const CBChain chain = cb_chain(sp);
    if (chain.rank != cb_rank_oracle(sp)) ranks_ok = false;
    const int horizon = static_cast<int>(sp.opens().size());
    for (int x = 0; x < sp.point_count(); ++x) {
      for (const auto& name :
           canonical_names(sp, x, horizon, 2, seed + static_cast<std::uint64_t>(x))) {
        const MachineReport report_ = cb_identifier(sp, name);
        ++runs;
        if (!validate_run(report_.run).valid ||
            !(report_.converged_to == Guess::point(x)) ||
            mind_changes(report_.run) > chain.rank)
          ++bad;
      }
    }
  }
  report(7, bad == 0 && ranks_ok,
         "point identifier: " + std::to_string(runs) +
             " runs within the rank bound with correct limits, ranks match "
             "the derivative oracle (seed " + std::to_string(seed) + ")");
}

void criterion_8() {
  const std::uint64_t seed = 801;
  testgen::Rng rng(seed);
  bool ok = true;
  std::string detail;

  for (int i = 0; i < 10000; ++i) {
    const auto r = testgen::random_valid_run(rng);
    const auto comp = testgen::pick(rng, 0, 9);
    const auto [c, back] = join_decode(join_encode(comp, r));
    bool same = c == comp && back.steps.size() == r.steps.size();
    for (std::size_t k = 0; same && k < r.steps.size(); ++k) {
      same = back.steps[k].guess == r.steps[k].guess &&
             back.steps[k].tag == r.steps[k].tag;
    }
    if (!same) {
      ok = false;
      detail = "join round trip failed";
      break;
    }
  }

  int rejected = 0;
  for (int i = 0; i < 1000 && ok; ++i) {
    const auto r = testgen::random_valid_run(rng);
    if (!(meet_limit(meet_encode({r, r, r})) == validate_run(r).limit)) {
      ok = false;
      detail = "meet limit law failed";
    }
    auto other = testgen::random_valid_run(rng);
    while (validate_run(other).limit == validate_run(r).limit)
      other = testgen::random_valid_run(rng);
    try {
      meet_encode({r, other});
    } catch (const std::invalid_argument& e) {
      if (std::string_view(e.what()).starts_with("limits disagree")) ++rejected;
    }
  }
  if (ok && rejected != 1000) {
    ok = false;
    detail = "meet accepted disagreeing limits";
  }

  for (int i = 0; i < 1000 && ok; ++i) {
    const int phases = static_cast<int>(testgen::pick(rng, 1, 3));
    PlainRun outer;
    std::vector<TaggedRun> inners;
    for (int p = 0; p < phases; ++p) {
      auto inner = testgen::random_valid_run(rng);
      inners.push_back(inner);
      const Guess g{serialize_run(inner)};
      for (std::uint64_t k = 0, n = testgen::pick(rng, 1, 3); k < n; ++k)
        outer.steps.push_back(g);
    }
    const auto flat = flatten(outer);
    int max_inner = 0;
    for (const auto& in : inners)
      max_inner = std::max(max_inner, mind_changes(in));
    const bool limit_ok =
        flat.steps.back() == validate_run(inners.back()).limit;
    const bool count_ok = mind_changes(flat) <=
                          (mind_changes(outer) + 1) * (max_inner + 1) - 1;
    if (!limit_ok || !count_ok) {
      ok = false;
      detail = "flatten violated its limit or change bound";
    }
  }

  for (int i = 0; i < 1000 && ok; ++i) {
    const auto r = testgen::random_valid_run(rng);
    const auto e = embed(r, Ordinal::parse("w^4"));
    const auto v = validate_run(e);
    if (!v.valid || !(v.limit == validate_run(r).limit)) {
      ok = false;
      detail = "embed broke validity or the limit";
    }
  }

  report(8, ok,
         ok ? "run algebra: 10^4 join round trips, 10^3 meet limits plus 10^3 "
              "rejections, 10^3 flatten bounds, 10^3 embeds (seed " +
                  std::to_string(seed) + ")"
            : detail);
}

void criterion_9() {
  const std::uint64_t seed = 901;
  testgen::Rng rng(seed);
  bool ok = true;
  for (int i = 0; i < 10000 && ok; ++i) {
    const auto a = testgen::random_ordinal(rng, 4, 6);
    const auto b = testgen::random_ordinal(rng, 4, 6);
    const auto c = testgen::random_ordinal(rng, 4, 6);
    if (((a < b) + (a == b) + (a > b)) != 1) ok = false;
    if (a <= b && b <= a && !(a == b)) ok = false;
    if (a <= b && b <= c && !(a <= c)) ok = false;
  }
  for (int i = 0; i < 10000 && ok; ++i) {
    const auto a = testgen::random_ordinal(rng, 4, 9);
    if (!(Ordinal::parse(a.str()) == a)) ok = false;
  }
  report(9, ok,
         "ordinal order laws and parse/format identity on 10^4 seeded values "
         "(seed " + std::to_string(seed) + ")");
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = 4;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) {
      jobs = std::atoi(argv[i + 1]);
    }
  }

  criteria_1_to_4(jobs);
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();

  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
