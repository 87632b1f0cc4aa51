#include "mindchange/sweep.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "mindchange/hierarchy.hpp"
#include "mindchange/machines.hpp"

namespace mindchange {

std::vector<std::vector<int>> enumerate_assignments(int domain_points,
                                                    int codomain_points) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(domain_points), 0);
  while (true) {
    out.push_back(a);
    int i = domain_points - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == codomain_points - 1) {
      a[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++a[static_cast<std::size_t>(i)];
  }
  return out;
}

namespace {

struct WorkerTally {
  std::uint64_t maps = 0;
  std::uint64_t level_checks = 0;
  std::uint64_t preimage_checks = 0;
  std::uint64_t simulated_runs = 0;
  std::uint64_t level_failures = 0;
  std::uint64_t bound_failures = 0;
  std::uint64_t preimage_failures = 0;
  std::uint64_t machine_failures = 0;
  // first failure seen by this worker, with its global space index
  std::size_t failure_space = SIZE_MAX;
  std::optional<SweepCounterexample> failure;
};

void note_failure(WorkerTally& tally, std::size_t space_idx,
                  const FiniteSpace& sp, const std::string& codomain,
                  const std::vector<int>& assignment, const std::string& check,
                  const std::string& detail) {
  if (space_idx < tally.failure_space) {
    tally.failure_space = space_idx;
    tally.failure = SweepCounterexample{check, detail, sp, codomain, assignment};
  }
}

void check_space(const SweepOptions& options, std::size_t space_idx,
                 const FiniteSpace& sp, WorkerTally& tally) {
  struct Codomain {
    const char* tag;
    FiniteSpace space;
  };
  std::vector<Codomain> codomains;
  if (options.codomain_two) codomains.push_back({"2", FiniteSpace::discrete(2)});
  if (options.codomain_sierpinski)
    codomains.push_back({"S", FiniteSpace::sierpinski()});
  if (options.codomain_three)
    codomains.push_back({"3", FiniteSpace::discrete(3)});

  const int horizon = static_cast<int>(sp.opens().size());
  for (const auto& [tag, cod] : codomains) {
    for (auto& assignment : enumerate_assignments(sp.point_count(),
                                                  cod.point_count())) {
      const PointMap f = make_point_map(sp, cod, assignment);
      ++tally.maps;

      const LevelChain chain = level_chain(f);
      const int brute = min_piecewise_level(f);
      ++tally.level_checks;
      if (chain.level != brute) {
        ++tally.level_failures;
        note_failure(tally, space_idx, sp, tag, assignment, "level-equality",
                     "level " + std::to_string(chain.level) +
                         " != exhaustive " + std::to_string(brute));
      }
      if (chain.level > sp.point_count()) {
        ++tally.bound_failures;
        note_failure(tally, space_idx, sp, tag, assignment, "level-bound",
                     "level " + std::to_string(chain.level) + " exceeds " +
                         std::to_string(sp.point_count()) + " points");
      }

      if (std::string_view(tag) == "2") {
        Mask pre1 = 0;
        for (int x = 0; x < sp.point_count(); ++x) {
          if (f(x) == 1) pre1 |= Mask{1} << x;
        }
        const Mask pre0 = sp.full_mask() & ~pre1;
        for (int alpha = 1; alpha <= options.max_alpha; ++alpha) {
          ++tally.preimage_checks;
          const bool both = in_sigma_minus1(sp, pre1, alpha) &&
                            in_sigma_minus1(sp, pre0, alpha);
          if (both != (chain.level <= alpha)) {
            ++tally.preimage_failures;
            note_failure(tally, space_idx, sp, tag, assignment,
                         "preimage-equivalence",
                         "alpha " + std::to_string(alpha) + " disagrees");
          }
        }
      }

      const SimulationSummary sim =
          simulate_all(sp, f, horizon, options.samples,
                       options.seed + static_cast<std::uint64_t>(space_idx));
      for (const auto& st : sim.per_point) {
        tally.simulated_runs += static_cast<std::uint64_t>(st.names);
      }
      if (!sim.ok) {
        tally.machine_failures += sim.failures.size();
        note_failure(tally, space_idx, sp, tag, assignment, "machine-soundness",
                     sim.failures.front());
      }
    }
  }
}

}  // namespace

SweepResult run_sweep(const SweepOptions& options) {
  const auto started = std::chrono::steady_clock::now();

  std::vector<FiniteSpace> corpus;
  for (int n = 1; n <= options.max_points; ++n) {
    for (auto& sp : enumerate_spaces(n, std::max(options.max_points, 4)))
      corpus.push_back(std::move(sp));
  }

  const int jobs = std::max(1, options.jobs);
  std::vector<WorkerTally> tallies(static_cast<std::size_t>(jobs));
  std::atomic<std::size_t> next{0};
  auto worker = [&](int id) {
    WorkerTally& tally = tallies[static_cast<std::size_t>(id)];
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) break;
      check_space(options, i, corpus[i], tally);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }

  SweepResult result;
  result.spaces = corpus.size();
  std::size_t best = SIZE_MAX;
  for (const auto& tally : tallies) {
    result.maps += tally.maps;
    result.level_checks += tally.level_checks;
    result.preimage_checks += tally.preimage_checks;
    result.simulated_runs += tally.simulated_runs;
    result.level_failures += tally.level_failures;
    result.bound_failures += tally.bound_failures;
    result.preimage_failures += tally.preimage_failures;
    result.machine_failures += tally.machine_failures;
    if (tally.failure && tally.failure_space < best) {
      best = tally.failure_space;
      result.first_failure = tally.failure;
    }
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return result;
}

}  // namespace mindchange
