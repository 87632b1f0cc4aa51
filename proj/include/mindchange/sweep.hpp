#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mindchange/space.hpp"

namespace mindchange {

// Exhaustive verification over every labeled T0 space with up to max_points
// points and every total map into the selected codomains:
//   - the level recursion agrees with the exhaustive piecewise search,
//   - levels stay within the point count,
//   - for two-valued maps, the level-alpha threshold matches difference
//     hierarchy membership of both preimages for alpha = 1..max_alpha,
//   - the counter machine is sound on every canonical name.
struct SweepOptions {
  int max_points = 4;
  bool codomain_two = true;
  bool codomain_sierpinski = true;
  bool codomain_three = true;
  int max_alpha = 4;
  int jobs = 1;
  int samples = 2;
  std::uint64_t seed = 1;
};

struct SweepCounterexample {
  std::string check;       // which property failed
  std::string detail;
  FiniteSpace space;
  std::string codomain;    // "2", "S" or "3"
  std::vector<int> assignment;
};

struct SweepResult {
  std::uint64_t spaces = 0;
  std::uint64_t maps = 0;
  std::uint64_t level_checks = 0;
  std::uint64_t preimage_checks = 0;
  std::uint64_t simulated_runs = 0;
  std::uint64_t level_failures = 0;
  std::uint64_t bound_failures = 0;
  std::uint64_t preimage_failures = 0;
  std::uint64_t machine_failures = 0;
  std::optional<SweepCounterexample> first_failure;
  double seconds = 0.0;

  bool ok() const {
    return level_failures + bound_failures + preimage_failures +
               machine_failures ==
           0;
  }
};

SweepResult run_sweep(const SweepOptions& options);

// All total maps from dom into cod, enumerated in lexicographic order of
// their assignment vectors.
std::vector<std::vector<int>> enumerate_assignments(int domain_points,
                                                    int codomain_points);

}  // namespace mindchange
