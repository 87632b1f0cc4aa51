#pragma once

#include <string>
#include <vector>

#include "mindchange/hierarchy.hpp"
#include "mindchange/runs.hpp"
#include "mindchange/space.hpp"

namespace mindchange {

// One piece of an ordered cover driven by positive name information. The
// piece is refuted once the evidence read so far is provably inside the
// refutation open (which is disjoint from the piece); until then the piece's
// guess table answers for it. The table must agree with the simulated map on
// the piece and be locally constant there.
struct RefutablePiece {
  Mask membership = 0;
  Mask inside_evidence = 0;
  Mask refutation = 0;
  std::vector<int> guess_table;
};

// Validating constructor; checks the containment and local-constancy
// invariants against the carrying space.
RefutablePiece make_refutable_piece(const FiniteSpace& s, Mask membership,
                                    Mask refutation,
                                    std::vector<int> guess_table,
                                    Mask inside_evidence);

// The canonical ordered cover for a map whose piecewise restrictions are
// locally constant (any map into a discrete space): level pieces, deepest
// first, each refuted by the complement of its closure.
std::vector<RefutablePiece> level_pieces(const PointMap& f);

struct MachineReport {
  TaggedRun run;
  Guess converged_to;
  NamePrefix name_used;
};

// Piece-pointer simulation: start at piece 0, emit its guess, and advance
// the pointer whenever the accumulated evidence lands inside the current
// piece's refutation open. Tags count the pieces still ahead; the bound is
// w with the inclusive convention.
MachineReport glue_machine(const std::vector<RefutablePiece>& pieces,
                           const NamePrefix& name);

// Ordinal-counter simulation over a valid decomposition: initialize the
// counter at the least index whose open provably contains the named point,
// re-emit whenever the evidence drops it lower. Tags are the counter values,
// bounded by the decomposition length.
MachineReport ordinal_counter_machine(const Decomposition& d, const PointMap& f,
                                      const NamePrefix& name);

// Identifies points through the derived-set decomposition: isolated points
// first, then the isolated points of each derivative in turn. Converges to
// an injective code of the named point with at most rank-many changes.
MachineReport cb_identifier(const FiniteSpace& s, const NamePrefix& name);

struct SimulationSummary {
  struct PointStats {
    int point = 0;
    int names = 0;
    int max_changes = 0;
  };
  bool ok = true;
  int level = 0;
  std::vector<PointStats> per_point;
  std::vector<std::string> failures;
};

// Runs the counter machine with the canonical decomposition on every
// canonical name of every point (the deterministic prefix plus `samples`
// seeded ones) and checks each run is valid, converges to the image of the
// named point, and never tags at or above the level of the map.
SimulationSummary simulate_all(const FiniteSpace& s, const PointMap& f,
                               int horizon, int samples = 2,
                               std::uint64_t seed = 1);

}  // namespace mindchange
