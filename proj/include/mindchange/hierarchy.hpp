#pragma once

#include <optional>
#include <vector>

#include "mindchange/space.hpp"

namespace mindchange {

// Stages of the discontinuity-closure recursion: stages[0] is the whole
// space, each next stage is the closure of the discontinuity points of the
// restriction to the previous stage, and the last stage is empty. The level
// of the map is the index of that empty stage.
struct LevelChain {
  std::vector<Mask> stages;
  int level = 0;
};

LevelChain level_chain(const PointMap& f);

// An increasing sequence of opens. Piece b is opens[b] minus the union of
// the earlier opens; a decomposition is valid for f when the pieces cover
// the domain and f restricted to each piece is continuous.
struct Decomposition {
  std::vector<Mask> opens;
};

std::vector<Mask> decomposition_pieces(const Decomposition& d);

// The canonical decomposition read off the level chain: the b-th open is
// the complement of stage b+1.
Decomposition canonical_decomposition(const PointMap& f);

bool is_valid_decomposition(const PointMap& f, const Decomposition& d);

// Least length of a valid decomposition, found by exhaustive search over
// increasing open chains (independent of the level-chain recursion).
int min_piecewise_level(const PointMap& f);

// An inclusion-increasing sequence of sets feeding the difference operator.
struct DiffSetSpec {
  std::vector<Mask> sets;
};

// D_alpha of the sequence with alpha = sets.size(): the union of the pieces
// whose index parity differs from the parity of alpha.
Mask difference_set(const DiffSetSpec& spec);

// Whether A arises as the difference set of some increasing sequence of
// exactly `alpha` opens of s (exhaustive witness search).
bool in_sigma_minus1(const FiniteSpace& s, Mask a, int alpha);

// The witnessing open sequence, when one exists.
std::optional<std::vector<Mask>> sigma_minus1_witness(const FiniteSpace& s,
                                                      Mask a, int alpha);

// Iterated derived sets down to the perfect kernel. derivatives[0] is the
// whole space; rank is the first index where the chain stabilizes.
struct CBChain {
  std::vector<Mask> derivatives;
  int rank = 0;
  Mask kernel = 0;
};

CBChain cb_chain(const FiniteSpace& s);

// Continuity of the restriction of f to a subspace at x (x must lie in sub).
bool is_continuous_within(const PointMap& f, Mask sub, int x);

}  // namespace mindchange
