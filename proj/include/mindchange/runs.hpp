#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mindchange/ordinal.hpp"

namespace mindchange {

// An emitted output token. Equality is bitwise on the payload, so producers
// must canonicalize whatever they serialize into one.
struct Guess {
  std::vector<std::uint64_t> payload;

  static Guess point(int index) {
    return Guess{{static_cast<std::uint64_t>(index)}};
  }
  bool operator==(const Guess& rhs) const = default;
};

// A finite trace of (ordinal tag, guess) steps under an ordinal bound.
// Tags never increase, a changed guess forces a changed (hence strictly
// smaller) tag, and every tag stays below the bound -- except that with
// bound_inclusive set the leading block of equal tags may sit exactly at
// the bound (the counter-initialization convention).
struct TaggedRun {
  struct Step {
    Ordinal tag;
    Guess guess;
  };
  std::vector<Step> steps;
  Ordinal bound;
  bool bound_inclusive = false;
};

// An untagged trace: convergence means its guesses stop changing.
struct PlainRun {
  std::vector<Guess> steps;
};

struct RunVerdict {
  bool valid = false;
  Guess limit;                    // final guess (valid runs)
  std::size_t stabilization = 0;  // first index from which the guess is constant
  std::string reason;             // violated condition (invalid runs)
  std::size_t index = 0;          // step where it was violated
};

RunVerdict validate_run(const TaggedRun& r);

int mind_changes(const TaggedRun& r);
int mind_changes(const PlainRun& r);

// Tags at the steps where the guess changed; in a valid run these strictly
// decrease.
std::vector<Ordinal> change_point_tags(const TaggedRun& r);

// Tagging a run into component i of a countable join: the component index is
// prepended to every payload, which is exactly what decode recovers.
TaggedRun join_encode(std::uint64_t component, const TaggedRun& r);
std::pair<std::uint64_t, TaggedRun> join_decode(const TaggedRun& r);

// Componentwise tuple run of several valid runs with a common limit. The
// guesses are canonical tuple encodings, the tags pointwise maxima, and the
// bound the maximum bound. Throws when some component is invalid or the
// limits disagree.
TaggedRun meet_encode(const std::vector<TaggedRun>& rs);

// Splits a tuple-encoded guess back into its components.
std::vector<Guess> tuple_decode(const Guess& g);

// The meet collapses to its first component: the limit of a tuple run is
// component 0 of its final guess.
Guess meet_limit(const TaggedRun& tuple_run);

// Same steps under a weaker bound. Throws "bound shrink" when new_bound is
// smaller than the current one.
TaggedRun embed(const TaggedRun& r, const Ordinal& new_bound);

// Canonical self-delimiting payload encodings, so runs can ride inside
// guesses of outer runs.
std::vector<std::uint64_t> serialize_run(const TaggedRun& r);
TaggedRun deserialize_run(const std::vector<std::uint64_t>& payload);

// Collapses a plain run whose guesses are serialized runs into one plain
// run over the inner guesses. Blocks of equal outer guesses contribute their
// inner trace once, so the flat change count stays within
// (outer changes + 1) * (max inner changes + 1) - 1.
PlainRun flatten(const PlainRun& outer);

// Horizon-limited verdict for limit-style traces, where convergence can be
// observed but never refuted: `converged_by` when the guess stopped changing
// strictly inside the horizon, `undecided` when the trace ends before the
// horizon, `contradiction_free` when changes persist to the horizon's edge.
enum class Sigma2Status { converged_by, undecided, contradiction_free };
struct Sigma2Verdict {
  Sigma2Status status = Sigma2Status::undecided;
  std::size_t index = 0;  // stabilization index when converged_by
};

Sigma2Verdict sigma2_verdict(const PlainRun& r, std::size_t horizon);

}  // namespace mindchange
