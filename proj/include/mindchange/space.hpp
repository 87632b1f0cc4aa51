#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mindchange {

// Point subsets are bitmasks over point indices.
using Mask = std::uint32_t;

// A finite T0 topological space. Opens are kept sorted ascending by mask
// value; an open's position in that list is its canonical basic-open index
// (names below list these indices). Since every open is a submask of the
// full set, the minimal open of a point always sorts first among the opens
// containing it, and the full set sorts last.
//
// Values are immutable after construction and cheap to copy.
class FiniteSpace {
 public:
  FiniteSpace() = default;

  // Topology generated by a subbasis: closes under binary unions and
  // intersections and adjoins the empty and full sets. Throws on a T0
  // violation, naming a witness pair of indistinguishable points.
  static FiniteSpace build(std::vector<std::string> labels,
                           const std::vector<Mask>& subbasis);

  // Validating constructor for an explicit list of opens. Checks that the
  // family contains the empty and full sets, is closed under binary union
  // and intersection, and separates points.
  static FiniteSpace from_opens(std::vector<std::string> labels,
                                std::vector<Mask> opens);

  static FiniteSpace sierpinski();   // {bot, top}, {top} open
  static FiniteSpace discrete(int k);
  // k isolated points 0..k-1 plus a bottom point (index k) whose only
  // neighborhood is the whole space.
  static FiniteSpace flat(int k);

  int point_count() const { return static_cast<int>(labels_.size()); }
  Mask full_mask() const { return full_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Mask>& opens() const { return opens_; }

  Mask min_open(int x) const { return min_open_[static_cast<std::size_t>(x)]; }
  bool is_open(Mask m) const;
  int open_index(Mask m) const;  // -1 when m is not an open

  // Smallest closed superset (the specialization down-closure).
  Mask closure(Mask a) const;

  // Specialization order: every open containing x also contains y.
  bool leq(int x, int y) const { return (min_open_[static_cast<std::size_t>(x)] >> y) & 1u; }

  std::vector<int> opens_containing(int x) const;

  bool operator==(const FiniteSpace& rhs) const {
    return labels_ == rhs.labels_ && opens_ == rhs.opens_;
  }

 private:
  static FiniteSpace unchecked(std::vector<std::string> labels,
                               std::vector<Mask> opens);
  void finish();  // sorts opens, computes min opens

  std::vector<std::string> labels_;
  std::vector<Mask> opens_;
  std::vector<Mask> min_open_;
  Mask full_ = 0;

  friend std::vector<FiniteSpace> enumerate_spaces(int, int);
};

// A total map between finite spaces, stored as codomain point indices per
// domain point.
struct PointMap {
  FiniteSpace domain;
  FiniteSpace codomain;
  std::vector<int> assignment;

  int operator()(int x) const { return assignment[static_cast<std::size_t>(x)]; }
};

// Validates totality and range.
PointMap make_point_map(FiniteSpace domain, FiniteSpace codomain,
                        std::vector<int> assignment);

bool is_continuous_at(const PointMap& f, int x);
bool is_continuous(const PointMap& f);

// Finite trace of a sequence declared to sit inside the minimal open of
// `limit` from index `eventual` onward.
struct ConvergentSequence {
  std::vector<int> entries;
  int limit = 0;
  std::size_t eventual = 0;
};

// True when the declaration holds and is witnessed by at least one entry
// (an empty trace converges vacuously).
bool converges(const FiniteSpace& s, const ConvergentSequence& seq);

// Every T0 topology on exactly n labeled points, each exactly once,
// enumerated through the strict partial orders on those points. The cap
// guards against exponential blowup (orders are sieved from all
// 2^(n(n-1)) candidate relations).
std::vector<FiniteSpace> enumerate_spaces(int n, int cap = 4);

// A finite prefix of a name of some point: a list of basic-open indices,
// all containing the named point when the prefix is complete.
struct NamePrefix {
  FiniteSpace space;
  std::vector<int> listed;
};

// Name prefixes of length `horizon` for x: each lists every open containing
// x at least once. The first returned prefix is deterministic (ascending
// index order, padded with the full set); `samples` further prefixes are
// drawn with the seeded generator.
std::vector<NamePrefix> canonical_names(const FiniteSpace& s, int x,
                                        int horizon, int samples = 0,
                                        std::uint64_t seed = 0);

}  // namespace mindchange
