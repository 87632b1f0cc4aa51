#include "mindchange/space.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace mindchange {

namespace {

constexpr int kMaxPoints = 20;

std::optional<std::pair<int, int>> t0_violation(int n,
                                                const std::vector<Mask>& opens) {
  std::vector<Mask> min_open(static_cast<std::size_t>(n), ~Mask{0});
  for (Mask o : opens) {
    for (int x = 0; x < n; ++x) {
      if ((o >> x) & 1u) min_open[static_cast<std::size_t>(x)] &= o;
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (min_open[static_cast<std::size_t>(x)] == min_open[static_cast<std::size_t>(y)])
        return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

}  // namespace

FiniteSpace FiniteSpace::unchecked(std::vector<std::string> labels,
                                   std::vector<Mask> opens) {
  FiniteSpace s;
  s.labels_ = std::move(labels);
  s.opens_ = std::move(opens);
  s.finish();
  return s;
}

void FiniteSpace::finish() {
  full_ = labels_.empty() ? 0 : (Mask{1} << labels_.size()) - 1;
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  min_open_.assign(labels_.size(), full_);
  for (Mask o : opens_) {
    for (std::size_t x = 0; x < labels_.size(); ++x) {
      if ((o >> x) & 1u) min_open_[x] &= o;
    }
  }
}

FiniteSpace FiniteSpace::build(std::vector<std::string> labels,
                               const std::vector<Mask>& subbasis) {
  const int n = static_cast<int>(labels.size());
  if (n == 0 || n > kMaxPoints)
    throw std::invalid_argument("point count out of range");
  const Mask full = (Mask{1} << n) - 1;
  std::set<Mask> family{Mask{0}, full};
  for (Mask m : subbasis) {
    if (m & ~full) throw std::invalid_argument("subbasis member is not a subset of the points");
    family.insert(m);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(family.begin(), family.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        grew |= family.insert(cur[i] | cur[j]).second;
        grew |= family.insert(cur[i] & cur[j]).second;
      }
    }
  }
  std::vector<Mask> opens(family.begin(), family.end());
  if (auto w = t0_violation(n, opens)) {
    throw std::invalid_argument("not T0: points \"" + labels[static_cast<std::size_t>(w->first)] +
                                "\" and \"" + labels[static_cast<std::size_t>(w->second)] +
                                "\" are topologically indistinguishable");
  }
  return unchecked(std::move(labels), std::move(opens));
}

FiniteSpace FiniteSpace::from_opens(std::vector<std::string> labels,
                                    std::vector<Mask> opens) {
  const int n = static_cast<int>(labels.size());
  if (n == 0 || n > kMaxPoints)
    throw std::invalid_argument("point count out of range");
  const Mask full = (Mask{1} << n) - 1;
  std::set<Mask> family(opens.begin(), opens.end());
  if (!family.count(0)) throw std::invalid_argument("opens must contain the empty set");
  if (!family.count(full)) throw std::invalid_argument("opens must contain the full point set");
  for (Mask m : family) {
    if (m & ~full) throw std::invalid_argument("open is not a subset of the points");
  }
  for (Mask a : family) {
    for (Mask b : family) {
      if (!family.count(a | b)) throw std::invalid_argument("opens not closed under union");
      if (!family.count(a & b)) throw std::invalid_argument("opens not closed under intersection");
    }
  }
  std::vector<Mask> sorted(family.begin(), family.end());
  if (auto w = t0_violation(n, sorted)) {
    throw std::invalid_argument("not T0: points \"" + labels[static_cast<std::size_t>(w->first)] +
                                "\" and \"" + labels[static_cast<std::size_t>(w->second)] +
                                "\" are topologically indistinguishable");
  }
  return unchecked(std::move(labels), std::move(sorted));
}

FiniteSpace FiniteSpace::sierpinski() {
  return build({"bot", "top"}, {Mask{2}});
}

FiniteSpace FiniteSpace::discrete(int k) {
  std::vector<std::string> labels;
  std::vector<Mask> subbasis;
  for (int i = 0; i < k; ++i) {
    labels.push_back(std::to_string(i));
    subbasis.push_back(Mask{1} << i);
  }
  return build(std::move(labels), subbasis);
}

FiniteSpace FiniteSpace::flat(int k) {
  std::vector<std::string> labels;
  std::vector<Mask> subbasis;
  for (int i = 0; i < k; ++i) {
    labels.push_back(std::to_string(i));
    subbasis.push_back(Mask{1} << i);
  }
  labels.push_back("bot");
  return build(std::move(labels), subbasis);
}

bool FiniteSpace::is_open(Mask m) const {
  return std::binary_search(opens_.begin(), opens_.end(), m);
}

int FiniteSpace::open_index(Mask m) const {
  auto it = std::lower_bound(opens_.begin(), opens_.end(), m);
  if (it == opens_.end() || *it != m) return -1;
  return static_cast<int>(it - opens_.begin());
}

Mask FiniteSpace::closure(Mask a) const {
  // x lies in the closure iff its minimal open meets A.
  Mask c = 0;
  for (int x = 0; x < point_count(); ++x) {
    if (min_open_[static_cast<std::size_t>(x)] & a) c |= Mask{1} << x;
  }
  return c;
}

std::vector<int> FiniteSpace::opens_containing(int x) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    if ((opens_[i] >> x) & 1u) out.push_back(static_cast<int>(i));
  }
  return out;
}

PointMap make_point_map(FiniteSpace domain, FiniteSpace codomain,
                        std::vector<int> assignment) {
  if (assignment.size() != static_cast<std::size_t>(domain.point_count()))
    throw std::invalid_argument("map must assign every domain point");
  for (int v : assignment) {
    if (v < 0 || v >= codomain.point_count())
      throw std::invalid_argument("map value out of codomain range");
  }
  return PointMap{std::move(domain), std::move(codomain), std::move(assignment)};
}

bool is_continuous_at(const PointMap& f, int x) {
  const Mask u = f.domain.min_open(x);
  const Mask v = f.codomain.min_open(f(x));
  for (int y = 0; y < f.domain.point_count(); ++y) {
    if ((u >> y) & 1u) {
      if (!((v >> f(y)) & 1u)) return false;
    }
  }
  return true;
}

bool is_continuous(const PointMap& f) {
  for (int x = 0; x < f.domain.point_count(); ++x) {
    if (!is_continuous_at(f, x)) return false;
  }
  return true;
}

bool converges(const FiniteSpace& s, const ConvergentSequence& seq) {
  if (seq.entries.empty()) return seq.eventual == 0;
  if (seq.eventual >= seq.entries.size()) return false;
  const Mask u = s.min_open(seq.limit);
  for (std::size_t i = seq.eventual; i < seq.entries.size(); ++i) {
    if (!((u >> seq.entries[i]) & 1u)) return false;
  }
  return true;
}

std::vector<FiniteSpace> enumerate_spaces(int n, int cap) {
  if (n < 1 || n > cap || cap > 5)
    throw std::invalid_argument("point count out of range");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));

  // Ordered pairs (i, j), i != j, bit-indexed.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  const std::size_t bits = pairs.size();

  std::vector<FiniteSpace> out;
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << bits); ++rel) {
    bool lt[5][5] = {};
    for (std::size_t b = 0; b < bits; ++b) {
      if ((rel >> b) & 1u) lt[pairs[b].first][pairs[b].second] = true;
    }
    bool ok = true;
    for (int i = 0; ok && i < n; ++i) {
      for (int j = 0; ok && j < n; ++j) {
        if (i == j || !lt[i][j]) continue;
        if (lt[j][i]) ok = false;  // antisymmetry
        for (int k = 0; ok && k < n; ++k) {
          if (lt[j][k] && !lt[i][k]) ok = false;  // transitivity
        }
      }
    }
    if (!ok) continue;
    // Opens are the up-sets of the order.
    std::vector<Mask> opens;
    const Mask full = (Mask{1} << n) - 1;
    for (Mask m = 0; m <= full; ++m) {
      bool up = true;
      for (int i = 0; up && i < n; ++i) {
        if (!((m >> i) & 1u)) continue;
        for (int j = 0; up && j < n; ++j) {
          if (lt[i][j] && !((m >> j) & 1u)) up = false;
        }
      }
      if (up) opens.push_back(m);
    }
    out.push_back(FiniteSpace::unchecked(labels, std::move(opens)));
  }
  return out;
}

std::vector<NamePrefix> canonical_names(const FiniteSpace& s, int x,
                                        int horizon, int samples,
                                        std::uint64_t seed) {
  const std::vector<int> required = s.opens_containing(x);
  if (horizon < static_cast<int>(required.size()))
    throw std::invalid_argument("horizon too small");

  std::vector<NamePrefix> out;
  {
    // Ascending index order, padded with the full set (always the last open).
    std::vector<int> listed = required;
    listed.resize(static_cast<std::size_t>(horizon),
                  static_cast<int>(s.opens().size()) - 1);
    out.push_back(NamePrefix{s, std::move(listed)});
  }
  std::mt19937_64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    std::vector<int> listed(static_cast<std::size_t>(horizon), -1);
    // Place each required open once, then fill the rest arbitrarily.
    std::vector<int> slots(listed.size());
    for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = static_cast<int>(i);
    std::shuffle(slots.begin(), slots.end(), rng);
    for (std::size_t i = 0; i < required.size(); ++i)
      listed[static_cast<std::size_t>(slots[i])] = required[i];
    std::uniform_int_distribution<std::size_t> d(0, required.size() - 1);
    for (auto& v : listed) {
      if (v < 0) v = required[d(rng)];
    }
    out.push_back(NamePrefix{s, std::move(listed)});
  }
  return out;
}

}  // namespace mindchange
