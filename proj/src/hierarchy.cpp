#include "mindchange/hierarchy.hpp"

#include <stdexcept>

namespace mindchange {

bool is_continuous_within(const PointMap& f, Mask sub, int x) {
  const Mask u = f.domain.min_open(x) & sub;
  const Mask v = f.codomain.min_open(f(x));
  for (int y = 0; y < f.domain.point_count(); ++y) {
    if ((u >> y) & 1u) {
      if (!((v >> f(y)) & 1u)) return false;
    }
  }
  return true;
}

LevelChain level_chain(const PointMap& f) {
  if (f.domain.point_count() == 0) throw std::invalid_argument("empty domain");
  LevelChain out;
  out.stages.push_back(f.domain.full_mask());
  while (out.stages.back() != 0) {
    const Mask cur = out.stages.back();
    Mask discont = 0;
    for (int x = 0; x < f.domain.point_count(); ++x) {
      if (((cur >> x) & 1u) && !is_continuous_within(f, cur, x))
        discont |= Mask{1} << x;
    }
    const Mask next = f.domain.closure(discont);
    if (next == cur)
      throw std::logic_error("level recursion failed to descend");
    out.stages.push_back(next);
  }
  out.level = static_cast<int>(out.stages.size()) - 1;
  return out;
}

std::vector<Mask> decomposition_pieces(const Decomposition& d) {
  std::vector<Mask> pieces;
  Mask used = 0;
  for (Mask u : d.opens) {
    pieces.push_back(u & ~used);
    used |= u;
  }
  return pieces;
}

Decomposition canonical_decomposition(const PointMap& f) {
  const LevelChain chain = level_chain(f);
  Decomposition d;
  for (int b = 0; b < chain.level; ++b) {
    d.opens.push_back(f.domain.full_mask() &
                      ~chain.stages[static_cast<std::size_t>(b) + 1]);
  }
  return d;
}

bool is_valid_decomposition(const PointMap& f, const Decomposition& d) {
  Mask covered = 0;
  for (Mask u : d.opens) {
    if (!f.domain.is_open(u)) return false;
  }
  for (Mask piece : decomposition_pieces(d)) {
    for (int x = 0; x < f.domain.point_count(); ++x) {
      if (((piece >> x) & 1u) && !is_continuous_within(f, piece, x))
        return false;
    }
    covered |= piece;
  }
  return covered == f.domain.full_mask();
}

int min_piecewise_level(const PointMap& f) {
  // Chains may be normalized to cumulative unions, so a length-alpha
  // decomposition is a path of alpha strict extensions from the empty set to
  // the full set where each added piece has a continuous restriction.
  // Breadth-first search over that DAG of opens yields the least alpha.
  const auto& opens = f.domain.opens();
  const Mask full = f.domain.full_mask();

  auto piece_ok = [&](Mask piece) {
    for (int x = 0; x < f.domain.point_count(); ++x) {
      if (((piece >> x) & 1u) && !is_continuous_within(f, piece, x))
        return false;
    }
    return true;
  };

  std::vector<Mask> frontier{0};
  for (int alpha = 1; alpha <= static_cast<int>(opens.size()); ++alpha) {
    std::vector<Mask> next;
    for (Mask base : frontier) {
      for (Mask u : opens) {
        if (u == base || (base & ~u)) continue;  // need base strictly below u
        if (!piece_ok(u & ~base)) continue;
        if (u == full) return alpha;
        next.push_back(u);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  throw std::logic_error("no piecewise decomposition found");
}

Mask difference_set(const DiffSetSpec& spec) {
  for (std::size_t i = 1; i < spec.sets.size(); ++i) {
    if (spec.sets[i - 1] & ~spec.sets[i])
      throw std::invalid_argument("difference sets must increase");
  }
  const std::size_t alpha = spec.sets.size();
  Mask out = 0;
  Mask used = 0;
  for (std::size_t b = 0; b < alpha; ++b) {
    if ((b % 2) != (alpha % 2)) out |= spec.sets[b] & ~used;
    used |= spec.sets[b];
  }
  return out;
}

namespace {

bool sigma_search(const FiniteSpace& s, Mask target, int alpha, Mask prev,
                  std::vector<Mask>& chain) {
  if (alpha == 0) {
    return difference_set(DiffSetSpec{chain}) == target;
  }
  for (Mask u : s.opens()) {
    if (prev & ~u) continue;  // keep the sequence increasing
    chain.push_back(u);
    if (sigma_search(s, target, alpha - 1, u, chain)) return true;
    chain.pop_back();
  }
  return false;
}

}  // namespace

bool in_sigma_minus1(const FiniteSpace& s, Mask a, int alpha) {
  return sigma_minus1_witness(s, a, alpha).has_value();
}

std::optional<std::vector<Mask>> sigma_minus1_witness(const FiniteSpace& s,
                                                      Mask a, int alpha) {
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
  std::vector<Mask> chain;
  if (sigma_search(s, a, alpha, 0, chain)) return chain;
  return std::nullopt;
}

CBChain cb_chain(const FiniteSpace& s) {
  CBChain out;
  out.derivatives.push_back(s.full_mask());
  while (true) {
    const Mask cur = out.derivatives.back();
    Mask derived = 0;
    for (int x = 0; x < s.point_count(); ++x) {
      if (!((cur >> x) & 1u)) continue;
      if ((s.min_open(x) & cur) != (Mask{1} << x)) derived |= Mask{1} << x;
    }
    if (derived == cur) break;
    out.derivatives.push_back(derived);
  }
  out.rank = static_cast<int>(out.derivatives.size()) - 1;
  out.kernel = out.derivatives.back();
  return out;
}

}  // namespace mindchange
