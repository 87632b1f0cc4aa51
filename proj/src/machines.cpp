#include "mindchange/machines.hpp"

#include <stdexcept>

namespace mindchange {

namespace {

int lowest_point(Mask m) {
  if (m == 0) return -1;
  int x = 0;
  while (!((m >> x) & 1u)) ++x;
  return x;
}

Mask intersect_listed(const NamePrefix& name) {
  Mask e = name.space.full_mask();
  for (int idx : name.listed) {
    if (idx < 0 || idx >= static_cast<int>(name.space.opens().size()))
      throw std::invalid_argument("name lists an unknown open");
    e &= name.space.opens()[static_cast<std::size_t>(idx)];
  }
  return e;
}

// The token for a piece, computed against the whole (finite) name: the trace
// image of a realizer that keeps streaming from the full input. Among the
// piece points consistent with the evidence, the emitted codomain point is
// the one whose minimal open is the join of the candidates' image
// neighborhoods; when no codomain point matches exactly, the lowest-index
// candidate answers.
int counter_guess(const PointMap& f, Mask piece, Mask full_evidence) {
  Mask candidates = piece & full_evidence;
  if (candidates == 0) candidates = piece;
  if (candidates == 0) return -1;
  Mask w = 0;
  for (int z = 0; z < f.domain.point_count(); ++z) {
    if ((candidates >> z) & 1u) w |= f.codomain.min_open(f(z));
  }
  for (int y = 0; y < f.codomain.point_count(); ++y) {
    if (f.codomain.min_open(y) == w) return y;
  }
  return f(lowest_point(candidates));
}

}  // namespace

RefutablePiece make_refutable_piece(const FiniteSpace& s, Mask membership,
                                    Mask refutation,
                                    std::vector<int> guess_table,
                                    Mask inside_evidence) {
  if (!s.is_open(refutation)) throw std::invalid_argument("refutation must be open");
  if (!s.is_open(inside_evidence))
    throw std::invalid_argument("inside evidence must be open");
  if (membership & ~(inside_evidence & ~refutation))
    throw std::invalid_argument("piece must lie inside its evidence minus its refutation");
  if (guess_table.size() != static_cast<std::size_t>(s.point_count()))
    throw std::invalid_argument("guess table must cover the space");
  for (int x = 0; x < s.point_count(); ++x) {
    if (!((membership >> x) & 1u)) continue;
    const Mask nbhd = s.min_open(x) & membership;
    for (int y = 0; y < s.point_count(); ++y) {
      if (((nbhd >> y) & 1u) && guess_table[static_cast<std::size_t>(y)] !=
                                    guess_table[static_cast<std::size_t>(x)])
        throw std::invalid_argument("guess table is not locally constant on the piece");
    }
  }
  return RefutablePiece{membership, inside_evidence, refutation,
                        std::move(guess_table)};
}

std::vector<RefutablePiece> level_pieces(const PointMap& f) {
  const LevelChain chain = level_chain(f);
  std::vector<RefutablePiece> pieces;
  for (int b = chain.level - 1; b >= 0; --b) {
    const Mask piece = chain.stages[static_cast<std::size_t>(b)] &
                       ~chain.stages[static_cast<std::size_t>(b) + 1];
    const Mask refutation = f.domain.full_mask() & ~f.domain.closure(piece);
    pieces.push_back(make_refutable_piece(f.domain, piece, refutation,
                                          f.assignment,
                                          f.domain.full_mask()));
  }
  return pieces;
}

MachineReport glue_machine(const std::vector<RefutablePiece>& pieces,
                           const NamePrefix& name) {
  if (pieces.empty()) throw std::runtime_error("cover violation");
  const FiniteSpace& s = name.space;
  const Mask full_evidence = intersect_listed(name);
  if (full_evidence == 0) throw std::runtime_error("inconsistent name");

  const auto remaining = [&](std::size_t p) {
    return Ordinal::natural(pieces.size() - 1 - p);
  };
  const auto guess_for = [&](std::size_t p) {
    Mask candidates = pieces[p].membership & full_evidence;
    if (candidates == 0) candidates = pieces[p].membership;
    const int z = lowest_point(candidates);
    if (z < 0) throw std::runtime_error("cover violation");
    return Guess::point(pieces[p].guess_table[static_cast<std::size_t>(z)]);
  };

  TaggedRun run;
  run.bound = Ordinal::omega();
  run.bound_inclusive = true;

  std::size_t p = 0;
  run.steps.push_back({remaining(p), guess_for(p)});
  Mask evidence = s.full_mask();
  for (int idx : name.listed) {
    evidence &= s.opens()[static_cast<std::size_t>(idx)];
    if (evidence == 0) throw std::runtime_error("inconsistent name");
    while ((evidence & ~pieces[p].refutation) == 0) {
      ++p;
      if (p == pieces.size()) throw std::runtime_error("cover violation");
      run.steps.push_back({remaining(p), guess_for(p)});
    }
  }
  return MachineReport{run, run.steps.back().guess, name};
}

MachineReport ordinal_counter_machine(const Decomposition& d, const PointMap& f,
                                      const NamePrefix& name) {
  if (!(name.space == f.domain))
    throw std::invalid_argument("name is over a different space");
  for (std::size_t b = 1; b < d.opens.size(); ++b) {
    if (d.opens[b - 1] & ~d.opens[b])
      throw std::invalid_argument("decomposition opens must increase");
  }
  if (!is_valid_decomposition(f, d))
    throw std::invalid_argument("decomposition is not valid for the map");

  const FiniteSpace& s = f.domain;
  const Mask full_evidence = intersect_listed(name);
  if (full_evidence == 0) throw std::runtime_error("inconsistent name");
  const std::vector<Mask> pieces = decomposition_pieces(d);

  TaggedRun run;
  run.bound = Ordinal::natural(d.opens.size());
  run.bound_inclusive = false;

  std::size_t counter = d.opens.size();  // not yet initialized
  Mask evidence = s.full_mask();
  for (int idx : name.listed) {
    if (idx < 0 || idx >= static_cast<int>(s.opens().size()))
      throw std::invalid_argument("name lists an unknown open");
    evidence &= s.opens()[static_cast<std::size_t>(idx)];
    if (evidence == 0) throw std::runtime_error("inconsistent name");
    for (std::size_t b = 0; b < counter; ++b) {
      if ((evidence & ~d.opens[b]) == 0) {
        counter = b;
        const int y = counter_guess(f, pieces[b], full_evidence);
        if (y < 0) throw std::logic_error("counter landed on an empty piece");
        run.steps.push_back({Ordinal::natural(b), Guess::point(y)});
        break;
      }
    }
  }
  if (run.steps.empty()) throw std::runtime_error("no piece activated");
  return MachineReport{run, run.steps.back().guess, name};
}

MachineReport cb_identifier(const FiniteSpace& s, const NamePrefix& name) {
  const CBChain chain = cb_chain(s);
  if (chain.kernel != 0)
    throw std::logic_error("finite T0 spaces have no perfect kernel");
  const int n = s.point_count();

  Decomposition d;
  for (int b = 0; b + 1 <= chain.rank; ++b) {
    d.opens.push_back(s.full_mask() &
                      ~chain.derivatives[static_cast<std::size_t>(b) + 1]);
  }
  std::vector<int> assignment(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) assignment[static_cast<std::size_t>(x)] = x;
  const PointMap p = make_point_map(s, FiniteSpace::flat(n), assignment);
  return ordinal_counter_machine(d, p, name);
}

SimulationSummary simulate_all(const FiniteSpace& s, const PointMap& f,
                               int horizon, int samples, std::uint64_t seed) {
  SimulationSummary out;
  const Decomposition d = canonical_decomposition(f);
  out.level = static_cast<int>(d.opens.size());
  const Ordinal level_ord = Ordinal::natural(out.level);
  for (int x = 0; x < s.point_count(); ++x) {
    SimulationSummary::PointStats stats;
    stats.point = x;
    const auto names = canonical_names(s, x, horizon, samples, seed + static_cast<std::uint64_t>(x));
    const Guess expected = Guess::point(f(x));
    for (const auto& name : names) {
      const MachineReport report = ordinal_counter_machine(d, f, name);
      ++stats.names;
      stats.max_changes = std::max(stats.max_changes, mind_changes(report.run));
      const RunVerdict v = validate_run(report.run);
      if (!v.valid) {
        out.failures.push_back("point " + s.labels()[static_cast<std::size_t>(x)] +
                               ": invalid run (" + v.reason + ")");
        continue;
      }
      if (!(v.limit == expected)) {
        out.failures.push_back("point " + s.labels()[static_cast<std::size_t>(x)] +
                               ": limit disagrees with the map");
      }
      for (const auto& step : report.run.steps) {
        if (!(step.tag < level_ord)) {
          out.failures.push_back("point " + s.labels()[static_cast<std::size_t>(x)] +
                                 ": tag reaches the level");
          break;
        }
      }
    }
    out.per_point.push_back(stats);
  }
  out.ok = out.failures.empty();
  return out;
}

}  // namespace mindchange
