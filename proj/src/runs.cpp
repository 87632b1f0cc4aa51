#include "mindchange/runs.hpp"

#include <algorithm>
#include <stdexcept>

namespace mindchange {

namespace {

RunVerdict invalid(std::string reason, std::size_t index) {
  RunVerdict v;
  v.reason = std::move(reason);
  v.index = index;
  return v;
}

}  // namespace

RunVerdict validate_run(const TaggedRun& r) {
  if (r.steps.empty()) return invalid("empty run", 0);
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    if (r.steps[i].guess.payload.empty()) return invalid("empty guess payload", i);
  }
  // Leading block of equal tags; only it may touch an inclusive bound.
  std::size_t lead = 1;
  while (lead < r.steps.size() && r.steps[lead].tag == r.steps[0].tag) ++lead;
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& tag = r.steps[i].tag;
    const bool at_bound_ok = r.bound_inclusive && i < lead;
    if (tag > r.bound || (tag == r.bound && !at_bound_ok))
      return invalid("tag exceeds bound", i);
    if (i == 0) continue;
    if (tag > r.steps[i - 1].tag) return invalid("tag increased", i);
    if (!(r.steps[i].guess == r.steps[i - 1].guess) && tag == r.steps[i - 1].tag)
      return invalid("guess changed without tag change", i);
  }
  RunVerdict v;
  v.valid = true;
  v.limit = r.steps.back().guess;
  v.stabilization = 0;
  for (std::size_t i = 1; i < r.steps.size(); ++i) {
    if (!(r.steps[i].guess == r.steps[i - 1].guess)) v.stabilization = i;
  }
  return v;
}

int mind_changes(const TaggedRun& r) {
  int n = 0;
  for (std::size_t i = 1; i < r.steps.size(); ++i) {
    if (!(r.steps[i].guess == r.steps[i - 1].guess)) ++n;
  }
  return n;
}

int mind_changes(const PlainRun& r) {
  int n = 0;
  for (std::size_t i = 1; i < r.steps.size(); ++i) {
    if (!(r.steps[i] == r.steps[i - 1])) ++n;
  }
  return n;
}

std::vector<Ordinal> change_point_tags(const TaggedRun& r) {
  std::vector<Ordinal> out;
  for (std::size_t i = 1; i < r.steps.size(); ++i) {
    if (!(r.steps[i].guess == r.steps[i - 1].guess)) out.push_back(r.steps[i].tag);
  }
  return out;
}

TaggedRun join_encode(std::uint64_t component, const TaggedRun& r) {
  TaggedRun out = r;
  for (auto& step : out.steps) {
    step.guess.payload.insert(step.guess.payload.begin(), component);
  }
  return out;
}

std::pair<std::uint64_t, TaggedRun> join_decode(const TaggedRun& r) {
  if (r.steps.empty()) throw std::invalid_argument("empty run");
  if (r.steps.front().guess.payload.empty())
    throw std::invalid_argument("guess carries no component index");
  const std::uint64_t component = r.steps.front().guess.payload.front();
  TaggedRun out = r;
  for (std::size_t i = 0; i < out.steps.size(); ++i) {
    auto& payload = out.steps[i].guess.payload;
    if (payload.empty() || payload.front() != component)
      throw std::invalid_argument("inconsistent component indices at step " +
                                  std::to_string(i));
    if (payload.size() < 2)
      throw std::invalid_argument("guess payload empty after component strip");
    payload.erase(payload.begin());
  }
  return {component, out};
}

namespace {

Guess tuple_encode(const std::vector<Guess>& parts) {
  Guess g;
  g.payload.push_back(parts.size());
  for (const auto& p : parts) {
    g.payload.push_back(p.payload.size());
    g.payload.insert(g.payload.end(), p.payload.begin(), p.payload.end());
  }
  return g;
}

}  // namespace

std::vector<Guess> tuple_decode(const Guess& g) {
  std::size_t pos = 0;
  auto next = [&]() {
    if (pos >= g.payload.size()) throw std::invalid_argument("truncated tuple guess");
    return g.payload[pos++];
  };
  const std::uint64_t k = next();
  std::vector<Guess> parts;
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t len = next();
    Guess p;
    for (std::uint64_t j = 0; j < len; ++j) p.payload.push_back(next());
    parts.push_back(std::move(p));
  }
  if (pos != g.payload.size()) throw std::invalid_argument("trailing tuple data");
  return parts;
}

TaggedRun meet_encode(const std::vector<TaggedRun>& rs) {
  if (rs.empty()) throw std::invalid_argument("meet of no runs");
  std::vector<RunVerdict> verdicts;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    verdicts.push_back(validate_run(rs[i]));
    if (!verdicts.back().valid)
      throw std::invalid_argument("component " + std::to_string(i) +
                                  " is invalid: " + verdicts.back().reason);
  }
  for (std::size_t i = 1; i < rs.size(); ++i) {
    if (!(verdicts[i].limit == verdicts[0].limit))
      throw std::invalid_argument("limits disagree (components 0 and " +
                                  std::to_string(i) + ")");
  }
  TaggedRun out;
  out.bound = rs[0].bound;
  out.bound_inclusive = rs[0].bound_inclusive;
  std::size_t len = 0;
  for (const auto& r : rs) {
    len = std::max(len, r.steps.size());
    if (r.bound > out.bound) out.bound = r.bound;
    out.bound_inclusive = out.bound_inclusive || r.bound_inclusive;
  }
  for (std::size_t t = 0; t < len; ++t) {
    std::vector<Guess> parts;
    Ordinal tag;  // pointwise maximum of the current component tags
    for (const auto& r : rs) {
      const auto& step = r.steps[std::min(t, r.steps.size() - 1)];
      parts.push_back(step.guess);
      if (step.tag > tag) tag = step.tag;
    }
    out.steps.push_back({tag, tuple_encode(parts)});
  }
  return out;
}

Guess meet_limit(const TaggedRun& tuple_run) {
  if (tuple_run.steps.empty()) throw std::invalid_argument("empty run");
  auto parts = tuple_decode(tuple_run.steps.back().guess);
  if (parts.empty()) throw std::invalid_argument("empty tuple");
  return parts.front();
}

TaggedRun embed(const TaggedRun& r, const Ordinal& new_bound) {
  if (new_bound < r.bound) throw std::invalid_argument("bound shrink");
  TaggedRun out = r;
  out.bound = new_bound;
  return out;
}

std::vector<std::uint64_t> serialize_run(const TaggedRun& r) {
  std::vector<std::uint64_t> out;
  out.push_back(r.bound_inclusive ? 1 : 0);
  r.bound.encode(out);
  out.push_back(r.steps.size());
  for (const auto& step : r.steps) {
    step.tag.encode(out);
    out.push_back(step.guess.payload.size());
    out.insert(out.end(), step.guess.payload.begin(), step.guess.payload.end());
  }
  return out;
}

TaggedRun deserialize_run(const std::vector<std::uint64_t>& payload) {
  std::size_t pos = 0;
  auto next = [&]() {
    if (pos >= payload.size()) throw std::invalid_argument("truncated run payload");
    return payload[pos++];
  };
  TaggedRun r;
  r.bound_inclusive = next() != 0;
  r.bound = Ordinal::decode(payload, pos);
  const std::uint64_t n = next();
  for (std::uint64_t i = 0; i < n; ++i) {
    TaggedRun::Step step;
    step.tag = Ordinal::decode(payload, pos);
    const std::uint64_t len = next();
    for (std::uint64_t j = 0; j < len; ++j) step.guess.payload.push_back(next());
    r.steps.push_back(std::move(step));
  }
  if (pos != payload.size()) throw std::invalid_argument("trailing run payload");
  return r;
}

PlainRun flatten(const PlainRun& outer) {
  PlainRun out;
  for (std::size_t i = 0; i < outer.steps.size(); ++i) {
    // A repeated outer guess is the same inner run still converging; only a
    // changed guess switches to a new inner trace.
    if (i > 0 && outer.steps[i] == outer.steps[i - 1]) continue;
    TaggedRun inner;
    try {
      inner = deserialize_run(outer.steps[i].payload);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("outer step " + std::to_string(i) + ": " +
                                  e.what());
    }
    const RunVerdict v = validate_run(inner);
    if (!v.valid)
      throw std::invalid_argument("outer step " + std::to_string(i) +
                                  ": inner run invalid: " + v.reason);
    for (const auto& step : inner.steps) out.steps.push_back(step.guess);
  }
  return out;
}

Sigma2Verdict sigma2_verdict(const PlainRun& r, std::size_t horizon) {
  if (horizon == 0 || r.steps.size() < horizon)
    return {Sigma2Status::undecided, 0};
  std::size_t last_change = 0;
  for (std::size_t i = 1; i < horizon; ++i) {
    if (!(r.steps[i] == r.steps[i - 1])) last_change = i;
  }
  if (last_change + 1 == horizon && horizon > 1)
    return {Sigma2Status::contradiction_free, 0};
  if (horizon == 1) return {Sigma2Status::contradiction_free, 0};
  return {Sigma2Status::converged_by, last_change};
}

}  // namespace mindchange
