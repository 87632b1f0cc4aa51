#pragma once

#include <string>
#include <string_view>

#include "mindchange/groebner.hpp"
#include "mindchange/runs.hpp"
#include "mindchange/space.hpp"

namespace mindchange::io {

// Space files: {"points": ["a","b"], "opens": [[],[1],[0,1]]} with each open
// a sorted array of point indices. Maps: {"map": [codomain indices]}. Runs:
// {"bound": "<ordinal>", "bound_inclusive": bool,
//  "steps": [{"tag": "<ordinal>", "guess": [naturals]}]}; plain runs keep
// only the steps array and omit the tags.

std::string space_to_json(const FiniteSpace& s);
FiniteSpace space_from_json(std::string_view text);

std::string map_to_json(const PointMap& f);
PointMap map_from_json(std::string_view text, FiniteSpace domain,
                       FiniteSpace codomain);

std::string run_to_json(const TaggedRun& r);
TaggedRun run_from_json(std::string_view text);

std::string plain_run_to_json(const PlainRun& r);
PlainRun plain_run_from_json(std::string_view text);

// Enumeration files: one polynomial per line ('0' lines allowed, blank lines
// skipped). Parse errors carry the one-based line number.
std::string enumeration_to_text(const IdealEnumeration& e,
                                const MonomialOrder& order);
IdealEnumeration enumeration_from_text(std::string_view text, int nvars);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace mindchange::io
