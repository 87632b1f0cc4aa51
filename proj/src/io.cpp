#include "mindchange/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mindchange::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

Mask mask_from_indices(const json& arr, int n, const char* what) {
  if (!arr.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  Mask m = 0;
  for (const auto& v : arr) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= static_cast<std::uint64_t>(n))
      throw std::invalid_argument(std::string(what) + " holds a bad point index");
    m |= Mask{1} << v.get<std::uint64_t>();
  }
  return m;
}

json indices_from_mask(Mask m, int n) {
  json arr = json::array();
  for (int x = 0; x < n; ++x) {
    if ((m >> x) & 1u) arr.push_back(x);
  }
  return arr;
}

}  // namespace

std::string space_to_json(const FiniteSpace& s) {
  json j;
  j["points"] = s.labels();
  json opens = json::array();
  for (Mask o : s.opens()) opens.push_back(indices_from_mask(o, s.point_count()));
  j["opens"] = opens;
  return j.dump(2) + "\n";
}

FiniteSpace space_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.contains("points") || !j["points"].is_array())
    throw std::invalid_argument("space file needs a \"points\" array");
  if (!j.contains("opens") || !j["opens"].is_array())
    throw std::invalid_argument("space file needs an \"opens\" array");
  std::vector<std::string> labels;
  for (const auto& p : j["points"]) {
    if (!p.is_string()) throw std::invalid_argument("point labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  std::vector<Mask> opens;
  for (const auto& o : j["opens"]) {
    opens.push_back(mask_from_indices(o, static_cast<int>(labels.size()), "open"));
  }
  return FiniteSpace::from_opens(std::move(labels), std::move(opens));
}

std::string map_to_json(const PointMap& f) {
  json j;
  j["map"] = f.assignment;
  return j.dump(2) + "\n";
}

PointMap map_from_json(std::string_view text, FiniteSpace domain,
                       FiniteSpace codomain) {
  const json j = parse_json(text);
  if (!j.contains("map") || !j["map"].is_array())
    throw std::invalid_argument("map file needs a \"map\" array");
  std::vector<int> assignment;
  for (const auto& v : j["map"]) {
    if (!v.is_number_unsigned())
      throw std::invalid_argument("map entries must be codomain point indices");
    assignment.push_back(v.get<int>());
  }
  return make_point_map(std::move(domain), std::move(codomain),
                        std::move(assignment));
}

std::string run_to_json(const TaggedRun& r) {
  json j;
  j["bound"] = r.bound.str();
  j["bound_inclusive"] = r.bound_inclusive;
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back(json{{"tag", s.tag.str()}, {"guess", s.guess.payload}});
  }
  j["steps"] = steps;
  return j.dump(2) + "\n";
}

TaggedRun run_from_json(std::string_view text) {
  const json j = parse_json(text);
  TaggedRun r;
  if (!j.contains("bound") || !j["bound"].is_string())
    throw std::invalid_argument("run file needs a \"bound\" string");
  r.bound = Ordinal::parse(j["bound"].get<std::string>());
  r.bound_inclusive = j.value("bound_inclusive", false);
  if (!j.contains("steps") || !j["steps"].is_array())
    throw std::invalid_argument("run file needs a \"steps\" array");
  for (const auto& s : j["steps"]) {
    if (!s.contains("tag") || !s["tag"].is_string())
      throw std::invalid_argument("run step needs a \"tag\" string");
    TaggedRun::Step step;
    step.tag = Ordinal::parse(s["tag"].get<std::string>());
    if (!s.contains("guess") || !s["guess"].is_array())
      throw std::invalid_argument("run step needs a \"guess\" array");
    for (const auto& v : s["guess"]) step.guess.payload.push_back(v.get<std::uint64_t>());
    r.steps.push_back(std::move(step));
  }
  return r;
}

std::string plain_run_to_json(const PlainRun& r) {
  json steps = json::array();
  for (const auto& g : r.steps) steps.push_back(json{{"guess", g.payload}});
  return json{{"steps", steps}}.dump(2) + "\n";
}

PlainRun plain_run_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.contains("steps") || !j["steps"].is_array())
    throw std::invalid_argument("run file needs a \"steps\" array");
  PlainRun r;
  for (const auto& s : j["steps"]) {
    if (!s.contains("guess") || !s["guess"].is_array())
      throw std::invalid_argument("run step needs a \"guess\" array");
    Guess g;
    for (const auto& v : s["guess"]) g.payload.push_back(v.get<std::uint64_t>());
    r.steps.push_back(std::move(g));
  }
  return r;
}

std::string enumeration_to_text(const IdealEnumeration& e,
                                const MonomialOrder& order) {
  std::string out;
  for (const auto& p : e.items) out += p.str(order) + "\n";
  return out;
}

IdealEnumeration enumeration_from_text(std::string_view text, int nvars) {
  IdealEnumeration e;
  e.nvars = nvars;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (blank) {
      if (end == text.size()) break;
      continue;
    }
    try {
      e.items.push_back(Polynomial::parse(line, nvars));
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " +
                                  err.what());
    }
    if (end == text.size()) break;
  }
  return e;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

}  // namespace mindchange::io
