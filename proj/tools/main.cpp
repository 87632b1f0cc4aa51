#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "mindchange/groebner.hpp"
#include "mindchange/hierarchy.hpp"
#include "mindchange/io.hpp"
#include "mindchange/machines.hpp"
#include "mindchange/runs.hpp"
#include "mindchange/space.hpp"
#include "mindchange/sweep.hpp"

using namespace mindchange;
using nlohmann::json;

namespace {

std::string mask_labels(const FiniteSpace& s, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int x = 0; x < s.point_count(); ++x) {
    if (!((m >> x) & 1u)) continue;
    if (!first) out += ", ";
    out += s.labels()[static_cast<std::size_t>(x)];
    first = false;
  }
  return out + "}";
}

json mask_indices(Mask m, int n) {
  json arr = json::array();
  for (int x = 0; x < n; ++x) {
    if ((m >> x) & 1u) arr.push_back(x);
  }
  return arr;
}

FiniteSpace parse_codomain(const std::string& spec) {
  if (spec == "S" || spec == "s") return FiniteSpace::sierpinski();
  if (!spec.empty() && spec.front() == '@')
    return io::space_from_json(io::read_file(spec.substr(1)));
  if (spec.rfind("flat", 0) == 0)
    return FiniteSpace::flat(std::stoi(spec.substr(4)));
  return FiniteSpace::discrete(std::stoi(spec));
}

MonomialOrder parse_order(const std::string& name) {
  if (name == "lex") return MonomialOrder::lex();
  if (name == "grlex") return MonomialOrder::grlex();
  if (name == "grevlex") return MonomialOrder::grevlex();
  throw std::invalid_argument("unknown monomial order " + name);
}

std::vector<Ordinal> parse_ordinal_list(const std::string& csv) {
  std::vector<Ordinal> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string::npos) end = csv.size();
    std::string item = csv.substr(start, end - start);
    std::erase_if(item, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!item.empty()) out.push_back(Ordinal::parse(item));
    if (end == csv.size()) break;
    start = end + 1;
  }
  return out;
}

int cmd_analyze_level(const std::string& space_path, const std::string& map_path,
                      const std::string& codomain_spec, bool as_json) {
  const FiniteSpace s = io::space_from_json(io::read_file(space_path));
  const FiniteSpace cod = parse_codomain(codomain_spec);
  const PointMap f = io::map_from_json(io::read_file(map_path), s, cod);

  const LevelChain chain = level_chain(f);
  const Decomposition d = canonical_decomposition(f);
  const int brute = min_piecewise_level(f);
  const bool match = chain.level == brute;

  if (as_json) {
    json j;
    j["level"] = chain.level;
    j["stages"] = json::array();
    for (Mask st : chain.stages) j["stages"].push_back(mask_indices(st, s.point_count()));
    j["decomposition"] = json::array();
    for (Mask u : d.opens) j["decomposition"].push_back(mask_indices(u, s.point_count()));
    j["min_piecewise_level"] = brute;
    j["match"] = match;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Lev(f) = " << chain.level << "\n";
    std::cout << "stages:";
    for (Mask st : chain.stages) std::cout << " " << mask_labels(s, st);
    std::cout << "\ncanonical decomposition:";
    for (Mask u : d.opens) std::cout << " " << mask_labels(s, u);
    std::cout << "\nbrute-force minimum = " << brute << "\n";
    std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  return match ? 0 : 1;
}

int cmd_validate_run(const std::string& run_path, bool as_json) {
  const TaggedRun r = io::run_from_json(io::read_file(run_path));
  const RunVerdict v = validate_run(r);
  if (as_json) {
    json j;
    j["valid"] = v.valid;
    if (v.valid) {
      j["limit"] = v.limit.payload;
      j["stabilization"] = v.stabilization;
      j["mind_changes"] = mind_changes(r);
    } else {
      j["reason"] = v.reason;
      j["index"] = v.index;
    }
    std::cout << j.dump(2) << "\n";
  } else if (v.valid) {
    std::cout << "valid run: " << r.steps.size() << " steps, "
              << mind_changes(r) << " mind changes, stabilized at index "
              << v.stabilization << "\n";
  } else {
    std::cout << "invalid run: " << v.reason << " at step " << v.index << "\n";
  }
  return v.valid ? 0 : 1;
}

int cmd_learn_groebner(const std::string& enum_path, int nvars,
                       const std::string& order_name, bool bound_inclusive,
                       const std::string& run_out, bool as_json) {
  const MonomialOrder order = parse_order(order_name);
  const IdealEnumeration e =
      io::enumeration_from_text(io::read_file(enum_path), nvars);
  const auto [run, basis] = run_learner(e, order, bound_inclusive);
  const auto oracle = buchberger(e.items, order);
  const bool match = basis == oracle;

  if (!run_out.empty()) io::write_file(run_out, io::run_to_json(run));

  std::vector<std::string> tag_texts;
  for (const auto& step : run.steps) tag_texts.push_back(step.tag.str());

  if (as_json) {
    json j;
    j["final_basis"] = basis_text(basis, order);
    j["mind_changes"] = mind_changes(run);
    j["max_tag"] = run.steps.front().tag.str();
    j["tags"] = tag_texts;
    j["oracle_match"] = match;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "final basis: " << basis_text(basis, order) << "\n";
    std::cout << "mind changes: " << mind_changes(run) << "\n";
    std::cout << "max tag: " << run.steps.front().tag.str() << "\n";
    std::cout << "tags:";
    for (const auto& t : tag_texts) std::cout << " " << t;
    std::cout << "\n" << (match ? "ORACLE MATCH" : "ORACLE MISMATCH") << "\n";
  }
  return match ? 0 : 1;
}

int cmd_adversary(int nvars, const std::string& targets_csv,
                  const std::string& order_name, const std::string& out_path,
                  bool as_json) {
  const MonomialOrder order = parse_order(order_name);
  const std::vector<Ordinal> targets = parse_ordinal_list(targets_csv);
  const IdealEnumeration e = adversary(targets, nvars);
  const std::string text = io::enumeration_to_text(e, order);
  if (!out_path.empty()) io::write_file(out_path, text);

  // Round trip: the learner must reproduce the targets exactly.
  const auto [run, basis] = run_learner(e, order);
  const std::vector<Ordinal> change_tags = change_point_tags(run);
  const bool match = change_tags == targets;

  if (as_json) {
    json j;
    j["items"] = json::array();
    for (const auto& p : e.items) j["items"].push_back(p.str(order));
    j["round_trip"] = match;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
    std::cout << (match ? "ROUND TRIP OK" : "ROUND TRIP FAILED") << "\n";
  }
  return match ? 0 : 1;
}

int cmd_cb(const std::string& space_path, int horizon, int samples,
           std::uint64_t seed, bool as_json) {
  const FiniteSpace s = io::space_from_json(io::read_file(space_path));
  const CBChain chain = cb_chain(s);
  const int h =
      horizon > 0 ? horizon : static_cast<int>(s.opens().size());

  int max_changes = 0;
  bool sound = true;
  for (int x = 0; x < s.point_count(); ++x) {
    for (const auto& name : canonical_names(s, x, h, samples,
                                            seed + static_cast<std::uint64_t>(x))) {
      const MachineReport report = cb_identifier(s, name);
      max_changes = std::max(max_changes, mind_changes(report.run));
      if (!validate_run(report.run).valid ||
          !(report.converged_to == Guess::point(x)) ||
          mind_changes(report.run) > chain.rank)
        sound = false;
    }
  }

  if (as_json) {
    json j;
    j["rank"] = chain.rank;
    j["derivatives"] = json::array();
    for (Mask dset : chain.derivatives)
      j["derivatives"].push_back(mask_indices(dset, s.point_count()));
    j["kernel"] = mask_indices(chain.kernel, s.point_count());
    j["max_mind_changes"] = max_changes;
    j["identifier_sound"] = sound;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "rank = " << chain.rank << "\n";
    std::cout << "derivatives:";
    for (Mask dset : chain.derivatives) std::cout << " " << mask_labels(s, dset);
    std::cout << "\nkernel = " << mask_labels(s, chain.kernel) << "\n";
    std::cout << "identifier: max mind changes " << max_changes
              << " (rank bound " << chain.rank << ") "
              << (sound ? "OK" : "FAILED") << "\n";
  }
  return sound ? 0 : 1;
}

int cmd_diff_hierarchy(const std::string& space_path, const std::string& set_csv,
                       int alpha, bool as_json) {
  const FiniteSpace s = io::space_from_json(io::read_file(space_path));
  Mask a = 0;
  for (const auto& tok : [&] {
         std::vector<std::string> toks;
         std::size_t start = 0;
         while (start <= set_csv.size()) {
           std::size_t end = set_csv.find(',', start);
           if (end == std::string::npos) end = set_csv.size();
           if (end > start) toks.push_back(set_csv.substr(start, end - start));
           if (end == set_csv.size()) break;
           start = end + 1;
         }
         return toks;
       }()) {
    const int idx = std::stoi(tok);
    if (idx < 0 || idx >= s.point_count())
      throw std::invalid_argument("point index out of range: " + tok);
    a |= Mask{1} << idx;
  }
  const auto witness = sigma_minus1_witness(s, a, alpha);
  if (as_json) {
    json j;
    j["member"] = witness.has_value();
    if (witness) {
      j["witness"] = json::array();
      for (Mask u : *witness) j["witness"].push_back(mask_indices(u, s.point_count()));
    }
    std::cout << j.dump(2) << "\n";
  } else if (witness) {
    std::cout << mask_labels(s, a) << " is in level " << alpha
              << " of the difference hierarchy\nwitness:";
    for (Mask u : *witness) std::cout << " " << mask_labels(s, u);
    std::cout << "\n";
  } else {
    std::cout << mask_labels(s, a) << " is NOT in level " << alpha
              << " of the difference hierarchy\n";
  }
  return witness ? 0 : 1;
}

int cmd_sweep(int max_points, const std::string& codomains, int max_alpha,
              int jobs, int samples, std::uint64_t seed,
              const std::string& replay_out, bool as_json) {
  SweepOptions options;
  options.max_points = max_points;
  options.codomain_two = codomains.find('2') != std::string::npos;
  options.codomain_sierpinski = codomains.find('S') != std::string::npos ||
                                codomains.find('s') != std::string::npos;
  options.codomain_three = codomains.find('3') != std::string::npos;
  options.max_alpha = max_alpha;
  options.jobs = jobs;
  options.samples = samples;
  options.seed = seed;

  const SweepResult r = run_sweep(options);
  if (as_json) {
    json j;
    j["spaces"] = r.spaces;
    j["maps"] = r.maps;
    j["level_checks"] = r.level_checks;
    j["preimage_checks"] = r.preimage_checks;
    j["simulated_runs"] = r.simulated_runs;
    j["failures"] = {{"level", r.level_failures},
                     {"bound", r.bound_failures},
                     {"preimage", r.preimage_failures},
                     {"machine", r.machine_failures}};
    j["seconds"] = r.seconds;
    j["ok"] = r.ok();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "spaces: " << r.spaces << ", maps: " << r.maps
              << ", seed: " << seed << "\n";
    std::cout << "level equality checks: " << r.level_checks << " ("
              << r.level_failures << " failures)\n";
    std::cout << "level bound failures: " << r.bound_failures << "\n";
    std::cout << "preimage equivalence checks: " << r.preimage_checks << " ("
              << r.preimage_failures << " failures)\n";
    std::cout << "simulated runs: " << r.simulated_runs << " ("
              << r.machine_failures << " failures)\n";
    std::cout << "elapsed: " << r.seconds << " s\n";
    std::cout << (r.ok() ? "SWEEP PASSED" : "SWEEP FAILED") << "\n";
  }
  if (!r.ok() && r.first_failure) {
    const auto& fail = *r.first_failure;
    json replay;
    replay["check"] = fail.check;
    replay["detail"] = fail.detail;
    replay["space"] = json::parse(io::space_to_json(fail.space));
    replay["codomain"] = fail.codomain;
    replay["map"] = fail.assignment;
    const std::string path = replay_out.empty() ? "counterexample.json" : replay_out;
    io::write_file(path, replay.dump(2) + "\n");
    std::cerr << "counterexample written to " << path << "\n";
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for mind-change bounded computation on finite spaces"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string space_path, map_path, run_path, enum_path, out_path;
  std::string codomain = "2", order_name = "grevlex", targets, set_csv, codomains = "2,S,3";
  std::string bound_inclusive = "on";
  int nvars = 1, alpha = 2, horizon = 0, max_points = 3, max_alpha = 4, jobs = 1,
      samples = 2;
  std::uint64_t seed = 1;

  auto* analyze = app.add_subcommand("analyze-level",
                                     "level chain, decomposition and the exhaustive cross-check");
  analyze->add_option("space", space_path, "space JSON file")->required();
  analyze->add_option("map", map_path, "map JSON file")->required();
  analyze->add_option("--codomain", codomain,
                      "2|3|S|flatK|@space.json (default 2)");

  auto* validate = app.add_subcommand("validate-run", "check a tagged run file");
  validate->add_option("run", run_path, "run JSON file")->required();

  auto* learn = app.add_subcommand("learn-groebner",
                                   "run the online basis learner over an enumeration");
  learn->add_option("enumeration", enum_path, "one polynomial per line")->required();
  learn->add_option("--n", nvars, "variable count")->required();
  learn->add_option("--order", order_name, "lex|grlex|grevlex");
  learn->add_option("--bound-inclusive", bound_inclusive, "on|off");
  learn->add_option("--run-out", out_path, "write the emitted run here");

  auto* adv = app.add_subcommand("adversary",
                                 "build an enumeration forcing given change-point tags");
  adv->add_option("--n", nvars, "variable count (1 or 2)")->required();
  adv->add_option("--targets", targets, "comma-separated ordinals, strictly decreasing")
      ->required();
  adv->add_option("--order", order_name, "lex|grlex|grevlex");
  adv->add_option("--out", out_path, "write the enumeration here");

  auto* cb = app.add_subcommand("cb", "derived-set chain and the point identifier");
  cb->add_option("space", space_path, "space JSON file")->required();
  cb->add_option("--horizon", horizon, "name length (default: number of opens)");
  cb->add_option("--samples", samples, "sampled names per point");
  cb->add_option("--seed", seed, "sampler seed");

  auto* diff = app.add_subcommand("diff-hierarchy",
                                  "difference hierarchy membership with witness");
  diff->add_option("space", space_path, "space JSON file")->required();
  diff->add_option("--set", set_csv, "comma-separated point indices")->required();
  diff->add_option("--alpha", alpha, "hierarchy level")->required();

  auto* sweep = app.add_subcommand("sweep", "exhaustive corpus verification");
  sweep->add_option("--max-points", max_points, "largest space size (<= 4)");
  sweep->add_option("--codomains", codomains, "subset of 2,S,3");
  sweep->add_option("--alpha", max_alpha, "difference hierarchy depth");
  sweep->add_option("--jobs", jobs, "worker threads");
  sweep->add_option("--samples", samples, "sampled names per point");
  sweep->add_option("--seed", seed, "sampler seed");
  sweep->add_option("--replay-out", out_path, "counterexample file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      return app.exit(e);
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed())
      return cmd_analyze_level(space_path, map_path, codomain, as_json);
    if (validate->parsed()) return cmd_validate_run(run_path, as_json);
    if (learn->parsed())
      return cmd_learn_groebner(enum_path, nvars, order_name,
                                bound_inclusive != "off", out_path, as_json);
    if (adv->parsed())
      return cmd_adversary(nvars, targets, order_name, out_path, as_json);
    if (cb->parsed()) return cmd_cb(space_path, horizon, samples, seed, as_json);
    if (diff->parsed())
      return cmd_diff_hierarchy(space_path, set_csv, alpha, as_json);
    if (sweep->parsed())
      return cmd_sweep(max_points, codomains, max_alpha, jobs, samples, seed,
                       out_path, as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
