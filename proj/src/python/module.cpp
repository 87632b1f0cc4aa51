#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mindchange/groebner.hpp"
#include "mindchange/hierarchy.hpp"
#include "mindchange/io.hpp"
#include "mindchange/machines.hpp"
#include "mindchange/runs.hpp"
#include "mindchange/space.hpp"
#include "mindchange/sweep.hpp"

namespace py = pybind11;
using namespace mindchange;

namespace {

Mask mask_from_list(const FiniteSpace& s, const std::vector<int>& points) {
  Mask m = 0;
  for (int x : points) {
    if (x < 0 || x >= s.point_count())
      throw std::invalid_argument("point index out of range");
    m |= Mask{1} << x;
  }
  return m;
}

std::vector<int> list_from_mask(Mask m, int n) {
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    if ((m >> x) & 1u) out.push_back(x);
  }
  return out;
}

MonomialOrder order_from_name(const std::string& name) {
  if (name == "lex") return MonomialOrder::lex();
  if (name == "grlex") return MonomialOrder::grlex();
  if (name == "grevlex") return MonomialOrder::grevlex();
  throw std::invalid_argument("unknown monomial order " + name);
}

std::vector<Monomial> monomials_from_tuples(
    const std::vector<std::vector<std::uint32_t>>& ms) {
  return {ms.begin(), ms.end()};
}

}  // namespace

PYBIND11_MODULE(_mindchange, m) {
  m.doc() = "Mind-change bounded computation on finite spaces: ordinal-tagged "
            "runs, discontinuity levels, name-stream machines and the online "
            "basis learner";

  py::class_<Ordinal>(m, "Ordinal")
      .def_static("parse", &Ordinal::parse, py::arg("text"))
      .def_static("natural", &Ordinal::natural, py::arg("k"))
      .def_static("omega", &Ordinal::omega)
      .def_static("omega_pow",
                  [](const Ordinal& e, std::uint64_t c) {
                    return Ordinal::omega_pow(e, c);
                  },
                  py::arg("exponent"), py::arg("coefficient") = 1)
      .def("is_natural", &Ordinal::is_natural)
      .def("as_natural", &Ordinal::as_natural)
      .def("__str__", &Ordinal::str)
      .def("__repr__",
           [](const Ordinal& o) { return "Ordinal('" + o.str() + "')"; })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self);

  m.def("validate_strictly_decreasing",
        [](const std::vector<Ordinal>& seq) -> py::object {
          auto v = validate_strictly_decreasing(seq);
          if (v) return py::int_(*v);
          return py::none();
        },
        "Index of the first non-descending entry, or None when strictly "
        "decreasing",
        py::arg("sequence"));

  py::class_<FiniteSpace>(m, "FiniteSpace")
      .def_static("build",
                  [](std::vector<std::string> labels,
                     const std::vector<std::vector<int>>& subbasis) {
                    FiniteSpace probe;
                    std::vector<Mask> masks;
                    const int n = static_cast<int>(labels.size());
                    for (const auto& open : subbasis) {
                      Mask mm = 0;
                      for (int x : open) {
                        if (x < 0 || x >= n)
                          throw std::invalid_argument("point index out of range");
                        mm |= Mask{1} << x;
                      }
                      masks.push_back(mm);
                    }
                    return FiniteSpace::build(std::move(labels), masks);
                  },
                  py::arg("labels"), py::arg("subbasis"))
      .def_static("sierpinski", &FiniteSpace::sierpinski)
      .def_static("discrete", &FiniteSpace::discrete, py::arg("k"))
      .def_static("flat", &FiniteSpace::flat, py::arg("k"))
      .def_property_readonly("points", &FiniteSpace::labels)
      .def_property_readonly("opens",
                             [](const FiniteSpace& s) {
                               std::vector<std::vector<int>> out;
                               for (Mask o : s.opens())
                                 out.push_back(list_from_mask(o, s.point_count()));
                               return out;
                             })
      .def("min_open",
           [](const FiniteSpace& s, int x) {
             return list_from_mask(s.min_open(x), s.point_count());
           },
           py::arg("point"))
      .def("closure",
           [](const FiniteSpace& s, const std::vector<int>& a) {
             return list_from_mask(s.closure(mask_from_list(s, a)),
                                   s.point_count());
           },
           py::arg("subset"))
      .def("leq", &FiniteSpace::leq, py::arg("x"), py::arg("y"))
      .def("__len__", &FiniteSpace::point_count)
      .def(py::self == py::self);

  m.def("enumerate_spaces", &enumerate_spaces, py::arg("n"), py::arg("cap") = 4,
        "Every labeled T0 topology on exactly n points");

  py::class_<PointMap>(m, "PointMap")
      .def_property_readonly("domain",
                             [](const PointMap& f) { return f.domain; })
      .def_property_readonly("codomain",
                             [](const PointMap& f) { return f.codomain; })
      .def_property_readonly("assignment",
                             [](const PointMap& f) { return f.assignment; })
      .def("__call__", [](const PointMap& f, int x) { return f(x); });

  m.def("point_map", &make_point_map, py::arg("domain"), py::arg("codomain"),
        py::arg("assignment"));
  m.def("is_continuous_at", &is_continuous_at, py::arg("f"), py::arg("x"));
  m.def("is_continuous", &is_continuous, py::arg("f"));
  m.def("converges",
        [](const FiniteSpace& s, const std::vector<int>& entries, int limit,
           std::size_t eventual) {
          return converges(s, ConvergentSequence{entries, limit, eventual});
        },
        py::arg("space"), py::arg("entries"), py::arg("limit"),
        py::arg("eventual") = 0);

  py::class_<LevelChain>(m, "LevelChain")
      .def_readonly("level", &LevelChain::level)
      .def_property_readonly("stages", [](const LevelChain& c) {
        std::vector<std::vector<int>> out;
        for (Mask st : c.stages) out.push_back(list_from_mask(st, 32));
        return out;
      });

  m.def("level_chain", &level_chain, py::arg("f"));
  m.def("min_piecewise_level", &min_piecewise_level, py::arg("f"));

  py::class_<Decomposition>(m, "Decomposition")
      .def(py::init([](const FiniteSpace& s,
                       const std::vector<std::vector<int>>& opens) {
             Decomposition d;
             for (const auto& open : opens)
               d.opens.push_back(mask_from_list(s, open));
             return d;
           }),
           py::arg("space"), py::arg("opens"))
      .def("opens", [](const Decomposition& d) {
        std::vector<std::vector<int>> out;
        for (Mask u : d.opens) out.push_back(list_from_mask(u, 32));
        return out;
      });

  m.def("canonical_decomposition", &canonical_decomposition, py::arg("f"));
  m.def("is_valid_decomposition", &is_valid_decomposition, py::arg("f"),
        py::arg("decomposition"));
  m.def("difference_set",
        [](const FiniteSpace& s, const std::vector<std::vector<int>>& sets) {
          DiffSetSpec spec;
          for (const auto& a : sets) spec.sets.push_back(mask_from_list(s, a));
          return list_from_mask(difference_set(spec), s.point_count());
        },
        py::arg("space"), py::arg("sets"));
  m.def("in_sigma_minus1",
        [](const FiniteSpace& s, const std::vector<int>& a, int alpha) {
          return in_sigma_minus1(s, mask_from_list(s, a), alpha);
        },
        py::arg("space"), py::arg("subset"), py::arg("alpha"));
  m.def("sigma_minus1_witness",
        [](const FiniteSpace& s, const std::vector<int>& a,
           int alpha) -> py::object {
          auto w = sigma_minus1_witness(s, mask_from_list(s, a), alpha);
          if (!w) return py::none();
          std::vector<std::vector<int>> out;
          for (Mask u : *w) out.push_back(list_from_mask(u, s.point_count()));
          return py::cast(out);
        },
        py::arg("space"), py::arg("subset"), py::arg("alpha"));

  py::class_<CBChain>(m, "CBChain")
      .def_readonly("rank", &CBChain::rank)
      .def_property_readonly("kernel",
                             [](const CBChain& c) { return list_from_mask(c.kernel, 32); })
      .def_property_readonly("derivatives", [](const CBChain& c) {
        std::vector<std::vector<int>> out;
        for (Mask d : c.derivatives) out.push_back(list_from_mask(d, 32));
        return out;
      });
  m.def("cb_chain", &cb_chain, py::arg("space"));

  py::class_<Guess>(m, "Guess")
      .def(py::init([](std::vector<std::uint64_t> payload) {
             return Guess{std::move(payload)};
           }),
           py::arg("payload"))
      .def_static("point", &Guess::point, py::arg("index"))
      .def_readonly("payload", &Guess::payload)
      .def(py::self == py::self);

  py::class_<TaggedRun>(m, "TaggedRun")
      .def(py::init([](const Ordinal& bound, bool bound_inclusive,
                       const std::vector<std::pair<Ordinal, std::vector<std::uint64_t>>>&
                           steps) {
             TaggedRun r;
             r.bound = bound;
             r.bound_inclusive = bound_inclusive;
             for (const auto& [tag, payload] : steps)
               r.steps.push_back({tag, Guess{payload}});
             return r;
           }),
           py::arg("bound"), py::arg("bound_inclusive"), py::arg("steps"))
      .def_property_readonly("bound", [](const TaggedRun& r) { return r.bound; })
      .def_readonly("bound_inclusive", &TaggedRun::bound_inclusive)
      .def_property_readonly("steps", [](const TaggedRun& r) {
        std::vector<std::pair<Ordinal, std::vector<std::uint64_t>>> out;
        for (const auto& s : r.steps) out.emplace_back(s.tag, s.guess.payload);
        return out;
      });

  py::class_<PlainRun>(m, "PlainRun")
      .def(py::init([](const std::vector<std::vector<std::uint64_t>>& steps) {
             PlainRun r;
             for (const auto& p : steps) r.steps.push_back(Guess{p});
             return r;
           }),
           py::arg("steps"))
      .def_property_readonly("steps", [](const PlainRun& r) {
        std::vector<std::vector<std::uint64_t>> out;
        for (const auto& g : r.steps) out.push_back(g.payload);
        return out;
      });

  py::class_<RunVerdict>(m, "RunVerdict")
      .def_readonly("valid", &RunVerdict::valid)
      .def_readonly("limit", &RunVerdict::limit)
      .def_readonly("stabilization", &RunVerdict::stabilization)
      .def_readonly("reason", &RunVerdict::reason)
      .def_readonly("index", &RunVerdict::index);

  m.def("validate_run", &validate_run, py::arg("run"));
  m.def("mind_changes",
        py::overload_cast<const TaggedRun&>(&mind_changes), py::arg("run"));
  m.def("plain_mind_changes",
        py::overload_cast<const PlainRun&>(&mind_changes), py::arg("run"));
  m.def("change_point_tags", &change_point_tags, py::arg("run"));
  m.def("join_encode", &join_encode, py::arg("component"), py::arg("run"));
  m.def("join_decode", &join_decode, py::arg("run"));
  m.def("meet_encode", &meet_encode, py::arg("runs"));
  m.def("meet_limit", &meet_limit, py::arg("run"));
  m.def("embed", &embed, py::arg("run"), py::arg("new_bound"));
  m.def("serialize_run", &serialize_run, py::arg("run"));
  m.def("deserialize_run", &deserialize_run, py::arg("payload"));
  m.def("flatten", &flatten, py::arg("outer"));
  m.def("sigma2_verdict",
        [](const PlainRun& r, std::size_t horizon) {
          const auto v = sigma2_verdict(r, horizon);
          const char* status =
              v.status == Sigma2Status::converged_by
                  ? "converged_by"
                  : v.status == Sigma2Status::undecided ? "undecided"
                                                        : "contradiction_free";
          return std::make_pair(std::string(status), v.index);
        },
        py::arg("run"), py::arg("horizon"));

  py::class_<NamePrefix>(m, "NamePrefix")
      .def(py::init([](FiniteSpace s, std::vector<int> listed) {
             return NamePrefix{std::move(s), std::move(listed)};
           }),
           py::arg("space"), py::arg("listed"))
      .def_readonly("listed", &NamePrefix::listed);

  m.def("canonical_names", &canonical_names, py::arg("space"), py::arg("point"),
        py::arg("horizon"), py::arg("samples") = 0, py::arg("seed") = 0);

  py::class_<RefutablePiece>(m, "RefutablePiece")
      .def_property_readonly("membership", [](const RefutablePiece& p) {
        return list_from_mask(p.membership, 32);
      })
      .def_property_readonly("refutation", [](const RefutablePiece& p) {
        return list_from_mask(p.refutation, 32);
      })
      .def_readonly("guess_table", &RefutablePiece::guess_table);

  m.def("level_pieces", &level_pieces, py::arg("f"));
  m.def("make_refutable_piece",
        [](const FiniteSpace& s, const std::vector<int>& membership,
           const std::vector<int>& refutation, std::vector<int> guess_table) {
          return make_refutable_piece(s, mask_from_list(s, membership),
                                      mask_from_list(s, refutation),
                                      std::move(guess_table), s.full_mask());
        },
        py::arg("space"), py::arg("membership"), py::arg("refutation"),
        py::arg("guess_table"));

  py::class_<MachineReport>(m, "MachineReport")
      .def_readonly("run", &MachineReport::run)
      .def_readonly("converged_to", &MachineReport::converged_to);

  m.def("glue_machine", &glue_machine, py::arg("pieces"), py::arg("name"));
  m.def("ordinal_counter_machine", &ordinal_counter_machine,
        py::arg("decomposition"), py::arg("f"), py::arg("name"));
  m.def("cb_identifier", &cb_identifier, py::arg("space"), py::arg("name"));

  py::class_<SimulationSummary>(m, "SimulationSummary")
      .def_readonly("ok", &SimulationSummary::ok)
      .def_readonly("level", &SimulationSummary::level)
      .def_readonly("failures", &SimulationSummary::failures);

  m.def("simulate_all", &simulate_all, py::arg("space"), py::arg("f"),
        py::arg("horizon"), py::arg("samples") = 2, py::arg("seed") = 1);

  py::class_<Polynomial>(m, "Polynomial")
      .def_static("parse", &Polynomial::parse, py::arg("text"), py::arg("nvars"))
      .def_property_readonly("nvars", &Polynomial::nvars)
      .def("is_zero", &Polynomial::is_zero)
      .def("__str__", [](const Polynomial& p) { return p.str(); })
      .def(py::self == py::self);

  m.def("reduce",
        [](const Polynomial& p, const std::vector<Polynomial>& basis,
           const std::string& order) {
          return reduce(p, basis, order_from_name(order));
        },
        py::arg("p"), py::arg("basis"), py::arg("order") = "grevlex");
  m.def("buchberger",
        [](std::vector<Polynomial> gens, const std::string& order) {
          return buchberger(std::move(gens), order_from_name(order));
        },
        py::arg("generators"), py::arg("order") = "grevlex");
  m.def("staircase_tag",
        [](const std::vector<std::vector<std::uint32_t>>& lms, int nvars) {
          return staircase_tag(monomials_from_tuples(lms), nvars);
        },
        py::arg("leading_monomials"), py::arg("nvars"));
  m.def("basis_text",
        [](const std::vector<Polynomial>& basis, const std::string& order) {
          return basis_text(basis, order_from_name(order));
        },
        py::arg("basis"), py::arg("order") = "grevlex");
  m.def("run_learner",
        [](const std::vector<Polynomial>& items, int nvars,
           const std::string& order, bool bound_inclusive) {
          return run_learner(IdealEnumeration{nvars, items},
                             order_from_name(order), bound_inclusive);
        },
        py::arg("items"), py::arg("nvars"), py::arg("order") = "grevlex",
        py::arg("bound_inclusive") = true);
  m.def("run_union_learner",
        [](const std::vector<Polynomial>& items, int nvars,
           const std::string& order) {
          return run_union_learner(IdealEnumeration{nvars, items},
                                   order_from_name(order));
        },
        py::arg("items"), py::arg("nvars"), py::arg("order") = "grevlex");
  m.def("adversary",
        [](const std::vector<Ordinal>& targets, int nvars) {
          return adversary(targets, nvars).items;
        },
        py::arg("targets"), py::arg("nvars"));

  m.def("space_to_json", &io::space_to_json, py::arg("space"));
  m.def("space_from_json", &io::space_from_json, py::arg("text"));
  m.def("run_to_json", &io::run_to_json, py::arg("run"));
  m.def("run_from_json", &io::run_from_json, py::arg("text"));
}
