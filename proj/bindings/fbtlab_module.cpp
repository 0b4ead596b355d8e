#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fbtlab/io.hpp"

namespace py = pybind11;
using namespace fbtlab;

namespace {

RootedGraph graph_from_pairs(int n, VertexId root,
                             const std::vector<std::pair<int, int>>& edges,
                             const std::vector<Weight>& vertex_weights,
                             const std::vector<Weight>& edge_weights) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.emplace_back(u, v);
  return RootedGraph(n, root, std::move(es), vertex_weights, edge_weights);
}

std::vector<std::pair<int, int>> edges_as_pairs(const std::vector<Edge>& edges) {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<Edge> edges_from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (auto [u, v] : pairs) out.emplace_back(u, v);
  return out;
}

Assignment assignment_from_bools(const std::vector<bool>& bits) {
  std::vector<std::uint8_t> b(bits.begin(), bits.end());
  return Assignment(std::move(b));
}

std::vector<bool> assignment_to_bools(const Assignment& a) {
  return std::vector<bool>(a.bits.begin(), a.bits.end());
}

py::object solution_or_none(const std::optional<DvSolution>& s) {
  if (!s) return py::none();
  return py::make_tuple(s->deleted, s->total_weight);
}

py::object de_solution_or_none(const std::optional<DeSolution>& s) {
  if (!s) return py::none();
  return py::make_tuple(edges_as_pairs(s->deleted), s->total_weight);
}

SolveOptions options_from(std::optional<std::uint64_t> node_limit) {
  SolveOptions opts;
  opts.node_limit = node_limit;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_fbtlab, m) {
  m.doc() = "exact solvers and certified reductions for deletion to full binary trees";

  py::register_exception<Error>(m, "FbtError");

  py::enum_<Variant>(m, "Variant")
      .value("DV", Variant::DV)
      .value("DE", Variant::DE);

  py::enum_<SolveStatus>(m, "SolveStatus")
      .value("SAT", SolveStatus::Sat)
      .value("UNSAT", SolveStatus::Unsat)
      .value("NODE_LIMIT", SolveStatus::NodeLimit);

  py::class_<RootedGraph>(m, "RootedGraph")
      .def(py::init(&graph_from_pairs), py::arg("vertex_count"), py::arg("root"),
           py::arg("edges"), py::arg("vertex_weights") = std::vector<Weight>{},
           py::arg("edge_weights") = std::vector<Weight>{})
      .def_property_readonly("vertex_count", &RootedGraph::vertex_count)
      .def_property_readonly("root", &RootedGraph::root)
      .def_property_readonly("edges", [](const RootedGraph& g) { return edges_as_pairs(g.edges()); })
      .def("degree", &RootedGraph::degree)
      .def("neighbors", [](const RootedGraph& g, VertexId v) { return g.neighbors(v); })
      .def("has_edge", &RootedGraph::has_edge)
      .def("vertex_weight", &RootedGraph::vertex_weight)
      .def("edge_weight",
           [](const RootedGraph& g, int u, int v) { return g.edge_weight(Edge(u, v)); })
      .def("__eq__", [](const RootedGraph& a, const RootedGraph& b) { return a == b; })
      .def("__repr__", [](const RootedGraph& g) {
        std::ostringstream out;
        out << "RootedGraph(n=" << g.vertex_count() << ", root=" << g.root()
            << ", m=" << g.edge_count() << ")";
        return out.str();
      });

  py::class_<DeletionInstance>(m, "DeletionInstance")
      .def(py::init([](RootedGraph g, Variant v, Weight k) {
             return make_instance(std::move(g), v, k);
           }),
           py::arg("graph"), py::arg("variant"), py::arg("budget"))
      .def_readonly("graph", &DeletionInstance::graph)
      .def_readonly("variant", &DeletionInstance::variant)
      .def_readonly("budget", &DeletionInstance::budget);

  py::class_<SearchStats>(m, "SearchStats")
      .def_readonly("nodes_expanded", &SearchStats::nodes_expanded)
      .def_readonly("max_depth", &SearchStats::max_depth)
      .def("rule_count",
           [](const SearchStats& s, const std::string& name) {
             for (int i = 0; i < kBranchRuleCount; ++i)
               if (branch_rule_name(static_cast<BranchRule>(i)) == name)
                 return s.rule_counts[i];
             throw Error("unknown rule " + name);
           });

  m.def("is_full_binary_tree", &is_full_binary_tree);
  m.def("component_of_root", &component_of_root);
  m.def("delete_vertices", [](const RootedGraph& g, const std::vector<VertexId>& s) {
    VertexDeletion d = delete_vertices(g, s);
    return py::make_tuple(d.graph, d.old_of_new, d.new_of_old);
  });
  m.def("delete_edges", [](const RootedGraph& g, const std::vector<std::pair<int, int>>& s) {
    return delete_edges(g, edges_from_pairs(s));
  });
  m.def("find_cycle", [](const RootedGraph& g) -> py::object {
    auto c = find_cycle(g);
    if (!c) return py::none();
    return py::cast(c->vertices);
  });

  m.def(
      "solve_dv",
      [](const DeletionInstance& inst, std::optional<std::uint64_t> node_limit, bool optimize) {
        DvSolveResult r = optimize ? optimize_dv(inst, options_from(node_limit))
                                   : solve_dv(inst, options_from(node_limit));
        return py::make_tuple(r.status, solution_or_none(r.solution), r.stats);
      },
      py::arg("instance"), py::arg("node_limit") = py::none(), py::arg("optimize") = false);
  m.def(
      "solve_de",
      [](const DeletionInstance& inst, std::optional<std::uint64_t> node_limit, bool optimize) {
        DeSolveResult r = optimize ? optimize_de(inst, options_from(node_limit))
                                   : solve_de(inst, options_from(node_limit));
        return py::make_tuple(r.status, de_solution_or_none(r.solution), r.stats);
      },
      py::arg("instance"), py::arg("node_limit") = py::none(), py::arg("optimize") = false);

  m.def("brute_force_dv",
        [](const DeletionInstance& inst) { return solution_or_none(brute_force_dv(inst)); });
  m.def("brute_force_de",
        [](const DeletionInstance& inst) { return de_solution_or_none(brute_force_de(inst)); });
  m.def("verify_dv",
        [](const DeletionInstance& inst, const std::vector<VertexId>& deleted, Weight w) {
          return verify_dv(inst, DvSolution{deleted, w});
        });
  m.def("verify_de",
        [](const DeletionInstance& inst, const std::vector<std::pair<int, int>>& deleted,
           Weight w) { return verify_de(inst, DeSolution{edges_from_pairs(deleted), w}); });

  py::class_<Cnf>(m, "Cnf")
      .def(py::init([](int n, std::vector<std::vector<int>> clauses) {
             return Cnf{n, std::move(clauses)};
           }),
           py::arg("variable_count"), py::arg("clauses"))
      .def_readonly("variable_count", &Cnf::variable_count)
      .def_readonly("clauses", &Cnf::clauses);

  py::class_<LnesInstance>(m, "LnesInstance")
      .def_readonly("p", &LnesInstance::p)
      .def_property_readonly("core",
                             [](const LnesInstance& l) {
                               std::vector<std::array<int, 4>> out;
                               for (const CoreEntry& c : l.core) out.push_back(c.shadows());
                               return out;
                             })
      .def_readonly("aux", &LnesInstance::aux);

  m.def("gen_224", &gen_224, py::arg("n"), py::arg("seed"));
  m.def("validate_224", [](const Cnf& cnf) {
    ValidationReport r = validate_224(cnf);
    return py::make_tuple(r.ok, r.violations);
  });
  m.def("check_224", [](const Cnf& cnf, const std::vector<bool>& a) {
    return check_224(cnf, assignment_from_bools(a));
  });
  m.def("sat224_to_lnes", [](const Cnf& cnf) {
    LnesConversion conv = sat224_to_lnes(cnf);
    return py::make_tuple(conv.instance, conv.provenance.p);
  });
  m.def("validate_chain", [](const LnesInstance& l) {
    ValidationReport r = validate_chain(l);
    return py::make_tuple(r.ok, r.violations);
  });
  m.def("check_near_exact", [](const LnesInstance& l, const std::vector<bool>& a) {
    return check_near_exact(l, assignment_from_bools(a));
  });
  m.def("brute_force_lnes", [](const LnesInstance& l) -> py::object {
    auto a = brute_force_lnes(l);
    if (!a) return py::none();
    return py::cast(assignment_to_bools(*a));
  });
  m.def("restrict_to_main", [](const LnesInstance& l, const std::vector<bool>& zeta) {
    return assignment_to_bools(restrict_to_main(l, assignment_from_bools(zeta)));
  });
  m.def("extend_to_chain", [](int p, const std::vector<bool>& tau) {
    return assignment_to_bools(extend_to_chain(p, assignment_from_bools(tau)));
  });

  py::class_<McisInstance>(m, "McisInstance")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges,
                       std::vector<std::vector<VertexId>> classes) {
             McisInstance inst;
             inst.vertex_count = n;
             inst.edges = edges_from_pairs(edges);
             inst.classes = std::move(classes);
             ValidationReport rep = validate_mcis(inst);
             if (!rep.ok) throw Error(rep.violations[0]);
             return inst;
           }),
           py::arg("vertex_count"), py::arg("edges"), py::arg("classes"))
      .def_readonly("vertex_count", &McisInstance::vertex_count)
      .def_readonly("classes", &McisInstance::classes);

  py::class_<DvReductionMap>(m, "DvReductionMap")
      .def_readonly("backbone_root", &DvReductionMap::backbone_root)
      .def_readonly("budget", &DvReductionMap::budget);

  py::class_<DeReductionMap>(m, "DeReductionMap")
      .def_readonly("backbone_root", &DeReductionMap::backbone_root)
      .def_readonly("budget", &DeReductionMap::budget);

  m.def("brute_force_mcis", [](const McisInstance& inst) -> py::object {
    auto s = brute_force_mcis(inst);
    if (!s) return py::none();
    return py::cast(*s);
  });
  m.def("mcis_to_fbtdv", [](const McisInstance& inst) {
    auto [reduced, map] = mcis_to_fbtdv(inst);
    return py::make_tuple(reduced, map);
  });
  m.def("audit_dv_reduction",
        [](const DeletionInstance& inst, const DvReductionMap& map, const McisInstance& m2) {
          ValidationReport r = audit_dv_reduction(inst, map, m2);
          return py::make_tuple(r.ok, r.violations);
        });
  m.def("forward_dv_solution",
        [](const McisInstance& m2, const std::vector<VertexId>& set, const DvReductionMap& map) {
          DvSolution s = forward_dv_solution(m2, set, map);
          return py::make_tuple(s.deleted, s.total_weight);
        });
  m.def("lift_dv_solution",
        [](const DvReductionMap& map, const std::vector<VertexId>& deleted, Weight w) {
          return lift_dv_solution(map, DvSolution{deleted, w});
        });

  m.def("lnes_to_fbtde", [](const LnesInstance& l) {
    auto [reduced, map] = lnes_to_fbtde(l);
    return py::make_tuple(reduced, map);
  });
  m.def("audit_de_reduction", [](const DeletionInstance& inst, const DeReductionMap& map) {
    ValidationReport r = audit_de_reduction(inst, map);
    return py::make_tuple(r.ok, r.violations);
  });
  m.def("forward_de_solution",
        [](const LnesInstance& l, const std::vector<bool>& zeta, const DeReductionMap& map) {
          DeSolution s = forward_de_solution(l, assignment_from_bools(zeta), map);
          return py::make_tuple(edges_as_pairs(s.deleted), s.total_weight);
        });
  m.def("lift_de_solution",
        [](const DeReductionMap& map, const std::vector<std::pair<int, int>>& deleted, Weight w) {
          return assignment_to_bools(lift_de_solution(map, DeSolution{edges_from_pairs(deleted), w}));
        });

  m.def(
      "gen_planted",
      [](Variant variant, int leaves, int noise, std::uint64_t seed) {
        PlantedInstance p = gen_planted(variant, leaves, noise, seed);
        py::object planted;
        if (p.planted_dv) planted = py::make_tuple(p.planted_dv->deleted, p.planted_dv->total_weight);
        else planted = py::make_tuple(edges_as_pairs(p.planted_de->deleted), p.planted_de->total_weight);
        return py::make_tuple(p.instance, planted);
      },
      py::arg("variant"), py::arg("leaves"), py::arg("noise"), py::arg("seed"));

  m.def("parse_fbt", &parse_fbt);
  m.def("write_fbt", &write_fbt);
  m.def("parse_lnes", &parse_lnes);
  m.def("write_lnes", &write_lnes);
  m.def("parse_cnf", &parse_cnf);
  m.def("write_cnf", &write_cnf);
  m.def("parse_mcis", &parse_mcis);
  m.def("write_mcis", &write_mcis);
}
