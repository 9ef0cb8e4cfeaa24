#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chib/bounds.hpp"
#include "chib/errors.hpp"
#include "chib/generators.hpp"
#include "chib/graph_io.hpp"
#include "chib/harness.hpp"
#include "chib/serialize.hpp"

namespace py = pybind11;
using namespace chib;
using nlohmann::json;

namespace {

// Structured values cross the boundary as JSON text; the Python side wraps them in dicts.
std::vector<Vertex> members(const VertexSet& s) { return {s.begin(), s.end()}; }

SolverLimits limits(std::optional<std::uint64_t> nodes, std::optional<double> seconds) {
  SolverLimits l;
  l.node_budget = nodes;
  l.time_budget = seconds;
  return l;
}

Verdict verify_json(const Graph& g, const std::string& kind, const std::string& text, bool stable) {
  json s = ser::parse_json(text);
  const int n = g.order();
  if (kind == "cover") return verify_cover(g, ser::cover_from_json(s, n));
  if (kind == "multicover") return verify_multicover(g, ser::multicover_from_json(s, n), stable);
  if (kind == "tick") return verify_tick(g, ser::tick_from_json(s, n));
  if (kind == "impression") return verify_impression(g, ser::impression_from_json(s, n));
  if (kind == "cable") return verify_cable(g, ser::cable_from_json(s, n));
  throw InputError("unknown structure kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "chibound native core";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return io::parse_graph6(s); })
      .def_static("parse", [](const std::string& s) { return io::parse_graph(s); }, "graph6 or DIMACS text")
      .def_static("read", [](const std::string& path) { return io::read_graph_file(path); })
      .def("to_graph6", [](const Graph& g) { return io::to_graph6(g); })
      .def("to_dimacs", [](const Graph& g) { return io::to_dimacs(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, Vertex v) {
        check_vertex(g, v);
        return members(g.neighbors(v));
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  py::arg nodes = py::arg("node_budget") = py::none(), secs = py::arg("time_budget") = py::none();

  m.def("chromatic_number", [](const Graph& g, std::optional<std::uint64_t> nb, std::optional<double> tb) {
    ChiResult r = chromatic_number(g, limits(nb, tb));
    return py::make_tuple(to_string(r.status), r.lower, r.upper, r.coloring.color);
  }, py::arg("g"), nodes, secs, "(status, lower, upper, colours)");

  m.def("omega", [](const Graph& g, std::optional<std::uint64_t> nb, std::optional<double> tb) {
    CliqueResult r = omega(g, limits(nb, tb));
    return py::make_tuple(to_string(r.status), members(r.witness), r.upper_bound);
  }, py::arg("g"), nodes, secs, "(status, witness clique, upper bound)");

  m.def("longest_hole", [](const Graph& g, std::optional<std::uint64_t> nb, std::optional<double> tb) {
    HoleResult r = longest_hole(g, limits(nb, tb));
    return py::make_tuple(to_string(r.status), r.hole ? std::optional(r.hole->cycle) : std::nullopt);
  }, py::arg("g"), nodes, secs);

  m.def("find_hole_at_least", [](const Graph& g, int ell, std::optional<std::uint64_t> nb, std::optional<double> tb) {
    HoleResult r = find_hole_at_least(g, ell, limits(nb, tb));
    return py::make_tuple(to_string(r.status), r.hole ? std::optional(r.hole->cycle) : std::nullopt);
  }, py::arg("g"), py::arg("ell"), nodes, secs);

  m.def("is_chordal", &is_chordal);
  m.def("check_coloring", [](const Graph& g, const std::vector<int>& colours) {
    Coloring c;
    c.color = colours;
    for (int x : colours) c.num_colors = std::max(c.num_colors, x + 1);
    return check_coloring(g, c);
  }, "None when proper, otherwise the reason");
  m.def("check_hole", [](const Graph& g, const std::vector<Vertex>& cycle) { return check_hole(g, Hole{cycle}); });

  m.def("verify", [](const Graph& g, const std::string& kind, const std::string& structure_json, bool stable) {
    return ser::to_json(verify_json(g, kind, structure_json, stable)).dump();
  }, py::arg("g"), py::arg("kind"), py::arg("structure"), py::arg("stable") = false);

  m.def("run_engine", [](const std::string& name, const Graph& g, std::optional<std::string> structure,
                         const std::map<std::string, std::string>& params, std::optional<std::uint64_t> nb,
                         std::optional<double> tb) {
    harness::EngineRequest req{name, g, std::nullopt, params, limits(nb, tb)};
    if (structure) req.structure = ser::parse_json(*structure);
    harness::EngineReport rep = harness::run_engine(req);
    return rep.document.dump();
  }, py::arg("name"), py::arg("g"), py::arg("structure") = py::none(), py::arg("params") = std::map<std::string, std::string>{},
     nodes, secs);
  m.def("engine_names", &harness::engine_names);

  m.def("main_bound", [](unsigned long k, unsigned long ell, std::size_t digits) {
    BoundBuilder b(digits);
    BoundExpr e = main_bound(b, k, ell);
    return py::make_tuple(e.exact() ? std::optional(e.to_decimal()) : std::nullopt, e.summary());
  }, py::arg("k"), py::arg("ell"), py::arg("digits") = 100000, "(decimal or None, summary)");
  m.def("longhole_color_bound", &longhole_color_bound);

  m.def("gen_gnp", &gen::gen_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("gen_chordal", &gen::gen_chordal, py::arg("n"), py::arg("width"), py::arg("seed"));
  m.def("named", &gen::named);
  m.def("gen_planted_cable", [](int h, int t, int type, int base_chi, std::uint64_t seed) {
    if (type != 1 && type != 2) throw InputError("type must be 1 or 2");
    auto pc = gen::gen_planted_cable(h, t, gen::uniform_types(t, type == 1 ? PairType::type1 : PairType::type2),
                                     base_chi, seed);
    return py::make_tuple(pc.graph, ser::to_json(pc.cable).dump());
  }, py::arg("h"), py::arg("t"), py::arg("type"), py::arg("base_chi"), py::arg("seed"));

  m.def("sweep", [](const std::string& config_text) {
    harness::ExperimentConfig cfg = harness::ExperimentConfig::parse(config_text);
    cfg.output.clear();
    cfg.table.clear();
    harness::SweepResult res = harness::run_conjecture_sweep(cfg);
    return py::make_tuple(harness::records_to_jsonl(res.records), harness::table_to_csv(res.table));
  }, "(records as JSON lines, max-chi table as CSV); output paths in the config are ignored");
}
