#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dyncol/classc.hpp"
#include "dyncol/gadgets.hpp"
#include "dyncol/generators.hpp"
#include "dyncol/graph_io.hpp"
#include "dyncol/oracle.hpp"
#include "dyncol/report.hpp"

namespace py = pybind11;
using namespace dyncol;

namespace {

// Structured results go through the JSON report layer so Python sees the same
// field names as the CLI.
py::object to_python(const report::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Graph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0) throw GraphError("negative vertex id");
    list.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph::from_edges(n, list);
}

SearchBudget budget(std::uint64_t max_nodes, double time_limit) {
  SearchBudget b;
  if (max_nodes) b.max_nodes = max_nodes;
  if (time_limit > 0) b.time_limit_seconds = time_limit;
  return b;
}

}  // namespace

PYBIND11_MODULE(_dyncol, m) {
  m.doc() = "Dynamic 3-coloring for claw-free subcubic graphs";

  py::register_exception<NotInClassError>(m, "NotInClassError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ColoringError>(m, "ColoringError", PyExc_ValueError);
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<InternalInvariantError>(m, "InternalInvariantError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             if (v >= g.vertex_count()) throw py::index_error("vertex out of range");
             auto row = g.neighbors(v);
             return std::vector<Vertex>(row.begin(), row.end());
           })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("format_graph", &format_graph);

  m.def("cycle", &gen_cycle);
  m.def("path", &gen_path);
  m.def("complete", &gen_complete);
  m.def("exceptional", &gen_E, py::arg("i"));
  m.def("triangle_graph", [](int t, std::uint64_t seed) { return gen_T(t, seed).graph; }, py::arg("t"),
        py::arg("seed") = 1);
  m.def("named", [](const std::string& name) { return named_graph(name); });
  m.def("line_graph", [](const Graph& g) { return line_graph(g).graph; });

  m.def("recognize", [](const Graph& g) { return to_python(report::membership(recognize_C(g))); });
  m.def("decide", [](const Graph& g) { return to_python(report::decision(decide_dyn3(g))); });
  m.def("color", [](const Graph& g) -> std::optional<std::vector<int>> {
    auto c = dynamic_3_color(g);
    if (!c) return std::nullopt;
    return c->colors;
  });
  m.def("reduce", [](const Graph& g) { return to_python(report::reduction(reduce_to_T(g))); });

  m.def(
      "verify",
      [](const Graph& g, std::vector<int> colors, int k, bool proper_only) {
        const VertexColoring c{k, std::move(colors)};
        return to_python(report::violations(proper_only ? verify_proper(g, c) : verify_dynamic(g, c)));
      },
      py::arg("g"), py::arg("colors"), py::arg("k") = 3, py::arg("proper_only") = false);

  m.def(
      "dynamic_chromatic",
      [](const Graph& g, std::uint64_t max_nodes, double time_limit) {
        return exact_dynamic_chromatic(g, budget(max_nodes, time_limit)).value;
      },
      py::arg("g"), py::arg("max_nodes") = 0, py::arg("time_limit") = 0.0);
  m.def(
      "chromatic",
      [](const Graph& g, std::uint64_t max_nodes, double time_limit) {
        return exact_chromatic(g, budget(max_nodes, time_limit)).value;
      },
      py::arg("g"), py::arg("max_nodes") = 0, py::arg("time_limit") = 0.0);

  m.def("chain_transfer", &chain_transfer, py::arg("i"), py::arg("cu"), py::arg("cv"));

  m.def(
      "equivalence",
      [](const Graph& cubic, std::vector<int> j) { return to_python(report::equivalence(equivalence_report(cubic, j))); },
      py::arg("cubic"), py::arg("j") = std::vector<int>{1});
}
