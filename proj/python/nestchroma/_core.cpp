#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nestchroma/enumerate.hpp"
#include "nestchroma/families.hpp"
#include "nestchroma/io.hpp"
#include "nestchroma/nested.hpp"

namespace py = pybind11;
using namespace nestchroma;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.first, e.second);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact nested chromatic number solver";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return Graph::from_edges(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("edges", &edge_pairs)
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("neighbours",
           [](const Graph& g, int v) { return g.neighbourhood(v).to_vector(); })
      .def("__repr__",
           [](const Graph& g) {
             return "Graph(n=" + std::to_string(g.vertex_count()) +
                    ", m=" + std::to_string(g.edge_count()) + ")";
           })
      .def("__eq__", [](const Graph& a, const Graph& b) { return is_isomorphic(a, b); });

  m.def("chi_nested",
        [](const Graph& g) { return nested_chromatic_number(g).chi_nested; });
  m.def("nested_coloring",
        [](const Graph& g) { return nested_chromatic_number(g).coloring.classes; });
  m.def("chi", &chromatic_number_exact);
  m.def("chi_nested_brute_force", &brute_force_nested_chromatic, py::arg("g"),
        py::arg("cap") = 10);
  m.def("is_nested_coloring", [](const Graph& g, const std::vector<std::vector<int>>& classes) {
    return is_nested_coloring(g, classes).nested;
  });
  m.def("is_colour_nested", &is_colour_nested);
  m.def("duplicate_classes", [](const Graph& g) { return dedup(g).classes; });
  m.def("dedup_graph", [](const Graph& g) { return dedup(g).image; });
  m.def("poset_width", [](const Graph& g) { return width(weak_duplicate_poset(g)).width; });
  m.def("poset_relations", [](const Graph& g) {
    Poset p = weak_duplicate_poset(g);
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b)
        if (p.less(a, b)) rel.emplace_back(a, b);
    return rel;
  });
  m.def("complement", &complement);
  m.def("is_isomorphic", &is_isomorphic);
  m.def("canonical_graph6", [](const Graph& g) { return write_graph6(canonical_form(g)); });

  m.def("complete", &complete);
  m.def("complete_multipartite", &complete_multipartite);
  m.def("turan", &turan);
  m.def("cycle", &cycle);
  m.def("path", &path);
  m.def("star", &star);
  m.def("wheel", &wheel);
  m.def("windmill", &windmill);
  m.def("petersen", &petersen);
  m.def("kneser", &kneser);
  m.def("cube", &cube);
  m.def("crown", &crown);
  m.def("nested_bipartite", &nested_bipartite);
  m.def("threshold_graph", [](const std::string& script) {
    std::vector<ThresholdStep> steps;
    for (char c : script) {
      if (c == 'i') steps.push_back(ThresholdStep::isolated);
      else if (c == 'd') steps.push_back(ThresholdStep::dominating);
      else throw ParseError(std::string("bad script character '") + c + "'");
    }
    return threshold_graph(steps);
  });
  m.def("mycielski", &mycielski);
  m.def("disjoint_union", &disjoint_union);
  m.def("join", &join);
  m.def("direct_product", &direct_product);
  m.def("cartesian_product", &cartesian_product);
  m.def("strong_product", &strong_product);
  m.def("composition", &composition);
  m.def("erdos_renyi", &erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed") = 1);

  m.def("parse_graph6", &parse_graph6);
  m.def("write_graph6", &write_graph6);
  m.def("parse_edge_list", [](const std::string& text) {
    GraphDocument doc = parse_edge_list(text);
    return std::make_pair(doc.graph, doc.labels);
  });

  m.def(
      "graphs_on",
      [](int n, bool connected, bool bipartite) {
        GraphGenerator gen;
        GraphClassFilter filter;
        filter.connected_only = connected;
        filter.bipartite_only = bipartite;
        filter.min_vertices = filter.max_vertices = n;
        return gen.generate(filter);
      },
      py::arg("n"), py::arg("connected") = false, py::arg("bipartite") = false);
  m.def("classify_triples", [](int n) {
    GraphGenerator gen;
    TripleClassification tc = classify_triples(n, gen);
    py::list realizable, gaps;
    for (const auto& r : tc.realizable)
      realizable.append(py::make_tuple(r.chi, r.chi_nested, r.witness));
    for (const auto& g : tc.gaps) gaps.append(py::make_tuple(g.first, g.second));
    return py::make_tuple(realizable, gaps);
  });
}
