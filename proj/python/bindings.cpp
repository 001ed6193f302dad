// Python module: graphs, classification, edge reports, decomposition,
// Y->delta, the atlas and the verification harnesses. Structured results
// cross the boundary as the same JSON the CLI prints, decoded to dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brickforge/atlas.hpp"
#include "brickforge/canon.hpp"
#include "brickforge/catalog.hpp"
#include "brickforge/edgeclass.hpp"
#include "brickforge/error.hpp"
#include "brickforge/io.hpp"
#include "brickforge/matchings.hpp"
#include "brickforge/structure.hpp"
#include "brickforge/tightcut.hpp"
#include "brickforge/verify.hpp"
#include "brickforge/version.hpp"
#include "brickforge/ydelta.hpp"

namespace py = pybind11;
namespace bf = brickforge;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

using Pairs = std::vector<std::pair<bf::VertexId, bf::VertexId>>;

bf::MultiGraph make_graph(int n, const Pairs& edges, std::vector<std::string> names) {
  return bf::MultiGraph::build(n, edges, std::move(names));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "brickforge C++ core";
  m.attr("__version__") = std::string(bf::kVersion);

  // The module attribute keeps the type alive; args are (message, kind).
  static PyObject* graph_error = py::exception<bf::GraphError>(m, "GraphError", PyExc_ValueError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const bf::GraphError& e) {
      PyErr_SetObject(graph_error, py::make_tuple(e.what(), std::string(bf::to_string(e.kind()))).ptr());
    }
  });

  py::class_<bf::MultiGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"), py::arg("names") = std::vector<std::string>{})
      .def_property_readonly("n", &bf::MultiGraph::vertex_count)
      .def_property_readonly("m", &bf::MultiGraph::edge_count)
      .def_property_readonly("edges", &bf::MultiGraph::edge_pairs)
      .def_property_readonly("names", &bf::MultiGraph::names)
      .def("degree", &bf::MultiGraph::degree)
      .def("edge_label", &bf::MultiGraph::edge_label)
      .def("is_cubic", &bf::MultiGraph::is_cubic)
      .def("is_simple", &bf::MultiGraph::is_simple)
      .def("__eq__", [](const bf::MultiGraph& a, const bf::MultiGraph& b) { return a == b; })
      .def("__repr__", [](const bf::MultiGraph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("from_graph6", [](const std::string& s) { return bf::parse_graph6(s); });
  m.def("to_graph6", &bf::to_graph6);
  m.def("from_json", [](const std::string& s) { return bf::parse_graph_json(s); });
  m.def("to_json", [](const bf::MultiGraph& g) { return bf::graph_to_json(g).dump(); });

  m.def("atlas_names", &bf::atlas_names);
  m.def("atlas", [](const std::string& name) { return bf::named_graph(name).graph; }, py::arg("name"));
  m.def("identify", &bf::identify);

  m.def("canonical_label", [](const bf::MultiGraph& g) { return bf::canonical_label(g).hex(); });
  m.def("is_isomorphic", &bf::is_isomorphic);

  m.def("perfect_matchings", [](const bf::MultiGraph& g) {
    std::vector<std::vector<bf::EdgeId>> out;
    for (const auto& pm : bf::enumerate_perfect_matchings(g)) out.push_back(pm.edges);
    return out;
  });
  m.def("forcing_edges", &bf::forcing_edges);

  m.def("classify", [](const bf::MultiGraph& g) { return to_python(bf::classify(g)); });
  m.def("edge_report", [](const bf::MultiGraph& g) { return to_python(bf::to_json(g, bf::edge_report(g))); });
  m.def("is_extremal", &bf::is_extremal);
  m.def("brick_count", &bf::brick_count);
  m.def("decompose", [](const bf::MultiGraph& g) {
    const bf::DecompositionTree t = bf::tight_cut_decomposition(g);
    nlohmann::json j = t;
    j["brick_count"] = t.brick_count();
    return to_python(j);
  });

  m.def("y_to_delta", [](const bf::MultiGraph& g, bf::VertexId v) { return bf::y_to_delta(g, v).graph; });
  m.def("is_base_of", &bf::is_base_of);
  m.def("generate", [](int n_max) {
    std::vector<bf::MultiGraph> out;
    for (const auto& e : bf::generate_k4_based(n_max, {.classify = false})) out.push_back(e.graph);
    return out;
  }, py::arg("n_max"), "Representatives of the K4-based classes up to n_max vertices.");

  m.def("verify", [](const std::string& harness, int n_max) {
    bf::VerificationReport r;
    {
      py::gil_scoped_release release;
      if (harness == "main") r = bf::verify_main_theorem(n_max);
      else if (harness == "thin") r = bf::verify_thin_note(n_max);
      else if (harness == "lemmas") r = bf::verify_lemma_suite(n_max);
      else if (harness == "sufficiency") r = bf::verify_sufficiency();
      else throw bf::GraphError(bf::ErrorKind::UnknownName, "no harness named " + harness);
    }
    return to_python(bf::to_json(r));
  }, py::arg("harness"), py::arg("n_max") = 14);
}
