#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maxleaf/certificate.hpp"
#include "maxleaf/generate.hpp"
#include "maxleaf/io.hpp"
#include "maxleaf/oracle.hpp"
#include "maxleaf/tree.hpp"

namespace py = pybind11;
using namespace maxleaf;

namespace {

Graph graph_from_pairs(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

py::list edge_pairs(const std::vector<Edge>& edges) {
  py::list out;
  for (const auto& e : edges) out.append(py::make_tuple(e.u, e.v));
  return out;
}

py::list trace_steps(const ExpansionTrace& trace) {
  py::list out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto s = trace[i];
    out.append(py::make_tuple(s.center, std::string(to_string(s.kind)),
                              std::vector<VertexId>(s.added.begin(), s.added.end())));
  }
  return out;
}

py::dict certificate_dict(const Certificate& c) {
  py::dict d;
  d["n"] = c.n;
  d["m"] = c.m;
  d["leaves"] = c.leaf_count;
  d["u_size"] = c.u_size;
  d["k"] = c.k;
  d["upper_bound"] = c.upper_bound;
  d["ratio_bound"] = c.ratio_bound();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Maximum-leaf spanning trees: greedy 2-approximation, certificates, exact oracle";

  py::register_exception<NotConnectedError>(m, "NotConnectedError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_pairs), py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("neighbors", [](const Graph& g, VertexId v) {
        if (v >= g.num_vertices()) throw py::index_error("vertex out of range");
        const auto nb = g.neighbors(v);
        return std::vector<VertexId>(nb.begin(), nb.end());
      })
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("edges", [](const Graph& g) { return edge_pairs(g.edges()); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("is_connected", &is_connected);
  m.def("parse_graph",
        [](const std::string& text, const std::string& format) { return parse_graph(text, parse_format(format)); },
        py::arg("text"), py::arg("format") = "edgelist");
  m.def("serialize_graph",
        [](const Graph& g, const std::string& format) { return serialize_graph(g, parse_format(format)); },
        py::arg("graph"), py::arg("format") = "edgelist");
  m.def("generate",
        [](const std::string& spec, std::uint64_t seed) { return generate(InstanceSpec::parse(spec, seed)); },
        py::arg("spec"), py::arg("seed") = 0);

  m.def(
      "solve",
      [](const Graph& g, const std::string& policy) {
        const auto sol = solve(g, StartPolicy::parse(policy));
        py::dict d;
        d["root"] = sol.tree.root;
        d["edges"] = edge_pairs(sol.tree.edges());
        d["leaves"] = sol.tree.leaves;
        d["trace"] = trace_steps(sol.trace);
        d["touches"] = sol.touches;
        return d;
      },
      py::arg("graph"), py::arg("start_policy") = "first");

  m.def(
      "certify",
      [](const Graph& g, const std::string& policy) {
        const auto run = certify(g, StartPolicy::parse(policy));
        py::dict d = certificate_dict(run.certificate);
        d["ranks"] = run.ranks.rank;
        py::dict lemmas;
        for (const auto& c : run.lemmas.checks) lemmas[py::str(std::string(c.name))] = c.pass();
        d["lemmas"] = lemmas;
        d["lemmas_pass"] = run.lemmas.pass();
        return d;
      },
      py::arg("graph"), py::arg("start_policy") = "first");

  m.def(
      "max_leaf_exact",
      [](const Graph& g, std::uint64_t budget) {
        OracleOptions opts;
        opts.budget = budget;
        const auto res = max_leaf_exact(g, opts);
        py::dict d;
        d["opt"] = res.opt_leaves;
        d["edges"] = edge_pairs(res.witness.edges());
        d["trees_examined"] = res.trees_examined;
        d["complete"] = res.complete;
        return d;
      },
      py::arg("graph"), py::arg("budget") = OracleOptions{}.budget);

  m.def(
      "compare",
      [](const Graph& g, const std::string& policy, std::uint64_t budget) {
        OracleOptions opts;
        opts.budget = budget;
        const auto c = compare(g, StartPolicy::parse(policy), opts);
        py::dict d;
        d["alg"] = c.alg_leaves;
        d["opt"] = c.opt_leaves;
        d["ratio"] = c.ratio;
        d["bound_ok"] = c.bound_ok;
        d["certificate_ok"] = c.certificate_ok ? py::cast(*c.certificate_ok) : py::none();
        d["upper_bound"] = c.certificate ? py::cast(c.certificate->upper_bound) : py::none();
        return d;
      },
      py::arg("graph"), py::arg("start_policy") = "first", py::arg("budget") = OracleOptions{}.budget);
}
