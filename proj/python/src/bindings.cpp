#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rigidlines/connectivity.hpp"
#include "rigidlines/errors.hpp"
#include "rigidlines/io.hpp"
#include "rigidlines/sampler.hpp"
#include "rigidlines/sparsity.hpp"
#include "rigidlines/verify.hpp"

namespace py = pybind11;
using namespace rigidlines;

namespace {

// Results cross the boundary as plain Python objects via JSON.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::tuple line_tuple(const Line& l) { return py::make_tuple(l.a, l.b, l.c, l.d); }

LineConfig to_lines(const std::vector<std::array<double, 4>>& rows) {
  LineConfig out;
  for (const auto& r : rows) out.push_back({r[0], r[1], r[2], r[3]});
  return out;
}

std::vector<py::tuple> from_lines(const LineConfig& lines) {
  std::vector<py::tuple> out;
  for (const auto& l : lines) out.push_back(line_tuple(l));
  return out;
}

Embedding to_points(const std::vector<std::array<double, 2>>& rows) {
  Embedding out;
  for (const auto& r : rows) out.emplace_back(r[0], r[1]);
  return out;
}

std::vector<py::tuple> from_points(const Embedding& p) {
  std::vector<py::tuple> out;
  for (const auto& x : p) out.push_back(py::make_tuple(x.x(), x.y()));
  return out;
}

py::object plane_obj(const Plane& p) {
  py::dict d;
  d["normal"] = py::make_tuple(p.normal.x(), p.normal.y(), p.normal.z());
  d["offset"] = p.offset;
  return std::move(d);
}

py::object sequence_obj(const ConstructionSequence& s) {
  py::dict d;
  d["steps"] = to_py(steps_to_json(s.steps));
  d["relabel"] = s.relabel;
  return std::move(d);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rigidity of planar frameworks and incidences of lines in space";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StepError>(m, "StepError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
  py::register_exception<SamplingError>(m, "SamplingError", PyExc_RuntimeError);
  py::register_exception<NonConvergence>(m, "NonConvergence", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("edges", &Graph::edges)
      .def("has_edge", &Graph::has_edge)
      .def("degrees", &Graph::degrees)
      .def("with_edge", &Graph::with_edge)
      .def("without_edge", &Graph::without_edge)
      .def("to_json", [](const Graph& g) { return serialize_graph(g, GraphFormat::json); })
      .def("to_edge_list", [](const Graph& g) { return serialize_graph(g, GraphFormat::edge_list); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) { return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")"; });

  m.def("parse_graph", py::overload_cast<std::string_view>(&parse_graph), py::arg("text"),
        "Parse JSON or edge-list text (format detected from the first character).");
  m.def("generate", [](const std::string& name, const std::vector<long long>& params) { return generate(name, params); },
        py::arg("name"), py::arg("params"));
  m.def("standard_catalog", [](int n_max, std::uint64_t seed) {
    std::vector<std::pair<std::string, Graph>> out;
    for (auto& e : standard_catalog(n_max, seed)) out.emplace_back(e.name, e.graph);
    return out;
  }, py::arg("n_max"), py::arg("seed") = 0);

  m.def("sparsity_rank", [](const Graph& g) { return sparsity_rank(g).rank; });
  m.def("is_laman", &is_laman);
  m.def("is_redundant", &is_redundant);
  m.def("is_hendrickson", &is_hendrickson);
  m.def("spanning_laman_subgraph", &spanning_laman_subgraph);
  m.def("is_k_connected", &is_k_connected, py::arg("graph"), py::arg("k"));

  m.def("extract_henneberg", [](const Graph& g) { return sequence_obj(extract_henneberg(g)); });
  m.def("extract_jj", [](const Graph& g) { return sequence_obj(extract_jj(g)); });
  m.def("apply_henneberg", [](const py::object& steps) {
    auto s = parse_steps(from_py(steps).dump());
    return apply_henneberg(s);
  });
  m.def("apply_jj", [](const py::object& steps) {
    auto s = parse_steps(from_py(steps).dump());
    return apply_jj(s);
  });

  m.def("meet_residual", [](const std::array<double, 4>& l1, const std::array<double, 4>& l2) {
    return meet_residual({l1[0], l1[1], l1[2], l1[3]}, {l2[0], l2[1], l2[2], l2[3]});
  });
  m.def("intersection_graph", [](const std::vector<std::array<double, 4>>& lines, double tol) {
    return intersection_graph(to_lines(lines), tol);
  }, py::arg("lines"), py::arg("tol") = kDefaultTol);
  m.def("common_point", [](const std::vector<std::array<double, 4>>& lines, double tol) -> py::object {
    auto f = common_point(to_lines(lines), tol);
    if (f.status == PointFit::Status::none) return py::none();
    if (f.status == PointFit::Status::parallel_family) return py::str("parallel");
    return py::make_tuple(f.point.x(), f.point.y(), f.point.z());
  }, py::arg("lines"), py::arg("tol") = kDefaultTol);
  m.def("common_plane", [](const std::vector<std::array<double, 4>>& lines, double tol) -> py::object {
    auto f = common_plane(to_lines(lines), tol);
    return f.plane ? plane_obj(*f.plane) : py::none();
  }, py::arg("lines"), py::arg("tol") = kDefaultTol);
  m.def("classify_triple", [](const std::array<double, 4>& a, const std::array<double, 4>& b,
                              const std::array<double, 4>& c, double tol) {
    auto t = classify_triple({a[0], a[1], a[2], a[3]}, {b[0], b[1], b[2], b[3]}, {c[0], c[1], c[2], c[3]}, tol);
    py::dict d;
    d["kind"] = triple_kind_name(t.kind);
    d["family_dim"] = t.family_dim;
    return d;
  }, py::arg("l1"), py::arg("l2"), py::arg("l3"), py::arg("tol") = kDefaultTol);

  m.def("to_line", [](const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return line_tuple(to_line(Point2(a[0], a[1]), Point2(b[0], b[1])));
  });
  m.def("from_line", [](const std::array<double, 4>& l) {
    auto p = from_line({l[0], l[1], l[2], l[3]});
    return py::make_tuple(py::make_tuple(p.a.x(), p.a.y()), py::make_tuple(p.b.x(), p.b.y()));
  });
  m.def("phi", [](const std::vector<std::array<double, 2>>& p, const std::vector<std::array<double, 2>>& q) {
    return from_lines(phi(to_points(p), to_points(q)));
  });

  m.def("rigidity_rank", &rigidity_rank, py::arg("graph"), py::arg("trials") = 5, py::arg("seed") = 0,
        py::arg("exact") = false);
  m.def("rigidity_matrix", py::overload_cast<const Graph&, const Embedding&>(&rigidity_matrix));
  m.def("line_system_dimension", [](const Graph& g, const std::vector<std::array<double, 4>>& lines, double tol) {
    return to_py(report_to_json(line_system_dimension(g, to_lines(lines), tol)));
  }, py::arg("graph"), py::arg("lines"), py::arg("tol") = kDefaultTol);
  m.def("pair_system_dimension", [](const Graph& g, const std::vector<std::array<double, 2>>& p,
                                    const std::vector<std::array<double, 2>>& q, double tol) {
    return to_py(report_to_json(pair_system_dimension(g, to_points(p), to_points(q), tol)));
  }, py::arg("graph"), py::arg("p"), py::arg("p_prime"), py::arg("tol") = kDefaultTol);
  m.def("global_rigidity_oracle", &global_rigidity_oracle, py::arg("graph"), py::arg("trials") = 5,
        py::arg("seed") = 0);

  m.def("sample_laman_lines", [](const Graph& g, std::uint64_t seed) { return from_lines(sample_laman_lines(g, seed)); },
        py::arg("graph"), py::arg("seed") = 0);
  m.def("sample_knn", [](int n, const std::string& kind, std::uint64_t seed) {
    return from_lines(sample_knn(n, parse_family_kind(kind), seed));
  }, py::arg("n"), py::arg("kind"), py::arg("seed") = 0);
  m.def("sample_congruent_pair", [](int n, int orientation, std::uint64_t seed, bool collinear) {
    auto p = sample_congruent_pair(n, orientation, seed, collinear);
    return py::make_tuple(from_points(p.p), from_points(p.p_prime));
  }, py::arg("n"), py::arg("orientation") = 1, py::arg("seed") = 0, py::arg("collinear") = false);

  m.def("suite_names", &suite_names);
  m.def("run_suite", [](const std::string& name, std::uint64_t seed, int n_max, int count) {
    SuiteOptions o;
    o.seed = seed;
    o.n_max = n_max;
    o.count = count;
    return to_py(suite_to_json(run_suite(name, o)));
  }, py::arg("name"), py::arg("seed") = 0, py::arg("n_max") = 10, py::arg("count") = -1);
}
