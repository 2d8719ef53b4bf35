#include <logeuclid/harness.hpp>
#include <logeuclid/oracle.hpp>
#include <logeuclid/render.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace logeuclid;

namespace {

// JSON crosses the boundary as text; the Python side decodes it.
std::string dumps(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Compiled core of the log-euclidean plane toolkit.";

  static py::exception<Error> exc(m, "LogEuclidError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  m.attr("EPSILON") = kEpsilon;

  py::class_<SurfacePoint>(m, "SurfacePoint")
      .def(py::init<double, double>(), py::arg("r"), py::arg("phi"))
      .def_static("apex", &SurfacePoint::apex)
      .def_property_readonly("r", &SurfacePoint::r)
      .def_property_readonly("phi", &SurfacePoint::phi)
      .def_property_readonly("is_apex", &SurfacePoint::is_apex)
      .def("__eq__", [](const SurfacePoint& a, const SurfacePoint& b) { return a == b; })
      .def("__repr__", [](const SurfacePoint& p) {
        return "SurfacePoint(r=" + std::to_string(p.r()) + ", phi=" + std::to_string(p.phi()) + ")";
      });

  py::class_<Line>(m, "Line")
      .def_static("chord", &Line::chord, py::arg("d"), py::arg("psi"))
      .def_static("apex", &Line::apex, py::arg("phi_a"), py::arg("phi_b"))
      .def_property_readonly("kind", [](const Line& l) { return l.is_chord() ? "chord" : "apex"; })
      .def_property_readonly("params", [](const Line& l) { return std::make_pair(l.d(), l.psi()); })
      .def("__eq__", [](const Line& a, const Line& b) { return a == b; })
      .def("to_json", [](const Line& l) { return dumps(to_json(l)); })
      .def("__repr__", [](const Line& l) { return "Line(" + to_json(l).dump() + ")"; });

  m.def("point_from_json", [](const std::string& s) { return point_from_json(parse_json(s)); });
  m.def("line_from_json", [](const std::string& s) { return line_from_json(parse_json(s)); });

  m.def("distance", &distance, py::arg("p"), py::arg("q"));
  m.def("geodesic_json", [](const SurfacePoint& p, const SurfacePoint& q) { return dumps(to_json(geodesic(p, q))); });
  m.def("geodesic_point_at", [](const SurfacePoint& p, const SurfacePoint& q, double t) {
    return geodesic_point_at(geodesic(p, q), t);
  });
  m.def("transform_point", &transform_point, py::arg("p"), py::arg("rotation"), py::arg("scale"));

  m.def("line_through", &line_through, py::arg("a"), py::arg("b"));
  m.def("on_line", [](const SurfacePoint& p, const Line& l) { return on_line(p, l); });
  m.def("corresponds", &corresponds, py::arg("line"), py::arg("a"), py::arg("b"));
  m.def("intersection_json", [](const Line& a, const Line& b) { return dumps(to_json(line_intersection(a, b))); });
  m.def("between", &between);
  m.def("triangle_json", [](const SurfacePoint& a, const SurfacePoint& b, const SurfacePoint& c) {
    return dumps(to_json(triangle_data(a, b, c)));
  });

  m.def("mesh_distance",
        [](const SurfacePoint& p, const SurfacePoint& q, double r_min, double r_max, int rings, int angular) {
          py::gil_scoped_release release;
          return mesh_distance(ConeMesh(r_min, r_max, rings, angular), p, q);
        },
        py::arg("p"), py::arg("q"), py::arg("r_min") = 0.02, py::arg("r_max") = 20.0, py::arg("rings") = 128,
        py::arg("angular") = 1024);

  m.def("run_axiom_suite_json",
        [](const std::string& model, std::uint64_t seed, std::size_t trials, const std::string& axioms) {
          TrialConfig cfg;
          cfg.master_seed = seed;
          cfg.n_trials = trials;
          const ModelKind kind = parse_model(model);
          const std::vector<AxiomId> ids = parse_axiom_list(axioms);
          py::gil_scoped_release release;
          return dumps(reports_to_json(run_axiom_suite(kind, cfg, ids)));
        });

  m.def("counterexample_json", [](const std::string& name) {
    if (name == "thm1") return dumps(theorem1_counterexample());
    if (name == "i2bis") return dumps(i2bis_counterexample());
    if (name == "i2weak") return dumps(weak_i2_counterexample());
    if (name == "sas") return dumps(sas_counterexample());
    if (name == "parallels") return dumps(parallels_counterexample());
    throw Error(ErrorCode::InvalidInput, "unknown counterexample '" + name + "'");
  });
  m.def("verify_counterexample_json", [](const std::string& w) { return verify_counterexample(parse_json(w)); });
  m.def("render_svg_json", [](const std::string& spec) { return render_svg(render_spec_from_json(parse_json(spec))); });
}
