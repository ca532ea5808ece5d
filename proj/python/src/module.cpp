#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schlafli/identities.hpp"
#include "schlafli/io.hpp"
#include "schlafli/sampling.hpp"
#include "schlafli/sweep.hpp"
#include "schlafli/volume.hpp"

namespace py = pybind11;
using namespace schlafli;

namespace {

TetraLengths tetra(const EdgeVector& lengths, const std::string& geometry) {
  return {lengths, parse_geometry(geometry)};
}

// Reports go through the same JSON the CLI prints, so both agree on keys.
py::object to_python(const nlohmann::json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dihedral angles, Jacobians and volumes of tetrahedra in constant curvature";

  static py::exception<GeometryError> geometry_error(m, "GeometryError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GeometryError& e) {
      py::object err = py::reinterpret_borrow<py::object>(geometry_error.ptr())(e.what());
      err.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(geometry_error.ptr(), err.ptr());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  std::vector<std::string> keys;
  for (int e = 0; e < kEdgeCount; ++e) keys.push_back(edge_key(e));
  m.attr("EDGES") = py::tuple(py::cast(keys));

  m.def(
      "triangle_angles",
      [](double l1, double l2, double l3, const std::string& geometry) {
        return solve_angles(l1, l2, l3, parse_geometry(geometry)).angles;
      },
      py::arg("l1"), py::arg("l2"), py::arg("l3"), py::arg("geometry"),
      "Inner angles opposite each side of a geodesic triangle.");

  m.def(
      "dihedral_angles",
      [](const EdgeVector& x, const std::string& geometry) { return curvature_map(tetra(x, geometry)).a; },
      py::arg("lengths"), py::arg("geometry"), "Six dihedral angles in edge order 12, 13, 14, 23, 24, 34.");

  m.def(
      "is_valid",
      [](const EdgeVector& x, const std::string& geometry) {
        return to_python(to_json(is_valid(x, parse_geometry(geometry))));
      },
      py::arg("lengths"), py::arg("geometry"));

  m.def(
      "jacobian",
      [](const EdgeVector& x, const std::string& geometry, const std::string& mode) {
        return jacobian_analytic(tetra(x, geometry), parse_assembly_mode(mode)).values;
      },
      py::arg("lengths"), py::arg("geometry"), py::arg("mode") = "direct",
      "d a_row / d x_col, rows and columns in edge order.");

  m.def(
      "jacobian_fd",
      [](const EdgeVector& x, const std::string& geometry, double h) {
        return jacobian_fd(tetra(x, geometry), h).values;
      },
      py::arg("lengths"), py::arg("geometry"), py::arg("h") = 1e-5);

  m.def(
      "p_matrix", [](const EdgeVector& x, const std::string& geometry) { return p_matrix(tetra(x, geometry)).values; },
      py::arg("lengths"), py::arg("geometry"));

  m.def(
      "r_matrix",
      [](const EdgeVector& x, const std::string& geometry) {
        const RMatrix r = r_matrix(tetra(x, geometry));
        py::dict out;
        out["values"] = r.values;
        out["inverse_jacobian"] = r.inverse_jacobian;
        out["condition"] = r.condition;
        return out;
      },
      py::arg("lengths"), py::arg("geometry"));

  m.def(
      "w_angle",
      [](const EdgeVector& angles, int edge) {
        TetraAngles a;
        a.a = angles;
        return w_angle(a, edge);
      },
      py::arg("angles"), py::arg("edge"));

  m.def(
      "w_length",
      [](const EdgeVector& x, const std::string& geometry, int edge) { return w_length(tetra(x, geometry), edge); },
      py::arg("lengths"), py::arg("geometry"), py::arg("edge"));

  m.def(
      "verify_angle_identities",
      [](const EdgeVector& x, const std::string& geometry) {
        return to_python(to_json(verify_angle_identities(tetra(x, geometry))));
      },
      py::arg("lengths"), py::arg("geometry"));

  m.def(
      "verify_length_identities",
      [](const EdgeVector& x, const std::string& geometry) {
        return to_python(to_json(verify_length_identities(tetra(x, geometry))));
      },
      py::arg("lengths"), py::arg("geometry"));

  m.def(
      "one_form_loop_residual",
      [](const EdgeVector& x, const std::string& geometry, double radius, std::pair<int, int> plane, int n_steps) {
        return one_form_loop_residual(tetra(x, geometry), radius, plane.first, plane.second, n_steps);
      },
      py::arg("lengths"), py::arg("geometry"), py::arg("radius"), py::arg("plane") = std::pair<int, int>{0, 5},
      py::arg("n_steps") = 256);

  m.def(
      "volume",
      [](const EdgeVector& x, const std::string& geometry, int n_steps) {
        return to_python(to_json(volume_schlaefli(tetra(x, geometry), n_steps)));
      },
      py::arg("lengths"), py::arg("geometry"), py::arg("n_steps") = 4096);

  m.def(
      "volume_gradient_check",
      [](const EdgeVector& x, const std::string& geometry, double h, int n_steps) {
        return to_python(to_json(volume_gradient_convergence(tetra(x, geometry), h, n_steps)));
      },
      py::arg("lengths"), py::arg("geometry"), py::arg("h") = 1e-3, py::arg("n_steps") = 1024);

  m.def(
      "euclidean_volume", [](const EdgeVector& x) { return euclidean_volume_cm({x, Geometry::Euclidean}); },
      py::arg("lengths"));

  m.def(
      "dual",
      [](const EdgeVector& x) {
        const TetraLengths lengths{x, Geometry::Spherical};
        const auto [y, b] = dual(lengths, curvature_map(lengths));
        return std::make_pair(y.x, b.a);
      },
      py::arg("lengths"), "Lengths and dihedral angles of the polar dual of a spherical tetrahedron.");

  m.def(
      "sample_tetrahedra",
      [](const std::string& geometry, std::size_t count, std::uint64_t seed, double lo, double hi, double min_angle) {
        std::vector<EdgeVector> out;
        for (const auto& x : sample_tetrahedra(parse_geometry(geometry), count, {lo, hi, min_angle}, seed)) {
          out.push_back(x.x);
        }
        return out;
      },
      py::arg("geometry"), py::arg("count"), py::arg("seed") = 42, py::arg("lo") = 0.3, py::arg("hi") = 1.2,
      py::arg("min_angle") = 0.05);

  m.def(
      "sweep",
      [](const std::string& geometry, std::size_t samples, std::uint64_t seed, unsigned workers) {
        SweepConfig config;
        config.geometry = parse_geometry(geometry);
        config.samples = samples;
        config.seed = seed;
        config.workers = workers;
        config.validate();
        SweepReport report;
        {
          py::gil_scoped_release release;
          report = run_sweep(config);
        }
        return to_python(to_json(report));
      },
      py::arg("geometry"), py::arg("samples") = 1000, py::arg("seed") = 42, py::arg("workers") = 1);
}
