#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pentiso/claims.hpp"
#include "pentiso/combinatorics.hpp"
#include "pentiso/equilateral.hpp"
#include "pentiso/errors.hpp"
#include "pentiso/geom.hpp"
#include "pentiso/io.hpp"
#include "pentiso/optimize.hpp"
#include "pentiso/torus.hpp"

namespace py = pybind11;
using namespace pentiso;

namespace {

std::vector<std::pair<double, double>> points(const PolygonChain& chain) {
  std::vector<std::pair<double, double>> out;
  for (const auto& p : chain.vertices()) out.emplace_back(p.x, p.y);
  return out;
}

py::dict minimization_dict(const MinimizationResult& r) {
  py::dict d;
  d["angles_deg"] = r.angles.degrees();
  d["perimeter"] = r.perimeter;
  d["inradius"] = r.construction.inradius;
  d["vertices"] = points(r.construction.chain);
  return d;
}

AngleConstraintSet constraints_arg(const std::string& preset_or_json) {
  const auto first = preset_or_json.find_first_not_of(" \t\n");
  if (first != std::string::npos && preset_or_json[first] == '{') return constraints_from_json(preset_or_json);
  return preset_constraints(preset_or_json);
}

}  // namespace

PYBIND11_MODULE(_pentiso, m) {
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());
  py::register_exception<UnboundedError>(m, "UnboundedError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<NonSequiturError>(m, "NonSequiturError", base.ptr());
  py::register_exception<MalformedMeshError>(m, "MalformedMeshError", base.ptr());
  py::register_exception<UnknownClaimError>(m, "UnknownClaimError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.def(
      "cot_perimeter", [](const std::vector<double>& deg) { return cot_perimeter(AngleVector::from_degrees(deg)); },
      py::arg("angles_deg"));
  m.def(
      "circumscribe",
      [](const std::vector<double>& deg) {
        const auto c = circumscribe(AngleVector::from_degrees(deg));
        py::dict d;
        d["inradius"] = c.inradius;
        d["tangent_lengths"] = c.tangent_lengths;
        d["vertices"] = points(c.chain);
        return d;
      },
      py::arg("angles_deg"));
  m.def("reference_perimeters", [] {
    const auto r = reference_perimeters();
    py::dict d;
    d["cairo"] = r.cairo_prismatic;
    d["regular_pentagon"] = r.regular_pentagon;
    d["square"] = r.square;
    d["equilateral_triangle"] = r.equilateral_triangle;
    return d;
  });

  m.def("preset_names", &preset_names);
  m.def(
      "minimize", [](const std::string& c) { return minimization_dict(minimize_perimeter(constraints_arg(c))); },
      py::arg("constraints"), "Minimize the perimeter for a preset name or a constraint JSON document.");
  m.def(
      "grid_oracle", [](const std::string& c) { return minimization_dict(grid_oracle(constraints_arg(c))); },
      py::arg("constraints"));
  m.def("efficient_angle_bounds", [] {
    const auto b = efficient_angle_bounds();
    return std::make_pair(rad_to_deg(b.a_min), rad_to_deg(b.a_max));
  });
  m.def("one_free_angle_perimeter", [](double deg) { return one_free_angle_perimeter(deg_to_rad(deg)); },
        py::arg("angle_deg"));

  m.def(
      "angle_tilings",
      [](const std::vector<double>& deg, std::optional<std::size_t> required, int max_degree) {
        std::vector<double> rad;
        for (double d : deg) rad.push_back(deg_to_rad(d));
        std::vector<std::vector<int>> out;
        for (const auto& f : angle_tilings(std::span<const double>(rad), required, max_degree))
          out.push_back(f.multiplicities);
        return out;
      },
      py::arg("angles_deg"), py::arg("required") = std::nullopt, py::arg("max_degree") = 6);
  m.def("ratio_lower_bound", [](double p0, double p2) { return ratio_lower_bound(p0, p2).value; }, py::arg("p0"),
        py::arg("p2"));

  m.def(
      "tiling",
      [](const std::string& name, int p, int q) { return mesh_to_json(build_named(name, p, q)); }, py::arg("name"),
      py::arg("p") = 1, py::arg("q") = 1, "Mesh JSON of a named periodic tiling.");
  m.def(
      "validate_tiling",
      [](const std::string& mesh_json) {
        const auto r = validate(mesh_from_json(mesh_json));
        py::dict d;
        d["ok"] = r.ok;
        d["vertices"] = r.vertices;
        d["edges"] = r.edges;
        d["faces"] = r.faces;
        d["euler_characteristic"] = r.euler_characteristic;
        std::vector<std::string> kinds;
        for (const auto& v : r.violations) kinds.push_back(v.kind);
        d["violations"] = kinds;
        return d;
      },
      py::arg("mesh_json"));
  m.def("perimeter_per_tile", [](const std::string& mesh_json) { return perimeter_per_tile(mesh_from_json(mesh_json)); },
        py::arg("mesh_json"));
  m.def(
      "truncate",
      [](const std::string& mesh_json, double radius) {
        const auto t = truncate(mesh_from_json(mesh_json), radius);
        py::dict d;
        d["radius"] = t.radius;
        d["p_r"] = t.p_r;
        d["a_r"] = t.a_r;
        d["rho_hat"] = t.rho_hat;
        d["contained_tiles"] = t.contained_tiles;
        d["contained_ratio"] = t.contained_ratio;
        return d;
      },
      py::arg("mesh_json"), py::arg("radius"));

  m.def("equilateral_champion", [] {
    const auto c = equilateral_champion();
    py::dict d;
    d["family"] = c.family;
    d["perimeter"] = c.perimeter;
    d["angles_deg"] = c.angles_deg;
    d["vertices"] = points(c.pentagon);
    return d;
  });

  m.def(
      "run_claims",
      [](std::optional<std::string> filter) {
        py::list out;
        for (const auto& r : run_claims(filter)) {
          py::dict d;
          d["id"] = r.id;
          d["expected"] = r.expected;
          d["computed"] = r.computed;
          d["abs_err"] = r.abs_err;
          d["tol"] = r.tol;
          d["status"] = to_string(r.status);
          d["mode"] = to_string(r.mode);
          out.append(d);
        }
        return out;
      },
      py::arg("filter") = std::nullopt);
}
