#include "pentiso/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"

#include "pentiso/errors.hpp"

namespace pentiso {

using ojson = nlohmann::ordered_json;
using nlohmann::json;

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

std::string format_fixed(double v) {
  char buf[64];
  // avoid printing -0.000000
  if (std::abs(v) < 5e-7) v = 0.0;
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

ojson point_json(Point p) { return ojson::array({p.x, p.y}); }

Point point_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw MalformedMeshError("a point must be [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Rational rational_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) return parse_rational(j.dump());
  throw ParseError("coefficient must be a number or a rational string");
}

LinearForm form_from(const json& j) {
  if (!j.is_object()) throw ParseError("chain side must be an object over n, m, k3, k4");
  LinearForm f;
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (std::size_t i = 0; i < kCountVariables.size(); ++i) {
      if (it.key() == kCountVariables[i]) {
        f.c[i] = rational_from(it.value());
        known = true;
      }
    }
    if (!known) throw ParseError("unknown chain variable '" + it.key() + "'");
  }
  return f;
}

}  // namespace

std::string polygon_to_json(const PolygonChain& chain, const std::string& construction) {
  ojson j;
  auto angles = ojson::array();
  for (double a : interior_angles(chain)) angles.push_back(rad_to_deg(a));
  j["angles_deg"] = angles;
  auto verts = ojson::array();
  for (const auto& p : chain.vertices()) verts.push_back(point_json(p));
  j["vertices"] = verts;
  j["construction"] = construction;
  return j.dump(2) + "\n";
}

std::string mesh_to_json(const TilingMesh& mesh) {
  ojson j;
  if (mesh.lattice) j["lattice"] = ojson::array({point_json((*mesh.lattice)[0]), point_json((*mesh.lattice)[1])});
  else j["lattice"] = nullptr;
  auto verts = ojson::array();
  for (const auto& p : mesh.vertices) verts.push_back(point_json(p));
  j["vertices"] = verts;
  auto edges = ojson::array();
  for (const auto& e : mesh.edges) edges.push_back(ojson::array({e.tail, e.head, ojson::array({e.shift[0], e.shift[1]})}));
  j["edges"] = edges;
  auto faces = ojson::array();
  for (const auto& f : mesh.faces) faces.push_back(f);
  j["faces"] = faces;
  return j.dump() + "\n";
}

TilingMesh mesh_from_json(const std::string& text) {
  TilingMesh m;
  try {
    const json j = parse(text);
    if (!j.is_object()) throw MalformedMeshError("mesh must be a JSON object");
    const auto& lat = j.at("lattice");
    if (!lat.is_null()) {
      if (!lat.is_array() || lat.size() != 2) throw MalformedMeshError("lattice must be two vectors or null");
      m.lattice = std::array<Point, 2>{point_from(lat[0]), point_from(lat[1])};
    }
    for (const auto& v : j.at("vertices")) m.vertices.push_back(point_from(v));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3 || !e[2].is_array() || e[2].size() != 2)
        throw MalformedMeshError("an edge must be [tail, head, [si, sj]]");
      MeshEdge me;
      const long tail = e[0].get<long>(), head = e[1].get<long>();
      if (tail < 0 || head < 0 || tail >= static_cast<long>(m.vertices.size()) ||
          head >= static_cast<long>(m.vertices.size()))
        throw MalformedMeshError("edge endpoint out of range");
      me.tail = static_cast<std::size_t>(tail);
      me.head = static_cast<std::size_t>(head);
      me.shift = {e[2][0].get<int>(), e[2][1].get<int>()};
      if (!m.lattice && (me.shift[0] != 0 || me.shift[1] != 0))
        throw MalformedMeshError("a planar patch cannot carry edge shifts");
      m.edges.push_back(me);
    }
    for (const auto& f : j.at("faces")) {
      std::vector<OrientedEdge> face;
      for (const auto& k : f) {
        const OrientedEdge oe = k.get<long>();
        if (edge_index(oe) >= m.edges.size()) throw MalformedMeshError("face references a missing edge");
        face.push_back(oe);
      }
      if (face.size() < 3) throw MalformedMeshError("a face needs at least three edges");
      m.faces.push_back(std::move(face));
    }
  } catch (const json::exception& e) {
    throw MalformedMeshError(std::string("malformed mesh: ") + e.what());
  }
  return m;
}

AngleConstraintSet constraints_from_json(const std::string& text) {
  const json j = parse(text);
  try {
    if (j.contains("preset")) return preset_constraints(j.at("preset").get<std::string>());
    AngleConstraintSet c;
    if (j.contains("n")) c.n = j.at("n").get<std::size_t>();
    if (j.contains("fixed"))
      for (const auto& f : j.at("fixed")) c.fix_deg(f.at(0).get<std::size_t>(), f.at(1).get<double>());
    if (j.contains("relations"))
      for (const auto& r : j.at("relations"))
        c.relate_deg(r.at("coeffs").get<std::vector<int>>(), r.at("rhs_deg").get<double>());
    if (j.contains("box")) {
      std::size_t i = 0;
      for (const auto& b : j.at("box")) {
        c.bound_deg(i++, b.at(0).get<double>(), b.at(1).get<double>());
      }
    }
    if (j.contains("convex_only")) c.convex_only = j.at("convex_only").get<bool>();
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed constraint set: ") + e.what());
  }
}

std::string constraints_to_json(const AngleConstraintSet& c) {
  ojson j;
  j["n"] = c.n;
  auto fixed = ojson::array();
  for (const auto& [i, a] : c.fixed) fixed.push_back(ojson::array({i, rad_to_deg(a)}));
  j["fixed"] = fixed;
  auto rel = ojson::array();
  for (const auto& r : c.relations) {
    ojson o;
    o["coeffs"] = r.coeffs;
    o["rhs_deg"] = rad_to_deg(r.rhs);
    rel.push_back(o);
  }
  j["relations"] = rel;
  auto box = ojson::array();
  for (const auto& [lo, hi] : c.box) box.push_back(ojson::array({rad_to_deg(lo), rad_to_deg(hi)}));
  j["box"] = box;
  j["convex_only"] = c.convex_only;
  return j.dump(2) + "\n";
}

std::vector<ChainStep> chain_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_array()) throw ParseError("chain must be a JSON array");
  std::vector<ChainStep> out;
  try {
    for (const auto& s : j) {
      const LinearForm lhs = form_from(s.at("lhs"));
      const LinearForm rhs = s.contains("rhs") ? form_from(s.at("rhs")) : LinearForm{};
      const std::string op = s.at("op").get<std::string>();
      ChainStep step;
      if (op == ">=") step.form = lhs + (-rhs);
      else if (op == "<=") step.form = rhs + (-lhs);
      else throw ParseError("op must be <= or >=");
      step.premise = s.value("premise", false);
      if (s.contains("from")) step.from = s.at("from").get<std::vector<std::size_t>>();
      step.justification = s.value("justification", "");
      out.push_back(std::move(step));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed chain: ") + e.what());
  }
  return out;
}

std::string chain_to_json(const std::vector<ChainStep>& chain) {
  auto arr = ojson::array();
  for (const auto& s : chain) {
    ojson lhs;
    for (std::size_t i = 0; i < kCountVariables.size(); ++i) lhs[kCountVariables[i]] = to_string(s.form.c[i]);
    ojson o;
    o["lhs"] = lhs;
    o["op"] = ">=";
    o["rhs"] = ojson::object();
    o["justification"] = s.justification;
    o["premise"] = s.premise;
    o["from"] = s.from;
    arr.push_back(o);
  }
  return arr.dump(2) + "\n";
}

std::string curve_to_csv(const std::vector<CurvePoint>& points) {
  std::string out = "angle_deg,excess_perimeter\n";
  for (const auto& p : points) out += format_fixed(p.angle_deg) + "," + format_fixed(p.excess_perimeter) + "\n";
  return out;
}

}  // namespace pentiso
