#include "pentiso/torus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>

#include "pentiso/errors.hpp"

namespace pentiso {

Point TilingMesh::offset(const std::array<int, 2>& shift) const {
  if (!lattice) return {};
  return static_cast<double>(shift[0]) * (*lattice)[0] + static_cast<double>(shift[1]) * (*lattice)[1];
}

namespace {

void check_structure(const TilingMesh& mesh) {
  for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
    const auto& edge = mesh.edges[e];
    if (edge.tail >= mesh.vertices.size() || edge.head >= mesh.vertices.size())
      throw MalformedMeshError("edge " + std::to_string(e) + " references a missing vertex");
    if (!mesh.lattice && (edge.shift[0] != 0 || edge.shift[1] != 0))
      throw MalformedMeshError("edge " + std::to_string(e) + " has a shift on a planar patch");
  }
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    if (mesh.faces[f].size() < 3)
      throw MalformedMeshError("face " + std::to_string(f) + " has fewer than three edges");
    for (OrientedEdge oe : mesh.faces[f]) {
      if (edge_index(oe) >= mesh.edges.size())
        throw MalformedMeshError("face " + std::to_string(f) + " references a missing edge");
    }
  }
}

std::size_t start_vertex(const TilingMesh& mesh, OrientedEdge oe) {
  const auto& e = mesh.edges[edge_index(oe)];
  return edge_reversed(oe) ? e.head : e.tail;
}

std::size_t end_vertex(const TilingMesh& mesh, OrientedEdge oe) {
  const auto& e = mesh.edges[edge_index(oe)];
  return edge_reversed(oe) ? e.tail : e.head;
}

Point displacement(const TilingMesh& mesh, OrientedEdge oe) {
  const auto& e = mesh.edges[edge_index(oe)];
  const Point d = mesh.vertices[e.head] + mesh.offset(e.shift) - mesh.vertices[e.tail];
  return edge_reversed(oe) ? Point{-d.x, -d.y} : d;
}

std::array<int, 2> shift_of(const TilingMesh& mesh, OrientedEdge oe) {
  const auto& s = mesh.edges[edge_index(oe)].shift;
  return edge_reversed(oe) ? std::array<int, 2>{-s[0], -s[1]} : s;
}

}  // namespace

PolygonChain TilingMesh::face_polygon(std::size_t f) const {
  const auto& face = faces.at(f);
  std::vector<Point> pts;
  pts.reserve(face.size());
  Point p = vertices.at(start_vertex(*this, face.front()));
  for (OrientedEdge oe : face) {
    pts.push_back(p);
    p = p + displacement(*this, oe);
  }
  return PolygonChain(std::move(pts));
}

std::vector<std::size_t> TilingMesh::face_vertices(std::size_t f) const {
  std::vector<std::size_t> out;
  for (OrientedEdge oe : faces.at(f)) out.push_back(start_vertex(*this, oe));
  return out;
}

double TilingMesh::edge_length(std::size_t e) const {
  const auto& edge = edges.at(e);
  return norm(vertices[edge.head] + offset(edge.shift) - vertices[edge.tail]);
}

TilingMesh mesh_from_polygons(const std::vector<std::vector<Point>>& polygons,
                              std::optional<std::array<Point, 2>> lattice) {
  TilingMesh mesh;
  mesh.lattice = lattice;
  double inv[2][2] = {{1, 0}, {0, 1}};
  if (lattice) {
    const Point u = (*lattice)[0], v = (*lattice)[1];
    const double det = cross(u, v);
    if (std::abs(det) < 1e-12) throw DomainError("degenerate lattice");
    inv[0][0] = v.y / det;
    inv[0][1] = -v.x / det;
    inv[1][0] = -u.y / det;
    inv[1][1] = u.x / det;
  }
  // canonical representative and integer lattice offset of a point
  auto locate = [&](Point p) -> std::pair<std::size_t, std::array<int, 2>> {
    Point rep = p;
    std::array<int, 2> k{0, 0};
    if (lattice) {
      const double fu = inv[0][0] * p.x + inv[0][1] * p.y;
      const double fv = inv[1][0] * p.x + inv[1][1] * p.y;
      k = {static_cast<int>(std::floor(fu + 1e-7)), static_cast<int>(std::floor(fv + 1e-7))};
      rep = p - mesh.offset(k);
    }
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
      if (norm(mesh.vertices[i] - rep) < 1e-7) return {i, k};
    mesh.vertices.push_back(rep);
    return {mesh.vertices.size() - 1, k};
  };

  std::map<std::tuple<std::size_t, std::size_t, int, int>, std::size_t> edge_ids;
  for (const auto& poly : polygons) {
    std::vector<std::pair<std::size_t, std::array<int, 2>>> loc;
    for (const Point& p : poly) loc.push_back(locate(p));
    std::vector<OrientedEdge> face;
    for (std::size_t j = 0; j < poly.size(); ++j) {
      const auto& [a, ka] = loc[j];
      const auto& [b, kb] = loc[(j + 1) % poly.size()];
      const int s0 = kb[0] - ka[0], s1 = kb[1] - ka[1];
      if (auto it = edge_ids.find({b, a, -s0, -s1}); it != edge_ids.end()) {
        face.push_back(~static_cast<OrientedEdge>(it->second));
        continue;
      }
      auto [it, inserted] = edge_ids.try_emplace({a, b, s0, s1}, mesh.edges.size());
      if (inserted) mesh.edges.push_back({a, b, {s0, s1}});
      face.push_back(static_cast<OrientedEdge>(it->second));
    }
    mesh.faces.push_back(std::move(face));
  }
  return mesh;
}

namespace {

std::vector<std::vector<Point>> replicate(const std::vector<std::vector<Point>>& block, Point u,
                                          Point v, int p, int q) {
  std::vector<std::vector<Point>> out;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      const Point t = static_cast<double>(i) * u + static_cast<double>(j) * v;
      for (const auto& poly : block) {
        std::vector<Point> moved;
        for (const Point& x : poly) moved.push_back(x + t);
        out.push_back(std::move(moved));
      }
    }
  }
  return out;
}

std::vector<Point> circumscribed_vertices(std::initializer_list<double> degrees) {
  const auto c = circumscribe(AngleVector::from_degrees(degrees));
  return {c.chain.vertices().begin(), c.chain.vertices().end()};
}

Point rotate_about(Point p, Point centre, double angle) { return centre + rotate(p - centre, angle); }

void check_periods(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("periods must be at least 1");
}

}  // namespace

TilingMesh build_cairo(int p, int q) {
  check_periods(p, q);
  // right angles at v0 and v3 are nonadjacent
  const auto base = circumscribed_vertices({90.0, 120.0, 120.0, 90.0, 120.0});
  const Point pivot = base[0];
  std::vector<std::vector<Point>> block;
  for (int k = 0; k < 4; ++k) {
    std::vector<Point> poly;
    for (const Point& x : base) poly.push_back(rotate_about(x, pivot, k * 0.5 * kPi));
    block.push_back(std::move(poly));
  }
  const Point w = base[3] - base[0];
  const Point u = rotate(w, 0.5 * kPi) - w;
  const Point v = rotate(u, 0.5 * kPi);
  return mesh_from_polygons(replicate(block, u, v, p, q),
                            std::array<Point, 2>{static_cast<double>(p) * u, static_cast<double>(q) * v});
}

TilingMesh build_prismatic(int p, int q) {
  check_periods(p, q);
  // right angles at v0 and v1 are adjacent
  const auto a = circumscribed_vertices({90.0, 90.0, 120.0, 120.0, 120.0});
  const Point mid = 0.5 * (a[0] + a[1]);
  std::vector<Point> b;
  for (const Point& x : a) b.push_back(2.0 * mid - x);
  const Point v = a[1] - a[0];
  const Point u = (2.0 * mid - a[4]) - a[3];
  return mesh_from_polygons(replicate({a, b}, u, v, p, q),
                            std::array<Point, 2>{static_cast<double>(p) * u, static_cast<double>(q) * v});
}

TilingMesh build_square_grid(int p, int q) {
  check_periods(p, q);
  const std::vector<Point> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  return mesh_from_polygons(replicate({sq}, {1, 0}, {0, 1}, p, q),
                            std::array<Point, 2>{Point{static_cast<double>(p), 0}, Point{0, static_cast<double>(q)}});
}

TilingMesh build_named(const std::string& name, int p, int q) {
  if (name == "cairo") return build_cairo(p, q);
  if (name == "prismatic") return build_prismatic(p, q);
  if (name == "square") return build_square_grid(p, q);
  throw DomainError("unknown tiling '" + name + "'");
}

std::vector<std::vector<std::size_t>> vertex_faces(const TilingMesh& mesh) {
  std::vector<std::vector<std::size_t>> out(mesh.vertices.size());
  for (std::size_t f = 0; f < mesh.faces.size(); ++f)
    for (std::size_t v : mesh.face_vertices(f)) out[v].push_back(f);
  return out;
}

ValidationReport validate(const TilingMesh& mesh) {
  check_structure(mesh);
  ValidationReport r;
  r.vertices = static_cast<long>(mesh.vertices.size());
  r.edges = static_cast<long>(mesh.edges.size());
  r.faces = static_cast<long>(mesh.faces.size());
  r.euler_characteristic = r.vertices - r.edges + r.faces;
  auto flag = [&r](std::string kind, std::string where, std::string detail) {
    r.violations.push_back({std::move(kind), std::move(where), std::move(detail)});
  };

  // face cycles must be connected and close up in the plane
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& face = mesh.faces[f];
    std::array<int, 2> total{0, 0};
    for (std::size_t i = 0; i < face.size(); ++i) {
      if (end_vertex(mesh, face[i]) != start_vertex(mesh, face[(i + 1) % face.size()]))
        flag("closure", "face " + std::to_string(f), "edge cycle is broken after position " + std::to_string(i));
      const auto s = shift_of(mesh, face[i]);
      total[0] += s[0];
      total[1] += s[1];
    }
    if (total[0] != 0 || total[1] != 0)
      flag("closure", "face " + std::to_string(f), "lattice shifts do not cancel");
  }

  // each edge is used once in each direction on a torus, at most so on a patch
  std::vector<int> forward(mesh.edges.size(), 0), backward(mesh.edges.size(), 0);
  for (const auto& face : mesh.faces)
    for (OrientedEdge oe : face) ++(edge_reversed(oe) ? backward : forward)[edge_index(oe)];
  std::vector<bool> boundary_vertex(mesh.vertices.size(), false);
  for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
    const bool interior = forward[e] == 1 && backward[e] == 1;
    const bool boundary = forward[e] + backward[e] == 1;
    if (!interior) {
      boundary_vertex[mesh.edges[e].tail] = true;
      boundary_vertex[mesh.edges[e].head] = true;
    }
    if (interior || (!mesh.is_torus() && boundary)) continue;
    flag("edge_use", "edge " + std::to_string(e),
         "used " + std::to_string(forward[e]) + " forward and " + std::to_string(backward[e]) + " backward");
  }

  // no vertex may sit inside another tile's edge
  const int reach = mesh.is_torus() ? 2 : 0;
  for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
    const Point a = mesh.vertices[mesh.edges[e].tail];
    const Point b = mesh.vertices[mesh.edges[e].head] + mesh.offset(mesh.edges[e].shift);
    const Point d = b - a;
    const double len2 = dot(d, d);
    if (len2 < kDegenerateEdge * kDegenerateEdge) {
      flag("t_junction", "edge " + std::to_string(e), "zero-length edge");
      continue;
    }
    for (std::size_t w = 0; w < mesh.vertices.size(); ++w) {
      for (int i = -reach; i <= reach; ++i) {
        for (int j = -reach; j <= reach; ++j) {
          const Point x = mesh.vertices[w] + mesh.offset({i, j});
          const double t = dot(x - a, d) / len2;
          if (t <= 1e-9 || t >= 1.0 - 1e-9) continue;
          if (std::abs(cross(d, x - a)) / std::sqrt(len2) < kMeshTol)
            flag("t_junction", "edge " + std::to_string(e), "vertex " + std::to_string(w) + " lies inside it");
        }
      }
    }
  }

  std::vector<double> vertex_angle(mesh.vertices.size(), 0.0);
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const PolygonChain poly = mesh.face_polygon(f);
    const double area = poly.signed_area();
    if (std::abs(area - 1.0) > kMeshTol)
      flag("area", "face " + std::to_string(f), "area " + std::to_string(area));
    const auto angles = interior_angles(poly);
    const double sum = std::accumulate(angles.begin(), angles.end(), 0.0);
    const double expected = static_cast<double>(angles.size() - 2) * kPi;
    if (std::abs(sum - expected) > kMeshTol)
      flag("face_angles", "face " + std::to_string(f), "angle sum " + std::to_string(sum));
    const auto fv = mesh.face_vertices(f);
    for (std::size_t i = 0; i < fv.size(); ++i) vertex_angle[fv[i]] += angles[i];
  }
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
    if (boundary_vertex[v]) continue;
    if (std::abs(vertex_angle[v] - kTwoPi) > kMeshTol)
      flag("vertex_angles", "vertex " + std::to_string(v), "angle sum " + std::to_string(vertex_angle[v]));
  }

  const long expected_chi = mesh.is_torus() ? 0 : 1;
  if (r.euler_characteristic != expected_chi)
    flag("euler", "mesh", "V - E + F = " + std::to_string(r.euler_characteristic));
  r.ok = r.violations.empty();
  return r;
}

double perimeter_per_tile(const TilingMesh& mesh) {
  if (!mesh.is_torus()) throw PatchError("perimeter per tile needs a torus mesh");
  if (mesh.faces.empty()) throw DomainError("mesh has no faces");
  double total = 0.0;
  for (std::size_t e = 0; e < mesh.edges.size(); ++e) total += mesh.edge_length(e);
  return total / static_cast<double>(mesh.faces.size());
}

TileCensus census(const TilingMesh& mesh) {
  check_structure(mesh);
  TileCensus c;
  std::vector<bool> efficient(mesh.faces.size(), false);
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const PolygonChain poly = mesh.face_polygon(f);
    const auto metrics = polygon_metrics(poly);
    const auto angles = interior_angles(poly);
    const auto reflex = std::count_if(angles.begin(), angles.end(), [](double a) { return a > kPi + 1e-12; });
    if (reflex == 0) {
      // scale-free perimeter so tiles of any area compare against unit area
      const double unit_perimeter = metrics.perimeter / std::sqrt(metrics.area);
      if (angles.size() == 5 && is_efficient(unit_perimeter)) {
        efficient[f] = true;
        ++c.count_c1;
      } else {
        ++c.count_c2;
      }
    } else if (reflex == 1) {
      ++c.count_n1;
    } else {
      ++c.count_n2;
    }
  }
  const double total = static_cast<double>(mesh.faces.size());
  c.n = c.count_c1;
  c.m = c.count_n1 + c.count_n2;
  if (total > 0) {
    c.c1 = static_cast<double>(c.count_c1) / total;
    c.c2 = static_cast<double>(c.count_c2) / total;
    c.n1 = static_cast<double>(c.count_n1) / total;
    c.n2 = static_cast<double>(c.count_n2) / total;
  }
  const auto incident = vertex_faces(mesh);
  c.vertices = static_cast<long>(mesh.vertices.size());
  for (const auto& faces : incident) {
    const bool eff = !faces.empty() &&
                     std::all_of(faces.begin(), faces.end(), [&](std::size_t f) { return efficient[f]; });
    if (!eff) {
      ++c.inefficient_vertices;
      continue;
    }
    if (faces.size() == 3) ++c.k3;
    if (faces.size() == 4) ++c.k4;
  }
  return c;
}

double segment_disk_length(Point a, Point b, Point centre, double radius, long* crossings) {
  const Point d = b - a;
  const Point f = a - centre;
  const double qa = dot(d, d);
  if (qa == 0.0) return 0.0;
  const double qb = 2.0 * dot(f, d);
  const double qc = dot(f, f) - radius * radius;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc <= 0.0) return 0.0;
  const double sq = std::sqrt(disc);
  const double t0 = (-qb - sq) / (2.0 * qa);
  const double t1 = (-qb + sq) / (2.0 * qa);
  if (crossings) {
    if (t0 >= 0.0 && t0 < 1.0) ++*crossings;
    if (t1 >= 0.0 && t1 < 1.0) ++*crossings;
  }
  const double lo = std::max(0.0, t0), hi = std::min(1.0, t1);
  return hi > lo ? (hi - lo) * std::sqrt(qa) : 0.0;
}

namespace {

// Signed area of the disk (centred at the origin) intersected with the
// triangle (origin, a, b).
double triangle_disk_area(Point a, Point b, double r) {
  const double r2 = r * r;
  auto sector = [r2](Point p, Point q) { return 0.5 * r2 * std::atan2(cross(p, q), dot(p, q)); };
  const bool a_in = dot(a, a) <= r2, b_in = dot(b, b) <= r2;
  if (a_in && b_in) return 0.5 * cross(a, b);
  const Point d = b - a;
  const double qa = dot(d, d);
  if (qa == 0.0) return 0.0;
  const double qb = 2.0 * dot(a, d);
  const double qc = dot(a, a) - r2;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc <= 0.0) return sector(a, b);
  const double sq = std::sqrt(disc);
  const double t0 = (-qb - sq) / (2.0 * qa), t1 = (-qb + sq) / (2.0 * qa);
  const Point p0 = a + std::clamp(t0, 0.0, 1.0) * d;
  const Point p1 = a + std::clamp(t1, 0.0, 1.0) * d;
  if (a_in) return 0.5 * cross(a, p1) + sector(p1, b);
  if (b_in) return sector(a, p0) + 0.5 * cross(p0, b);
  if (t0 >= 1.0 || t1 <= 0.0) return sector(a, b);
  return sector(a, p0) + 0.5 * cross(p0, p1) + sector(p1, b);
}

}  // namespace

double polygon_disk_area(std::span<const Point> polygon, Point centre, double radius) {
  double total = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    total += triangle_disk_area(polygon[i] - centre, polygon[(i + 1) % polygon.size()] - centre, radius);
  }
  return std::abs(total);
}

TruncationStats truncate(const TilingMesh& mesh, double radius, std::optional<Point> origin) {
  if (!mesh.is_torus()) throw PatchError("truncation unrolls a periodic mesh");
  if (!(radius > 0.0)) throw DomainError("radius must be positive");
  check_structure(mesh);
  TruncationStats s;
  s.radius = radius;
  if (origin) {
    s.origin = *origin;
  } else {
    const PolygonChain first = mesh.face_polygon(0);
    Point c{};
    for (const Point& p : first.vertices()) c = c + p;
    s.origin = (1.0 / static_cast<double>(first.size())) * c;
  }

  std::vector<PolygonChain> polys;
  std::vector<std::vector<std::array<int, 2>>> tail_shifts;  // per face edge
  double reach = 0.0;
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    polys.push_back(mesh.face_polygon(f));
    for (const Point& p : polys.back().vertices()) reach = std::max(reach, norm(p));
    std::vector<std::array<int, 2>> shifts;
    std::array<int, 2> cur{0, 0};
    for (OrientedEdge oe : mesh.faces[f]) {
      const auto es = mesh.edges[edge_index(oe)].shift;
      if (edge_reversed(oe)) {
        shifts.push_back({cur[0] - es[0], cur[1] - es[1]});
        cur = {cur[0] - es[0], cur[1] - es[1]};
      } else {
        shifts.push_back(cur);
        cur = {cur[0] + es[0], cur[1] + es[1]};
      }
    }
    tail_shifts.push_back(std::move(shifts));
  }
  for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
    reach = std::max(reach, norm(mesh.vertices[mesh.edges[e].head] + mesh.offset(mesh.edges[e].shift)));
  }

  const Point u = (*mesh.lattice)[0], v = (*mesh.lattice)[1];
  const double det = cross(u, v);
  const double fu = (v.y * s.origin.x - v.x * s.origin.y) / det;
  const double fv = (-u.y * s.origin.x + u.x * s.origin.y) / det;
  const double span = radius + reach;
  const int iu = static_cast<int>(std::ceil(span * std::hypot(v.x, v.y) / std::abs(det))) + 1;
  const int iv = static_cast<int>(std::ceil(span * std::hypot(u.x, u.y) / std::abs(det))) + 1;
  const int cu = static_cast<int>(std::floor(fu)), cv = static_cast<int>(std::floor(fv));

  std::map<std::tuple<std::size_t, int, int>, bool> contained_edges;
  const double r2 = radius * radius;
  for (int i = cu - iu; i <= cu + iu; ++i) {
    for (int j = cv - iv; j <= cv + iv; ++j) {
      const Point t = static_cast<double>(i) * u + static_cast<double>(j) * v;
      if (norm(t - s.origin) > span) continue;
      for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
        const Point a = mesh.vertices[mesh.edges[e].tail] + t;
        const Point b = mesh.vertices[mesh.edges[e].head] + mesh.offset(mesh.edges[e].shift) + t;
        s.p_r += segment_disk_length(a, b, s.origin, radius, &s.n_r);
      }
      for (std::size_t f = 0; f < polys.size(); ++f) {
        std::vector<Point> moved;
        bool inside = true;
        for (const Point& p : polys[f].vertices()) {
          moved.push_back(p + t);
          const Point d = moved.back() - s.origin;
          inside = inside && dot(d, d) <= r2;
        }
        s.a_r += polygon_disk_area(moved, s.origin, radius);
        if (!inside) continue;
        ++s.contained_tiles;
        s.a0_r += std::abs(PolygonChain(moved).signed_area());
        for (std::size_t k = 0; k < mesh.faces[f].size(); ++k) {
          const auto sh = tail_shifts[f][k];
          contained_edges[{edge_index(mesh.faces[f][k]), i + sh[0], j + sh[1]}] = true;
        }
      }
    }
  }
  for (const auto& [key, unused] : contained_edges) s.p0_r += mesh.edge_length(std::get<0>(key));
  s.rho_hat = s.p_r / (kPi * radius * radius);
  if (s.a0_r > 0.0) s.contained_ratio = s.p0_r / s.a0_r;
  return s;
}

}  // namespace pentiso
