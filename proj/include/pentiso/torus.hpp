#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pentiso/geom.hpp"

namespace pentiso {

inline constexpr double kMeshTol = 1e-8;

// Edge from tail to the copy of head translated by shift[0] u + shift[1] v.
struct MeshEdge {
  std::size_t tail = 0;
  std::size_t head = 0;
  std::array<int, 2> shift{0, 0};

  friend bool operator==(const MeshEdge&, const MeshEdge&) = default;
};

// A face is a cycle of oriented edge references: k traverses edge k forward
// and ~k (that is -k - 1) traverses it backward.
using OrientedEdge = long;
inline constexpr std::size_t edge_index(OrientedEdge e) {
  return static_cast<std::size_t>(e >= 0 ? e : ~e);
}
inline constexpr bool edge_reversed(OrientedEdge e) { return e < 0; }

struct TilingMesh {
  std::optional<std::array<Point, 2>> lattice;  // none for a planar patch
  std::vector<Point> vertices;
  std::vector<MeshEdge> edges;
  std::vector<std::vector<OrientedEdge>> faces;

  bool is_torus() const { return lattice.has_value(); }
  // Translation carried by an edge shift.
  Point offset(const std::array<int, 2>& shift) const;
  // Planar polygon of a face, starting at the tail of its first edge.
  PolygonChain face_polygon(std::size_t f) const;
  // Vertex index at the start of each oriented edge of a face.
  std::vector<std::size_t> face_vertices(std::size_t f) const;
  double edge_length(std::size_t e) const;
};

struct Violation {
  std::string kind;  // closure, edge_use, t_junction, area, face_angles, vertex_angles, euler
  std::string location;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  long vertices = 0;
  long edges = 0;
  long faces = 0;
  long euler_characteristic = 0;
  std::vector<Violation> violations;
};

struct TileCensus {
  long n = 0;  // efficient pentagons
  long m = 0;  // non-convex tiles
  long count_c1 = 0, count_c2 = 0, count_n1 = 0, count_n2 = 0;
  double c1 = 0.0, c2 = 0.0, n1 = 0.0, n2 = 0.0;
  long k3 = 0, k4 = 0;  // efficient vertices by degree
  long vertices = 0;
  long inefficient_vertices = 0;
};

struct TruncationStats {
  double radius = 0.0;
  Point origin;
  double p_r = 0.0;   // tiling edge length inside the disk
  double a_r = 0.0;   // tile area inside the disk
  double p0_r = 0.0;  // edges of wholly contained tiles, each counted once
  double a0_r = 0.0;  // area of wholly contained tiles
  long contained_tiles = 0;
  long n_r = 0;       // circle-edge crossings
  double rho_hat = 0.0;
  std::optional<double> contained_ratio;  // p0_r / a0_r
};

// Builds a mesh from polygons, merging vertices that agree modulo the lattice.
TilingMesh mesh_from_polygons(const std::vector<std::vector<Point>>& polygons,
                              std::optional<std::array<Point, 2>> lattice);

TilingMesh build_cairo(int p, int q);
TilingMesh build_prismatic(int p, int q);
// Unit squares on a p x q torus.
TilingMesh build_square_grid(int p, int q);

ValidationReport validate(const TilingMesh& mesh);
double perimeter_per_tile(const TilingMesh& mesh);
TileCensus census(const TilingMesh& mesh);

// Per-vertex list of incident faces (with multiplicity).
std::vector<std::vector<std::size_t>> vertex_faces(const TilingMesh& mesh);

// Unrolls a torus mesh into the plane and measures it against a disk.
TruncationStats truncate(const TilingMesh& mesh, double radius, std::optional<Point> origin = {});
TilingMesh build_named(const std::string& name, int p, int q);

// Area of a simple polygon intersected with a disk.
double polygon_disk_area(std::span<const Point> polygon, Point centre, double radius);
// Length of a segment inside a disk and the number of boundary crossings.
double segment_disk_length(Point a, Point b, Point centre, double radius, long* crossings = nullptr);

}  // namespace pentiso
