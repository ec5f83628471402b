#pragma once

#include <cmath>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

namespace pentiso {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Angle-sum invariant and geometric assertions.
inline constexpr double kAngleSumTol = 1e-9;
inline constexpr double kGeomTol = 1e-9;
// Edges shorter than this are treated as degenerate.
inline constexpr double kDegenerateEdge = 1e-12;
// Slack on the inclusive efficiency boundary.
inline constexpr double kEfficiencyTol = 1e-12;

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const Point&, const Point&) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline Point rotate(Point p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Interior angles of a polygon in radians. Every angle lies in (0, 2pi) and
// the angles of an n-gon sum to (n-2)pi.
class AngleVector {
 public:
  explicit AngleVector(std::vector<double> radians);
  static AngleVector from_degrees(std::span<const double> degrees);
  static AngleVector from_degrees(std::initializer_list<double> degrees);

  std::size_t size() const { return angles_.size(); }
  double operator[](std::size_t i) const { return angles_[i]; }
  std::span<const double> radians() const { return angles_; }
  std::vector<double> degrees() const;
  double sum() const;

  // Cyclic rotation by k positions and reversal of the vertex order.
  AngleVector rotated(std::size_t k) const;
  AngleVector reflected() const;

  friend bool operator==(const AngleVector&, const AngleVector&) = default;

 private:
  std::vector<double> angles_;
};

// A closed planar chain; simple and counterclockwise when produced by this
// library.
class PolygonChain {
 public:
  PolygonChain() = default;
  explicit PolygonChain(std::vector<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  std::span<const Point> vertices() const { return vertices_; }

  double signed_area() const;
  bool is_simple() const;

 private:
  std::vector<Point> vertices_;
};

struct PolygonMetrics {
  double area = 0.0;
  double perimeter = 0.0;
};

struct CircumscribedPolygon {
  AngleVector angles;
  double inradius = 0.0;
  // t_i = r cot(a_i / 2); edge i runs from vertex i to vertex i+1 and has
  // length t_i + t_{i+1}.
  std::vector<double> tangent_lengths;
  PolygonChain chain;
};

struct ReferencePerimeters {
  double regular_pentagon = 0.0;
  double cairo_prismatic = 0.0;
  double square = 0.0;
  double equilateral_triangle = 0.0;
};

ReferencePerimeters reference_perimeters();

// 2 sqrt(2 + sqrt 3): unit-area Cairo and Prismatic pentagons.
inline double cairo_perimeter() { return 2.0 * std::sqrt(2.0 + std::sqrt(3.0)); }
inline double regular_pentagon_perimeter() {
  return 2.0 * std::sqrt(5.0) * std::pow(5.0 - 2.0 * std::sqrt(5.0), 0.25);
}
inline double equilateral_triangle_perimeter() {
  return 3.0 * std::sqrt(4.0 / std::sqrt(3.0));
}

enum class PentagonClass { Convex, NonConvexType1, NonConvexType2 };
std::string_view to_string(PentagonClass c);

enum class SmallAngleVerdict { NotEfficient, CairoPrismaticOnly, Inconclusive };
std::string_view to_string(SmallAngleVerdict v);

// Unit-area perimeter of the polygon circumscribed about a circle with the
// given angles: 2 sqrt(sum cot(a_i / 2)). Angles must lie in (0, pi].
double cot_perimeter(const AngleVector& angles);
// Same formula without the angle-sum check; used on solver iterates.
double cot_perimeter(std::span<const double> radians);

// Unit-area polygon circumscribed about a circle centred at the origin, with
// the first tangent point on the positive x-axis. Angles must lie in (0, pi).
CircumscribedPolygon circumscribe(const AngleVector& angles);

// Absolute shoelace area and edge-length sum.
PolygonMetrics polygon_metrics(const PolygonChain& chain);

// Interior angles of a counterclockwise chain, each in (0, 2pi).
std::vector<double> interior_angles(const PolygonChain& chain);

// Direction of edge k (vertex k to k+1) when edge 0 points along +x and the
// chain turns left by pi - a_k at vertex k.
std::vector<double> edge_directions(const AngleVector& angles);

// Builds the chain with the given angles and edge lengths. The lengths must
// close the chain to within kGeomTol relative to the perimeter.
PolygonChain polygon_from_edges(const AngleVector& angles, std::span<const double> lengths);

// Scales a chain about its first vertex to unit area.
PolygonChain scaled_to_unit_area(const PolygonChain& chain);

PentagonClass classify_pentagon(const AngleVector& angles);

// Perimeter lower bound for a unit-area non-convex pentagon: the square for
// Type 1, the equilateral triangle for Type 2 (convex hull argument).
double nonconvex_perimeter_floor(PentagonClass c);

SmallAngleVerdict two_small_angles_test(const AngleVector& angles);

// Inclusive comparison against the Cairo/Prismatic perimeter.
bool is_efficient(double perimeter);

}  // namespace pentiso
