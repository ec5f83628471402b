#include "pentiso/geom.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pentiso/errors.hpp"

namespace pentiso {

AngleVector::AngleVector(std::vector<double> radians) : angles_(std::move(radians)) {
  if (angles_.size() < 3) throw DomainError("a polygon needs at least three angles");
  for (double a : angles_) {
    if (!(a > 0.0 && a < kTwoPi)) throw DomainError("interior angle outside (0, 2pi)");
  }
  const double expected = static_cast<double>(angles_.size() - 2) * kPi;
  if (std::abs(sum() - expected) > kAngleSumTol) {
    throw DomainError("angle sum " + std::to_string(sum()) + " differs from (n-2)pi");
  }
}

AngleVector AngleVector::from_degrees(std::span<const double> degrees) {
  std::vector<double> r(degrees.size());
  std::transform(degrees.begin(), degrees.end(), r.begin(), deg_to_rad);
  return AngleVector(std::move(r));
}

AngleVector AngleVector::from_degrees(std::initializer_list<double> degrees) {
  return from_degrees(std::span<const double>(degrees.begin(), degrees.size()));
}

std::vector<double> AngleVector::degrees() const {
  std::vector<double> d(angles_.size());
  std::transform(angles_.begin(), angles_.end(), d.begin(), rad_to_deg);
  return d;
}

double AngleVector::sum() const { return std::accumulate(angles_.begin(), angles_.end(), 0.0); }

AngleVector AngleVector::rotated(std::size_t k) const {
  std::vector<double> r = angles_;
  std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k % r.size()), r.end());
  return AngleVector(std::move(r));
}

AngleVector AngleVector::reflected() const {
  std::vector<double> r(angles_.rbegin(), angles_.rend());
  return AngleVector(std::move(r));
}

PolygonChain::PolygonChain(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw DomainError("a polygon chain needs at least three vertices");
}

double PolygonChain::signed_area() const {
  double twice = 0.0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) twice += cross(vertices_[i], vertices_[(i + 1) % n]);
  return 0.5 * twice;
}

namespace {

int orientation(Point a, Point b, Point c) {
  const double v = cross(b - a, c - a);
  const double scale = std::max({norm(b - a), norm(c - a), 1.0});
  if (v > 1e-14 * scale * scale) return 1;
  if (v < -1e-14 * scale * scale) return -1;
  return 0;
}

bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) - 1e-14 <= p.x && p.x <= std::max(a.x, b.x) + 1e-14 &&
         std::min(a.y, b.y) - 1e-14 <= p.y && p.y <= std::max(a.y, b.y) + 1e-14;
}

bool segments_intersect(Point a, Point b, Point c, Point d) {
  const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

}  // namespace

bool PolygonChain::is_simple() const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // adjacent edges share a vertex by construction
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_intersect(vertices_[i], vertices_[(i + 1) % n], vertices_[j],
                             vertices_[(j + 1) % n]))
        return false;
    }
  }
  return true;
}

ReferencePerimeters reference_perimeters() {
  return {regular_pentagon_perimeter(), cairo_perimeter(), 4.0, equilateral_triangle_perimeter()};
}

std::string_view to_string(PentagonClass c) {
  switch (c) {
    case PentagonClass::Convex: return "Convex";
    case PentagonClass::NonConvexType1: return "NonConvexType1";
    case PentagonClass::NonConvexType2: return "NonConvexType2";
  }
  return "?";
}

std::string_view to_string(SmallAngleVerdict v) {
  switch (v) {
    case SmallAngleVerdict::NotEfficient: return "NotEfficient";
    case SmallAngleVerdict::CairoPrismaticOnly: return "CairoPrismaticOnly";
    case SmallAngleVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

double cot_perimeter(std::span<const double> radians) {
  double s = 0.0;
  for (double a : radians) {
    if (!(a > 0.0 && a <= kPi)) throw DomainError("cot_perimeter needs angles in (0, pi]");
    s += 1.0 / std::tan(0.5 * a);
  }
  // cot(pi/2) evaluates to ~6e-17 rather than 0; clamp the tiny negatives
  return 2.0 * std::sqrt(std::max(s, 0.0));
}

double cot_perimeter(const AngleVector& angles) { return cot_perimeter(angles.radians()); }

CircumscribedPolygon circumscribe(const AngleVector& angles) {
  const std::size_t n = angles.size();
  std::vector<double> cots(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(angles[i] < kPi)) throw DomainError("circumscribe needs a convex angle vector");
    cots[i] = 1.0 / std::tan(0.5 * angles[i]);
  }
  const double sum_cot = std::accumulate(cots.begin(), cots.end(), 0.0);
  const double r = 1.0 / std::sqrt(sum_cot);

  std::vector<double> t(n);
  std::vector<Point> v(n);
  double phi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) phi += kPi - angles[i];
    t[i] = r * cots[i];
    // vertex i precedes tangent point i along the counterclockwise boundary
    const Point tangent{r * std::cos(phi), r * std::sin(phi)};
    const Point dir{-std::sin(phi), std::cos(phi)};
    v[i] = tangent - t[i] * dir;
  }
  return {angles, r, std::move(t), PolygonChain(std::move(v))};
}

PolygonMetrics polygon_metrics(const PolygonChain& chain) {
  double perimeter = 0.0;
  const std::size_t n = chain.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double len = norm(chain[(i + 1) % n] - chain[i]);
    if (len < kDegenerateEdge) throw DegenerateError("zero-length edge at vertex " + std::to_string(i));
    perimeter += len;
  }
  return {std::abs(chain.signed_area()), perimeter};
}

std::vector<double> interior_angles(const PolygonChain& chain) {
  const std::size_t n = chain.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point in = chain[i] - chain[(i + n - 1) % n];
    const Point outd = chain[(i + 1) % n] - chain[i];
    const double turn = std::atan2(cross(in, outd), dot(in, outd));
    out[i] = kPi - turn;
  }
  return out;
}

std::vector<double> edge_directions(const AngleVector& angles) {
  std::vector<double> theta(angles.size());
  double t = 0.0;
  for (std::size_t k = 0; k < angles.size(); ++k) {
    if (k > 0) t += kPi - angles[k];
    theta[k] = t;
  }
  return theta;
}

PolygonChain polygon_from_edges(const AngleVector& angles, std::span<const double> lengths) {
  if (lengths.size() != angles.size()) throw DomainError("one edge length per angle required");
  const auto theta = edge_directions(angles);
  std::vector<Point> v;
  v.reserve(angles.size());
  Point p{0.0, 0.0};
  double total = 0.0;
  for (std::size_t k = 0; k < angles.size(); ++k) {
    if (!(lengths[k] > 0.0)) throw DomainError("edge lengths must be positive");
    v.push_back(p);
    p = p + lengths[k] * Point{std::cos(theta[k]), std::sin(theta[k])};
    total += lengths[k];
  }
  if (norm(p) > kGeomTol * total) throw DomainError("edge lengths do not close the chain");
  return PolygonChain(std::move(v));
}

PolygonChain scaled_to_unit_area(const PolygonChain& chain) {
  const double area = std::abs(chain.signed_area());
  if (area <= 0.0) throw DegenerateError("zero-area chain");
  const double s = 1.0 / std::sqrt(area);
  std::vector<Point> v(chain.vertices().begin(), chain.vertices().end());
  const Point o = v.front();
  for (auto& p : v) p = o + s * (p - o);
  return PolygonChain(std::move(v));
}

PentagonClass classify_pentagon(const AngleVector& angles) {
  if (angles.size() != 5) throw DomainError("classify_pentagon needs five angles");
  const auto reflex = std::count_if(angles.radians().begin(), angles.radians().end(),
                                    [](double a) { return a > kPi; });
  switch (reflex) {
    case 0: return PentagonClass::Convex;
    case 1: return PentagonClass::NonConvexType1;
    case 2: return PentagonClass::NonConvexType2;
    default: throw DomainError("a pentagon with angle sum 3pi has at most two reflex angles");
  }
}

double nonconvex_perimeter_floor(PentagonClass c) {
  switch (c) {
    case PentagonClass::NonConvexType1: return 4.0;
    case PentagonClass::NonConvexType2: return equilateral_triangle_perimeter();
    case PentagonClass::Convex: break;
  }
  throw DomainError("no non-convex floor for a convex pentagon");
}

SmallAngleVerdict two_small_angles_test(const AngleVector& angles) {
  if (angles.size() != 5) throw DomainError("two_small_angles_test needs five angles");
  std::vector<double> a(angles.radians().begin(), angles.radians().end());
  std::sort(a.begin(), a.end());
  // the smallest pair average is attained by the two smallest angles
  const double avg = 0.5 * (a[0] + a[1]);
  if (avg < 0.5 * kPi - kAngleSumTol) return SmallAngleVerdict::NotEfficient;
  if (avg <= 0.5 * kPi + kAngleSumTol) return SmallAngleVerdict::CairoPrismaticOnly;
  return SmallAngleVerdict::Inconclusive;
}

bool is_efficient(double perimeter) { return perimeter <= cairo_perimeter() + kEfficiencyTol; }

}  // namespace pentiso
