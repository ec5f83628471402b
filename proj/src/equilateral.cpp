#include "pentiso/equilateral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "pentiso/errors.hpp"
#include "pentiso/numeric.hpp"

namespace pentiso {

AdjacentFamilyPentagon adjacent_family(double a1) {
  if (!(a1 > 0.0 && a1 < kPi)) throw DomainError("a1 must lie in (0, pi)");
  AdjacentFamilyPentagon p;
  p.a1 = a1;
  p.x1 = 1.0 / std::sqrt(std::sin(a1) + std::sqrt(3.0) / 4.0);
  const double x = p.x1;
  const Point v0{0.0, 0.0}, v1{x, 0.0};
  const Point v3{x * std::cos(a1), x * std::sin(a1)};
  const Point v2 = v1 + v3;
  // the far rhombus edge v2 -> v3 is horizontal, so the cap apex sits straight above it
  const Point cap = 0.5 * (v2 + v3) + Point{0.0, std::sqrt(3.0) / 2.0 * x};
  p.chain = PolygonChain({v0, v1, v2, cap, v3});
  return p;
}

double nonadjacent_t3_area(double a1, double x) {
  const double b1 = 2.0 * x * std::sin(0.5 * a1);
  const double b2 = 2.0 * std::sqrt(x * x - 0.25 * b1 * b1);
  const double s = 0.5 * (b1 + b2 + x);
  const double h = s * (s - b1) * (s - b2) * (s - x);
  if (!(h > 0.0)) throw InfeasibleError("T3 violates the triangle inequality");
  return std::sqrt(h);
}

std::pair<double, double> nonadjacent_feasible_range() {
  // |2 sin(a1/2) - 2 cos(a1/2)| < 1
  const double d = std::asin(0.5 / std::sqrt(2.0));
  return {2.0 * (0.25 * kPi - d), 2.0 * (0.25 * kPi + d)};
}

NonAdjacentFamilyPentagon nonadjacent_family(double a1) {
  if (!(a1 > 0.0 && a1 < kPi)) throw DomainError("a1 must lie in (0, pi)");
  NonAdjacentFamilyPentagon p;
  p.a1 = a1;
  p.a2 = kPi - a1;
  // every piece scales with x^2, so solve at x = 1 and rescale
  const double unit_area = std::sin(a1) + nonadjacent_t3_area(a1, 1.0);
  const double x = 1.0 / std::sqrt(unit_area);
  p.x2 = x;
  p.base1 = 2.0 * x * std::sin(0.5 * a1);
  p.base2 = 2.0 * std::sqrt(x * x - 0.25 * p.base1 * p.base1);

  // T3 = (v0, v2, v4) counterclockwise, T1 and T2 folded outward
  const Point v0{0.0, 0.0}, v2{p.base1, 0.0};
  const double cos0 = (p.base1 * p.base1 + x * x - p.base2 * p.base2) / (2.0 * p.base1 * x);
  const double ang0 = std::acos(std::clamp(cos0, -1.0, 1.0));
  const Point v4{x * std::cos(ang0), x * std::sin(ang0)};
  const Point v1{0.5 * p.base1, -x * std::cos(0.5 * a1)};
  const Point d = v4 - v2;
  const double len = norm(d);
  const Point outward{d.y / len, -d.x / len};
  const Point v3 = 0.5 * (v2 + v4) + (x * std::cos(0.5 * p.a2)) * outward;
  p.chain = PolygonChain({v0, v1, v2, v3, v4});
  return p;
}

Point closure_residual(const AngleVector& angles) {
  Point r{};
  for (double t : edge_directions(angles)) r = r + Point{std::cos(t), std::sin(t)};
  return r;
}

namespace {

AngleVector x_angles(double a, double c) {
  return AngleVector({a, kPi - 0.5 * a, c, kPi - 0.5 * (a + c), kPi - 0.5 * c});
}

Point x_residual(double a, double c) { return closure_residual(x_angles(a, c)); }

std::optional<std::pair<double, double>> newton_x(double a, double c) {
  constexpr double h = 1e-7;
  for (int it = 0; it < 100; ++it) {
    if (!(a > 0.0 && c > 0.0 && a + c < kTwoPi && a < kTwoPi && c < kTwoPi)) return std::nullopt;
    const Point r = x_residual(a, c);
    const Point ra = (1.0 / (2.0 * h)) * (x_residual(a + h, c) - x_residual(a - h, c));
    const Point rc = (1.0 / (2.0 * h)) * (x_residual(a, c + h) - x_residual(a, c - h));
    const double det = ra.x * rc.y - rc.x * ra.y;
    if (std::abs(det) < 1e-14) return std::nullopt;
    const double da = -(r.x * rc.y - rc.x * r.y) / det;
    const double dc = -(ra.x * r.y - r.x * ra.y) / det;
    // damp steps larger than 10 degrees
    const double scale = std::min(1.0, deg_to_rad(10.0) / std::max(std::abs(da), std::abs(dc)));
    a += scale * da;
    c += scale * dc;
    if (std::max(std::abs(da), std::abs(dc)) < 1e-12) break;
  }
  if (norm(x_residual(a, c)) > 1e-10) return std::nullopt;
  return std::make_pair(a, c);
}

}  // namespace

SpecialPentagonX solve_special_X(double a_start, double c_start) {
  auto solved = newton_x(a_start, c_start);
  if (!solved) {
    // restart from a coarse grid when the seed falls outside the basin
    double best = std::numeric_limits<double>::infinity();
    double ba = a_start, bc = c_start;
    for (double a = 40.0; a <= 140.0; a += 2.0) {
      for (double c = 40.0; c <= 140.0; c += 2.0) {
        try {
          const double r = norm(x_residual(deg_to_rad(a), deg_to_rad(c)));
          if (r < best) {
            best = r;
            ba = deg_to_rad(a);
            bc = deg_to_rad(c);
          }
        } catch (const DomainError&) {
        }
      }
    }
    solved = newton_x(ba, bc);
  }
  if (!solved) throw ConvergenceError("equilateral closure for X did not converge");
  SpecialPentagonX x;
  x.a = solved->first;
  x.c = solved->second;
  x.b = kPi - 0.5 * x.a;
  x.d = kPi - 0.5 * (x.a + x.c);
  x.e = kPi - 0.5 * x.c;
  const AngleVector angles = x.angles();
  // the residual is below 1e-10, so closing with unit edges is exact enough
  std::vector<Point> pts;
  Point p{};
  for (double t : edge_directions(angles)) {
    pts.push_back(p);
    p = p + Point{std::cos(t), std::sin(t)};
  }
  const double area = std::abs(PolygonChain(pts).signed_area());
  x.side = 1.0 / std::sqrt(area);
  for (auto& q : pts) q = x.side * q;
  x.chain = PolygonChain(std::move(pts));
  return x;
}

EquilateralChampion equilateral_champion() {
  EquilateralChampion out;
  auto degrees_of = [](const PolygonChain& c) {
    std::vector<double> d;
    for (double a : interior_angles(c)) d.push_back(rad_to_deg(a));
    return d;
  };

  const auto adj = grid_golden_min([](double a) { return adjacent_family(a).perimeter(); },
                                   deg_to_rad(60.0), deg_to_rad(120.0));
  const auto adj_p = adjacent_family(adj.x);
  out.candidates.push_back({"adjacent", adj_p.perimeter(), degrees_of(adj_p.chain)});

  const auto range = nonadjacent_feasible_range();
  const auto non = grid_golden_min([](double a) { return nonadjacent_family(a).perimeter(); },
                                   range.first + 1e-9, range.second - 1e-9);
  const auto non_p = nonadjacent_family(non.x);
  out.candidates.push_back({"nonadjacent", non_p.perimeter(), degrees_of(non_p.chain)});

  const auto x = solve_special_X();
  out.candidates.push_back({"special", x.perimeter(), x.angles().degrees()});

  std::size_t best = 0;
  for (std::size_t i = 1; i < out.candidates.size(); ++i)
    if (out.candidates[i].perimeter < out.candidates[best].perimeter) best = i;
  out.family = out.candidates[best].family;
  out.perimeter = out.candidates[best].perimeter;
  out.angles_deg = out.candidates[best].angles_deg;
  out.pentagon = best == 0 ? adj_p.chain : best == 1 ? non_p.chain : x.chain;
  return out;
}

}  // namespace pentiso
