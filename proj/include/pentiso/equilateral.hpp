#pragma once

#include <string>
#include <vector>

#include "pentiso/geom.hpp"

namespace pentiso {

// Rhombus with angle a1 capped by an equilateral triangle.
struct AdjacentFamilyPentagon {
  double a1 = 0.0;
  double x1 = 0.0;
  PolygonChain chain;
  double perimeter() const { return 5.0 * x1; }
};

// Isosceles triangles T1 (apex a1) and T2 (apex pi - a1) joined by T3 with
// sides A1, A2 and x2.
struct NonAdjacentFamilyPentagon {
  double a1 = 0.0;
  double a2 = 0.0;
  double x2 = 0.0;
  double base1 = 0.0;  // A1
  double base2 = 0.0;  // A2
  PolygonChain chain;
  double perimeter() const { return 5.0 * x2; }
};

struct SpecialPentagonX {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0;  // radians
  double side = 0.0;  // unit-area side length
  PolygonChain chain;

  AngleVector angles() const { return AngleVector({a, b, c, d, e}); }
  double perimeter() const { return 5.0 * side; }
};

struct EquilateralCandidate {
  std::string family;
  double perimeter = 0.0;
  std::vector<double> angles_deg;
};

struct EquilateralChampion {
  std::string family;
  PolygonChain pentagon;
  double perimeter = 0.0;
  std::vector<double> angles_deg;
  std::vector<EquilateralCandidate> candidates;
};

AdjacentFamilyPentagon adjacent_family(double a1);
NonAdjacentFamilyPentagon nonadjacent_family(double a1);
// Range of a1 for which T3 satisfies the triangle inequality.
std::pair<double, double> nonadjacent_feasible_range();
double nonadjacent_t3_area(double a1, double x);

// Sum of unit edge vectors with directions accumulating pi - a_k.
Point closure_residual(const AngleVector& angles);

SpecialPentagonX solve_special_X(double a_start = deg_to_rad(70.0), double c_start = deg_to_rad(90.0));

EquilateralChampion equilateral_champion();

}  // namespace pentiso
