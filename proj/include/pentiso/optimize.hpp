#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pentiso/geom.hpp"

namespace pentiso {

// sum_i coeffs[i] * a_i = rhs (radians).
struct AngleRelation {
  std::vector<int> coeffs;
  double rhs = 0.0;
};

struct AngleConstraintSet {
  std::size_t n = 5;
  std::vector<std::pair<std::size_t, double>> fixed;  // (index, radians)
  std::vector<AngleRelation> relations;
  // Per-angle closed bounds in radians; empty means (0, pi).
  std::vector<std::pair<double, double>> box;
  // Convex pentagons only: an optimum at an angle of exactly pi is rejected.
  bool convex_only = true;

  AngleConstraintSet& fix_deg(std::size_t index, double deg);
  AngleConstraintSet& relate_deg(std::vector<int> coeffs, double rhs_deg);
  AngleConstraintSet& equal(std::size_t i, std::size_t j);
  AngleConstraintSet& bound_deg(std::size_t index, double lo_deg, double hi_deg);
};

struct CaseAudit {
  std::string label;
  // candidate, excluded, not_efficient, infeasible, relaxation_lower_bound
  std::string status;
  double minimum = 0.0;  // NaN when the case yields no pentagon
  std::vector<double> angles_deg;
  std::string note;
};

struct MinimizationResult {
  AngleVector angles;
  double perimeter = 0.0;
  CircumscribedPolygon construction;
  std::vector<CaseAudit> case_audit;
};

struct InscribedPentagonParams {
  double r = 0.0;
  double alpha = 0.0;  // radians
  double e = 0.0;
  double perimeter = 0.0;
};

struct GridOracleConfig {
  double resolution = 0.05;  // degrees
  int refinement_rounds = 3;
};

struct AngleBounds {
  double a_min = 0.0;  // radians
  double a_max = 0.0;
};

struct EdgeBounds {
  double alpha_lo = 0.0;  // radians; maps to e_max
  double alpha_hi = 0.0;  // radians; maps to e_min
  double e_min = 0.0;
  double e_max = 0.0;
};

struct CurvePoint {
  double angle_deg = 0.0;
  double excess_perimeter = 0.0;
};

struct Deg3Case {
  int number = 0;
  std::string status;      // infeasible, not_efficient, minimum
  double minimum = 0.0;    // perimeter, or the forced angle bound for case 2 (degrees)
  double argmin_s_deg = 0.0;
  std::string note;
};

// Equality system and bounds reduced to a free parametrization a = p + N z.
struct ReducedConstraints {
  std::vector<double> particular;
  std::vector<std::vector<double>> null_basis;  // each entry has n components
  std::vector<double> lo, hi;
};

ReducedConstraints reduce_constraints(const AngleConstraintSet& c);

MinimizationResult minimize_perimeter(const AngleConstraintSet& constraints);

// Independent exhaustive grid scan with local refinement.
MinimizationResult grid_oracle(const AngleConstraintSet& constraints,
                               const GridOracleConfig& cfg = {});

// Named constraint sets: unconstrained, degree_four, outside_band, two_right.
AngleConstraintSet preset_constraints(const std::string& name);
std::vector<std::string> preset_names();

// Perimeter with one angle a and the other four equal.
double one_free_angle_perimeter(double a);

AngleBounds efficient_angle_bounds();

// Minimal pentagon inscribed in a circle with edges (e, x, x, x, x) for a
// fixed central half-angle alpha of the four equal edges.
InscribedPentagonParams inscribed_from_alpha(double alpha);
InscribedPentagonParams inscribed_given_edge(double e);
EdgeBounds efficient_edge_bounds(double target_perimeter);
EdgeBounds efficient_edge_bounds();

double min_triangle_given_edge(double e);

MinimizationResult five_tile_deg4_minimizer();
// The constraint sets behind the solver-driven five-tile cases.
std::vector<std::pair<std::string, AngleConstraintSet>> five_tile_case_constraints();

// Case 1 relaxation (90, s-90, 540-2s, s/2, s/2), s in degrees.
double five_tile_relaxation_perimeter(double s_deg);
// Interval of s where the relaxation undercuts the champion.
std::pair<double, double> five_tile_relaxation_window();

std::vector<Deg3Case> quad_deg3_case_scan(std::optional<std::pair<double, double>> s_range_deg = {});

std::vector<CurvePoint> one_angle_curve(double lo_deg, double hi_deg, double step_deg);

}  // namespace pentiso
