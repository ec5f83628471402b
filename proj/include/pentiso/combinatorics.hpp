#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pentiso/geom.hpp"
#include "pentiso/rational.hpp"

namespace pentiso {

inline constexpr double kVertexAngleTol = 1e-7;

// Multiplicities m_i of each angle at a vertex; sum m_i a_i = 2pi.
struct VertexFigure {
  std::vector<int> multiplicities;

  int degree() const;
  friend bool operator==(const VertexFigure&, const VertexFigure&) = default;
  friend auto operator<=>(const VertexFigure&, const VertexFigure&) = default;
};

// Every vertex figure of degree 3..max_degree built from the given angles
// (radians). With required_index set, that angle must appear. Sorted by
// degree, then lexicographically by multiplicity vector.
std::vector<VertexFigure> angle_tilings(std::span<const double> angles,
                                        std::optional<std::size_t> required_index = {},
                                        int max_degree = 8);
std::vector<VertexFigure> angle_tilings(const AngleVector& angles,
                                        std::optional<std::size_t> required_index = {},
                                        int max_degree = 8);

bool tiles_all_five(const AngleVector& angles);

int surround_capacity(int small_slots, int small_cap, int large_slots, int large_cap, int shared);

// General form: sum of slots * cap over groups minus the shared count.
struct SurroundGroup {
  int slots = 0;
  int cap = 0;
};
int surround_capacity(const std::vector<SurroundGroup>& groups, int shared);

struct RatioBound {
  double p0 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double value = 0.0;
};

RatioBound ratio_lower_bound(double p0, double p2);
double perimeter_threshold_for_ratio(double ratio, double p2);

// V = E - F on a torus tiled by pentagons and quadrilaterals: 3n/2 + m.
Rational torus_vertex_count(long pentagons, long quads);

// alpha n + beta m
struct Affine {
  Rational n;
  Rational m;

  friend bool operator==(const Affine&, const Affine&) = default;
};
std::string to_string(const Affine& a);

enum class ScenarioKind {
  // (3/5)k3 + (4/5)k4 >= n - (capacity/10) m and k3 + k4 <= V
  EfficientShareLower,
  // (3/5)k3 + (4/5)k4 <= n and k3 + k4 >= V
  EfficientShareUpper,
};

struct CountingScenario {
  std::string name;
  ScenarioKind kind = ScenarioKind::EfficientShareLower;
  // Efficient pentagons around each pair of non-convex tiles.
  Rational surround_capacity = 0;
  Affine vertex_bound;
};

// Homogeneous linear form over (n, m, k3, k4).
struct LinearForm {
  std::array<Rational, 4> c;

  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator*(const Rational& s) const;
  LinearForm operator-() const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};
std::string to_string(const LinearForm& f);
inline constexpr std::array<const char*, 4> kCountVariables{"n", "m", "k3", "k4"};

struct DerivedBound {
  std::string name;      // k3_low, k3_high, k4_low, k4_high
  std::string variable;  // k3 or k4
  bool lower = true;
  Rational alpha;        // bound = alpha n + beta m
  Rational beta;
  // Point where both scenario inequalities hold with equality.
  Affine witness_k3;
  Affine witness_k4;
};

// The two scenario inequalities as forms f >= 0.
std::array<LinearForm, 2> scenario_inequalities(const CountingScenario& s);
std::vector<DerivedBound> derive_k_bounds(const CountingScenario& s);
CountingScenario preset_scenario(const std::string& name);
std::vector<std::string> preset_scenario_names();

struct ChainStep {
  LinearForm form;  // form >= 0
  bool premise = false;
  std::vector<std::size_t> from;  // cited earlier steps; empty cites all
  std::string justification;
};

struct CountingVerdict {
  Rational derived_ratio_cap;
  bool contradicts = false;
  RatioBound against;
};

CountingVerdict evaluate_counting_argument(const std::vector<ChainStep>& chain,
                                           const RatioBound& against);
std::vector<ChainStep> preset_chain(const std::string& name);
std::vector<std::string> preset_chain_names();

struct EpsilonThresholds {
  double ratio_eps = 0.0;
  Rational truncation_eps;
};
EpsilonThresholds planar_epsilon_thresholds();

// Efficient-pentagon share per non-convex tile when a fraction of the
// vertices carries a reflex angle: 3(1 - share) + share.
Rational convex_between_band_ratio_cap(const Rational& reflex_share = Rational(1, 5));

}  // namespace pentiso
