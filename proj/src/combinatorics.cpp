#include "pentiso/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pentiso/errors.hpp"
#include "pentiso/numeric.hpp"

namespace pentiso {

int VertexFigure::degree() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
}

namespace {

void tiling_dfs(std::span<const double> angles, std::size_t index, double remaining, int degree,
                int max_degree, std::vector<int>& current, std::vector<VertexFigure>& out) {
  if (index == angles.size()) {
    if (degree >= 3 && std::abs(remaining) <= kVertexAngleTol) out.push_back({current});
    return;
  }
  const int room = max_degree - degree;
  const int fit = static_cast<int>(std::floor((remaining + kVertexAngleTol) / angles[index]));
  const int top = std::min(room, fit);
  for (int k = 0; k <= top; ++k) {
    current[index] = k;
    tiling_dfs(angles, index + 1, remaining - k * angles[index], degree + k, max_degree, current,
               out);
  }
  current[index] = 0;
}

bool figure_less(const VertexFigure& a, const VertexFigure& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.multiplicities < b.multiplicities;
}

}  // namespace

std::vector<VertexFigure> angle_tilings(std::span<const double> angles,
                                        std::optional<std::size_t> required_index,
                                        int max_degree) {
  if (max_degree < 0 || max_degree > 12) throw DomainError("max_degree must lie in [0, 12]");
  for (double a : angles)
    if (!(a > 0.0)) throw DomainError("angles must be positive");
  if (required_index && *required_index >= angles.size())
    throw DomainError("required angle index out of range");
  std::vector<VertexFigure> out;
  std::vector<int> current(angles.size(), 0);
  tiling_dfs(angles, 0, kTwoPi, 0, max_degree, current, out);
  if (required_index) {
    std::erase_if(out, [&](const VertexFigure& f) { return f.multiplicities[*required_index] == 0; });
  }
  std::sort(out.begin(), out.end(), figure_less);
  return out;
}

std::vector<VertexFigure> angle_tilings(const AngleVector& angles,
                                        std::optional<std::size_t> required_index,
                                        int max_degree) {
  return angle_tilings(angles.radians(), required_index, max_degree);
}

bool tiles_all_five(const AngleVector& angles) {
  const auto figures = angle_tilings(angles);
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const bool used = std::any_of(figures.begin(), figures.end(),
                                  [i](const VertexFigure& f) { return f.multiplicities[i] > 0; });
    if (!used) return false;
  }
  return true;
}

int surround_capacity(int small_slots, int small_cap, int large_slots, int large_cap, int shared) {
  return surround_capacity({{small_slots, small_cap}, {large_slots, large_cap}}, shared);
}

int surround_capacity(const std::vector<SurroundGroup>& groups, int shared) {
  int total = -shared;
  for (const auto& g : groups) {
    if (g.slots < 0 || g.cap < 0) throw DomainError("surround counts must be nonnegative");
    total += g.slots * g.cap;
  }
  if (shared < 0) throw DomainError("surround counts must be nonnegative");
  return total;
}

RatioBound ratio_lower_bound(double p0, double p2) {
  const double p1 = cairo_perimeter();
  if (!(p0 < p1 && p1 < p2)) throw DomainError("ratio bound needs P0 < P1 < P2");
  return {p0, p1, p2, (p2 - p1) / (p1 - p0)};
}

double perimeter_threshold_for_ratio(double ratio, double p2) {
  const double p1 = cairo_perimeter();
  if (!(ratio > 0.0) || !(p2 > p1)) throw DomainError("threshold needs ratio > 0 and P2 > P1");
  return p1 - (p2 - p1) / ratio;
}

Rational torus_vertex_count(long pentagons, long quads) {
  if (pentagons < 0 || quads < 0) throw DomainError("tile counts must be nonnegative");
  // E = (5n + 4m)/2 and F = n + m; Euler characteristic 0 gives V = E - F
  const Rational edges = Rational(5 * pentagons + 4 * quads, 2);
  return edges - Rational(pentagons + quads);
}

std::string to_string(const Affine& a) {
  std::string s = to_string(a.n) + " n";
  if (a.m >= 0) return s + " + " + to_string(a.m) + " m";
  return s + " - " + to_string(Rational(-a.m)) + " m";
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
  LinearForm r;
  for (std::size_t i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

LinearForm LinearForm::operator*(const Rational& s) const {
  LinearForm r;
  for (std::size_t i = 0; i < 4; ++i) r.c[i] = c[i] * s;
  return r;
}

LinearForm LinearForm::operator-() const { return *this * Rational(-1); }

std::string to_string(const LinearForm& f) {
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (f.c[i] == 0) continue;
    const bool neg = f.c[i] < 0;
    const Rational mag = neg ? Rational(-f.c[i]) : f.c[i];
    if (s.empty()) {
      s += neg ? "-" : "";
    } else {
      s += neg ? " - " : " + ";
    }
    if (mag != 1) s += to_string(mag) + " ";
    s += kCountVariables[i];
  }
  return (s.empty() ? "0" : s) + " >= 0";
}

namespace {

LinearForm lf(Rational n, Rational m, Rational k3, Rational k4) {
  return {{std::move(n), std::move(m), std::move(k3), std::move(k4)}};
}

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

std::array<LinearForm, 2> scenario_inequalities(const CountingScenario& s) {
  if (s.surround_capacity < 0) throw InconsistentScenarioError("negative surround capacity");
  const Affine& v = s.vertex_bound;
  if (s.kind == ScenarioKind::EfficientShareLower) {
    return {lf(q(-1), s.surround_capacity / 10, q(3, 5), q(4, 5)), lf(v.n, v.m, q(-1), q(-1))};
  }
  return {lf(q(1), q(0), q(-3, 5), q(-4, 5)), lf(-v.n, -v.m, q(1), q(1))};
}

std::vector<DerivedBound> derive_k_bounds(const CountingScenario& s) {
  const auto f = scenario_inequalities(s);
  // witness: both inequalities tight
  const Rational det = f[0].c[2] * f[1].c[3] - f[0].c[3] * f[1].c[2];
  if (det == 0) throw InconsistentScenarioError("scenario inequalities are parallel in (k3, k4)");
  auto solve = [&](std::size_t var) {
    // c2 k3 + c3 k4 = -(c0 n + c1 m) for both forms, by Cramer's rule
    Affine out;
    for (std::size_t coord = 0; coord < 2; ++coord) {
      const Rational r0 = -f[0].c[coord], r1 = -f[1].c[coord];
      const Rational num = var == 2 ? r0 * f[1].c[3] - f[0].c[3] * r1 : f[0].c[2] * r1 - r0 * f[1].c[2];
      (coord == 0 ? out.n : out.m) = num / det;
    }
    return out;
  };
  const Affine w3 = solve(2), w4 = solve(3);

  std::vector<DerivedBound> out;
  for (std::size_t target : {std::size_t{3}, std::size_t{2}}) {
    const std::size_t other = target == 2 ? 3 : 2;
    const Rational a = f[0].c[other], b = f[1].c[other];
    if (!((a > 0 && b < 0) || (a < 0 && b > 0))) continue;
    const LinearForm g = f[0] * abs(b) + f[1] * abs(a);
    if (g.c[target] == 0) continue;
    DerivedBound d;
    d.variable = target == 2 ? "k3" : "k4";
    d.lower = g.c[target] > 0;
    d.name = d.variable + (d.lower ? "_low" : "_high");
    d.alpha = -g.c[0] / g.c[target];
    d.beta = -g.c[1] / g.c[target];
    d.witness_k3 = w3;
    d.witness_k4 = w4;
    out.push_back(std::move(d));
  }
  if (out.empty()) throw InconsistentScenarioError("no bound follows from the scenario");
  return out;
}

CountingScenario preset_scenario(const std::string& name) {
  const Affine quad_v{q(3, 2), q(1)};
  const Affine type2_v{q(3, 2), q(3, 2)};
  if (name == "quad_deg4") return {name, ScenarioKind::EfficientShareLower, 14, {q(3, 2), q(0)}};
  if (name == "type2_deg4") return {name, ScenarioKind::EfficientShareLower, 15, type2_v};
  if (name == "quad_upper") return {name, ScenarioKind::EfficientShareUpper, 0, {q(3, 2), q(-2)}};
  if (name == "type2_upper")
    return {name, ScenarioKind::EfficientShareUpper, 0, {q(3, 2), q(-5, 2)}};
  if (name == "quad_s_only") return {name, ScenarioKind::EfficientShareLower, 8, quad_v};
  if (name == "quad_three_s") return {name, ScenarioKind::EfficientShareLower, 14, quad_v};
  if (name == "type2_s_only") return {name, ScenarioKind::EfficientShareLower, 8, type2_v};
  if (name == "type2_three_s") return {name, ScenarioKind::EfficientShareLower, 16, type2_v};
  throw DomainError("unknown scenario '" + name + "'");
}

std::vector<std::string> preset_scenario_names() {
  return {"quad_deg4",   "type2_deg4",   "quad_upper",   "type2_upper",
          "quad_s_only", "quad_three_s", "type2_s_only", "type2_three_s"};
}

namespace {

// Solves sum_j lambda_j cols[j] = target exactly; nullopt unless the columns
// are independent and the system is consistent.
std::optional<std::vector<Rational>> solve_exact(const std::vector<const LinearForm*>& cols,
                                                 const LinearForm& target) {
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> a(4, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t j = 0; j < k; ++j) a[r][j] = cols[j]->c[r];
    a[r][k] = target.c[r];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t p = row;
    while (p < 4 && a[p][col] == 0) ++p;
    if (p == 4) return std::nullopt;
    std::swap(a[p], a[row]);
    const Rational piv = a[row][col];
    for (auto& v : a[row]) v /= piv;
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t j = 0; j <= k; ++j) a[r][j] -= factor * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < 4; ++r)
    if (a[r][k] != 0) return std::nullopt;
  std::vector<Rational> lambda(k);
  for (std::size_t r = 0; r < row; ++r) lambda[pivot_col[r]] = a[r][k];
  return lambda;
}

bool follows(const std::vector<const LinearForm*>& cited, const LinearForm& target) {
  const std::size_t k = cited.size();
  const std::size_t max_support = std::min<std::size_t>(k, 4);
  for (std::size_t size = 1; size <= max_support; ++size) {
    std::vector<bool> mask(k, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<const LinearForm*> cols;
      for (std::size_t j = 0; j < k; ++j)
        if (mask[j]) cols.push_back(cited[j]);
      const auto lambda = solve_exact(cols, target);
      if (lambda && std::all_of(lambda->begin(), lambda->end(), [](const Rational& l) { return l > 0; }))
        return true;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return false;
}

}  // namespace

CountingVerdict evaluate_counting_argument(const std::vector<ChainStep>& chain,
                                           const RatioBound& against) {
  if (chain.empty()) throw NonSequiturError(0, "empty chain");
  for (std::size_t s = 0; s < chain.size(); ++s) {
    const ChainStep& step = chain[s];
    if (step.form == LinearForm{}) throw NonSequiturError(s, "trivial inequality");
    if (step.premise) continue;
    std::vector<const LinearForm*> cited;
    if (step.from.empty()) {
      for (std::size_t j = 0; j < s; ++j) cited.push_back(&chain[j].form);
    } else {
      for (std::size_t j : step.from) {
        if (j >= s) throw NonSequiturError(s, "cites a later step");
        cited.push_back(&chain[j].form);
      }
    }
    if (cited.empty() || !follows(cited, step.form))
      throw NonSequiturError(s, "not a nonnegative combination of the cited steps: " +
                                    to_string(step.form));
  }
  const LinearForm& last = chain.back().form;
  if (!(last.c[0] < 0 && last.c[1] > 0 && last.c[2] == 0 && last.c[3] == 0))
    throw NonSequiturError(chain.size() - 1, "terminal step is not of the form n <= K m");
  CountingVerdict v;
  v.derived_ratio_cap = last.c[1] / -last.c[0];
  v.against = against;
  v.contradicts = to_double(v.derived_ratio_cap) <= against.value;
  return v;
}

std::vector<ChainStep> preset_chain(const std::string& name) {
  auto premise = [](LinearForm f, std::string why) { return ChainStep{std::move(f), true, {}, std::move(why)}; };
  auto derived = [](LinearForm f, std::vector<std::size_t> from, std::string why) {
    return ChainStep{std::move(f), false, std::move(from), std::move(why)};
  };
  if (name == "quad_s_only" || name == "type2_s_only" || name == "quad_three_s" ||
      name == "type2_three_s") {
    const bool quad = name.rfind("quad", 0) == 0;
    const bool three = name.find("three") != std::string::npos;
    const Rational cap_share = three ? (quad ? q(7, 5) : q(8, 5)) : q(4, 5);
    const Rational vm = quad ? q(1) : q(3, 2);
    const Rational bound_m = 5 * cap_share + 3 * vm;
    const long s_per_vertex = three ? 3 : 4;
    std::vector<ChainStep> c;
    c.push_back(premise(lf(q(-1), cap_share, q(3, 5), q(4, 5)), "efficient share of pentagon vertices"));
    c.push_back(premise(lf(q(3, 2), vm, q(-1), q(-1)), "efficient vertices at most all vertices"));
    c.push_back(derived(lf(q(-1, 2), bound_m, q(0), q(1)), {0, 1}, "eliminate k3"));
    c.push_back(premise(lf(q(1), q(0), q(0), q(-s_per_vertex)), "at most n copies of s"));
    // s_per_vertex * (k4 - n/2 + b m) + (n - s k4) = (1 - s/2) n + s b m
    const Rational n_coef = 1 - Rational(s_per_vertex, 2);
    const Rational m_coef = s_per_vertex * bound_m;
    c.push_back(derived(lf(q(-1), m_coef / -n_coef, q(0), q(0)), {2, 3}, "n <= K m"));
    return c;
  }
  if (name == "quad_a_count" || name == "type2_a_count") {
    const bool quad = name == "quad_a_count";
    const Rational vm = quad ? q(-2) : q(-5, 2);
    const Rational k4_m = -3 * vm;
    const Rational a_m = quad ? q(9) : q(44, 5);
    std::vector<ChainStep> c;
    c.push_back(premise(lf(q(1), q(0), q(-3, 5), q(-4, 5)), "each pentagon counted once over vertices"));
    c.push_back(premise(lf(q(-3, 2), -vm, q(1), q(1)), "efficient vertices at least the remainder"));
    c.push_back(derived(lf(q(1, 2), k4_m, q(0), q(-1)), {0, 1}, "upper bound on k4"));
    c.push_back(premise(lf(q(-1), a_m, q(0), q(1)), "enough slots for the n copies of a"));
    c.push_back(derived(lf(q(-1), 2 * (k4_m + a_m), q(0), q(0)), {2, 3}, "n <= K m"));
    return c;
  }
  throw DomainError("unknown chain '" + name + "'");
}

std::vector<std::string> preset_chain_names() {
  return {"quad_s_only", "quad_a_count", "quad_three_s", "type2_s_only", "type2_a_count",
          "type2_three_s"};
}

EpsilonThresholds planar_epsilon_thresholds() {
  EpsilonThresholds t;
  t.ratio_eps = bisect([](double e) { return (13.43 - 38.63 * e) / (1.0 + 38.63 * e) - 13.4; }, 0.0,
                       1e-3, 1e-16);
  t.truncation_eps = 1 - Rational(110, 134);
  return t;
}

Rational convex_between_band_ratio_cap(const Rational& reflex_share) {
  if (reflex_share < 0 || reflex_share > 1) throw DomainError("share must lie in [0, 1]");
  return 3 * (1 - reflex_share) + reflex_share;
}

}  // namespace pentiso
