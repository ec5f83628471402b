// Acceptance harness: one PASS/FAIL line per criterion.
//   pentiso_acceptance              all criteria, exit 1 if any fails
//   pentiso_acceptance --report     all criteria, exit 0 once the report is printed
//   pentiso_acceptance --criterion N

#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pentiso/claims.hpp"
#include "pentiso/combinatorics.hpp"
#include "pentiso/errors.hpp"
#include "pentiso/geom.hpp"
#include "pentiso/optimize.hpp"
#include "pentiso/torus.hpp"

using namespace pentiso;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(const char* f, double a) {
  char b[128];
  std::snprintf(b, sizeof b, f, a);
  return b;
}

const std::map<std::string, ClaimResult>& results() {
  static const std::map<std::string, ClaimResult> m = [] {
    std::map<std::string, ClaimResult> out;
    for (const auto& r : run_claims()) out.emplace(r.id, r);
    return out;
  }();
  return m;
}

void require_pass(Verdict& v, const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    const auto it = results().find(id);
    if (it == results().end()) {
      v.require(false, id + " missing");
      continue;
    }
    const auto& r = it->second;
    char b[256];
    std::snprintf(b, sizeof b, "%s expected %.6g computed %.6g err %.2e tol %.2e", id.c_str(), r.expected, r.computed,
                  r.abs_err, r.tol);
    v.require(r.status == ClaimStatus::Pass, b);
  }
}

void require_recorded(Verdict& v, const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    const auto it = results().find(id);
    v.require(it != results().end() && it->second.status != ClaimStatus::Fail, id + " not recorded");
  }
}

Verdict criterion_1() {
  Verdict v;
  require_pass(v, {"perimeter.cairo", "perimeter.regular_pentagon", "perimeter.square", "perimeter.triangle"});
  v.require(std::abs(cot_perimeter(AngleVector::from_degrees({90, 90, 120, 120, 120})) - cairo_perimeter()) < 1e-12,
            "Cairo closed form");
  v.require(std::abs(cot_perimeter(AngleVector::from_degrees({108, 108, 108, 108, 108})) -
                     regular_pentagon_perimeter()) < 1e-12,
            "regular closed form");
  v.require(std::abs(cot_perimeter(AngleVector::from_degrees({60, 60, 60})) - equilateral_triangle_perimeter()) < 1e-12,
            "triangle closed form");
  return v;
}

Verdict criterion_2() {
  Verdict v;
  require_pass(v, {"angle_bounds.min", "angle_bounds.max"});
  return v;
}

Verdict criterion_3() {
  Verdict v;
  require_pass(v, {"edge_bounds.e_min", "edge_bounds.e_max", "edge_bounds.alpha_lo", "edge_bounds.alpha_hi"});
  return v;
}

Verdict criterion_4() {
  Verdict v;
  require_pass(v, {"extremal.champion", "extremal.degree_four", "extremal.outside_band", "extremal.two_pairs",
                   "extremal.case_pentagon", "extremal.deg3_threshold"});
  // each extremal value against the independent grid oracle
  std::vector<std::pair<std::string, AngleConstraintSet>> sets;
  for (const auto& [label, c] : five_tile_case_constraints())
    if (label == "1b three equal, x + 2y = 360" || label == "1d x + 2y = 360, 2z + y = 360") sets.emplace_back(label, c);
  sets.emplace_back("degree_four", preset_constraints("degree_four"));
  sets.emplace_back("outside_band", preset_constraints("outside_band"));
  AngleConstraintSet pairs;
  pairs.fix_deg(0, 90).fix_deg(1, 90).fix_deg(2, 90);
  sets.emplace_back("two_pairs", pairs);
  const auto ab = efficient_angle_bounds();
  AngleConstraintSet case4;
  case4.relate_deg({3, 1, 0, 0, 0}, 360).relate_deg({3, 0, -2, 0, 0}, 0).equal(3, 4).bound_deg(
      0, rad_to_deg(ab.a_min), 90);
  sets.emplace_back("deg3_case4", case4);
  v.require(sets.size() == 6, "oracle constraint sets missing");
  for (const auto& [label, c] : sets) {
    const double s = minimize_perimeter(c).perimeter;
    const double o = grid_oracle(c).perimeter;
    v.require(std::abs(s - o) < 1e-3, label + fmt(" solver vs oracle differ by %.2e", std::abs(s - o)));
  }
  return v;
}

Verdict criterion_5() {
  Verdict v;
  require_pass(v, {"triangle.e_1081"});
  return v;
}

Verdict criterion_6() {
  Verdict v;
  require_pass(v, {"ratio.2_6", "ratio.2_63", "ratio.13_4", "ratio.13_43", "ratio.15_554", "ratio.31_1753",
                   "ratio.24_117", "ratio.34_77"});
  require_recorded(v, {"ratio.15_554.full", "ratio.31_1753.full", "ratio.24_117.published", "ratio.34_77.published"});
  return v;
}

Verdict criterion_7() {
  Verdict v;
  require_pass(v, {"surround.11", "surround.13", "surround.10", "surround.14", "surround.15", "surround.16",
                   "surround.8"});
  return v;
}

Verdict criterion_8() {
  Verdict v;
  require_pass(v, {"counting.quad_deg4.k4_low", "counting.type2_deg4.k4_low", "counting.quad_upper.k3_low",
                   "counting.quad_upper.k4_high", "counting.quad_three_s.k4_low", "counting.type2_upper.k3_low",
                   "counting.type2_upper.k4_high", "counting.type2_s_only.k4_low", "counting.type2_three_s.k4_low"});
  return v;
}

Verdict criterion_9() {
  Verdict v;
  require_pass(v, {"chain.quad_s_only", "chain.quad_a_count", "chain.quad_three_s", "chain.type2_s_only",
                   "chain.type2_a_count", "chain.type2_three_s", "threshold.3_8458", "threshold.3_8495",
                   "chain.quad_s_only.contradicts", "chain.quad_a_count.contradicts",
                   "chain.type2_s_only.contradicts", "chain.type2_a_count.contradicts"});
  return v;
}

Verdict criterion_10() {
  Verdict v;
  require_pass(v, {"planar.ratio_eps", "planar.truncation_eps", "planar.band_ratio_cap"});
  const auto t = planar_epsilon_thresholds();
  v.require(t.truncation_eps == 1 - Rational(110, 134), "truncation epsilon is not 1 - 11/13.4 exactly");
  v.require(convex_between_band_ratio_cap() == Rational(13, 5), "band cap is not 13/5");
  return v;
}

Verdict criterion_11() {
  Verdict v;
  require_pass(v, {"equilateral.adjacent.x1", "equilateral.adjacent.perimeter", "equilateral.nonadjacent.x2",
                   "equilateral.champion.perimeter", "equilateral.champion.angle_small",
                   "equilateral.champion.angle_large", "equilateral.x.A", "equilateral.x.B", "equilateral.x.C",
                   "equilateral.x.D", "equilateral.x.E", "equilateral.x.cot_bound"});
  return v;
}

Verdict criterion_12() {
  Verdict v;
  std::mt19937 rng(20240607);
  std::uniform_real_distribution<double> u(0.3, 1.0);
  std::normal_distribution<double> g(0.0, 0.08);
  int samples = 0, attempts = 0;
  double worst = 1e9;
  while (samples < 500 && attempts < 100000) {
    ++attempts;
    std::vector<double> w(5);
    double s = 0;
    for (auto& x : w) s += (x = u(rng));
    bool convex = true;
    for (auto& x : w) convex = convex && (x = x / s * 3.0 * kPi) < kPi - 0.05;
    if (!convex) continue;
    const AngleVector a(w);
    const auto base = circumscribe(a);
    const auto dirs = edge_directions(a);
    std::vector<double> len(5), d(5);
    for (std::size_t k = 0; k < 5; ++k) len[k] = base.tangent_lengths[k] + base.tangent_lengths[(k + 1) % 5];
    for (auto& x : d) x = g(rng);
    double cxx = 0, cxy = 0, cyy = 0, bx = 0, by = 0;
    for (std::size_t k = 0; k < 5; ++k) {
      const double c = std::cos(dirs[k]), sn = std::sin(dirs[k]);
      cxx += c * c, cxy += c * sn, cyy += sn * sn, bx += c * d[k], by += sn * d[k];
    }
    const double det = cxx * cyy - cxy * cxy;
    const double lx = (cyy * bx - cxy * by) / det, ly = (cxx * by - cxy * bx) / det;
    bool positive = true;
    for (std::size_t k = 0; k < 5; ++k) {
      len[k] += d[k] - lx * std::cos(dirs[k]) - ly * std::sin(dirs[k]);
      positive = positive && len[k] > 1e-6;
    }
    if (!positive) continue;
    const auto chain = scaled_to_unit_area(polygon_from_edges(a, len));
    worst = std::min(worst, polygon_metrics(chain).perimeter - cot_perimeter(a));
    ++samples;
  }
  v.require(samples == 500, "too few valid perturbations");
  v.require(worst >= -1e-9, fmt("a perturbation beat the formula by %.3e", -worst));
  v.detail += (v.detail.empty() ? "" : "; ") + fmt("min margin %.3e over 500 samples", worst);
  return v;
}

std::set<std::vector<int>> brute_tilings(const std::vector<double>& a, int max_degree) {
  std::set<std::vector<int>> out;
  std::vector<int> m(a.size(), 0);
  for (;;) {
    int degree = 0;
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) degree += m[i], s += m[i] * a[i];
    if (degree >= 3 && degree <= max_degree && std::abs(s - kTwoPi) <= kVertexAngleTol) out.insert(m);
    std::size_t k = 0;
    while (k < m.size() && ++m[k] > max_degree) m[k++] = 0;
    if (k == m.size()) break;
  }
  return out;
}

Verdict criterion_13() {
  Verdict v;
  std::mt19937 rng(1312);
  const double nice[] = {30, 45, 60, 72, 80, 90, 100, 105, 108, 112.5, 120, 126, 135, 140, 144, 150, 160};
  std::uniform_int_distribution<int> pick(0, 16), count(1, 5);
  std::uniform_real_distribution<double> any(20, 179);
  int nonempty = 0;
  for (int t = 0; t < 200; ++t) {
    std::vector<double> a;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) a.push_back(deg_to_rad(t % 4 == 0 ? any(rng) : nice[pick(rng)]));
    const auto got = angle_tilings(std::span<const double>(a), std::nullopt, 6);
    std::set<std::vector<int>> s;
    for (const auto& f : got) s.insert(f.multiplicities);
    nonempty += !s.empty();
    if (s != brute_tilings(a, 6)) v.require(false, "mismatch on sample " + std::to_string(t));
  }
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(nonempty) + " of 200 samples admit a vertex figure";
  return v;
}

Verdict criterion_14() {
  Verdict v;
  const double half = std::sqrt(2.0 + std::sqrt(3.0));
  for (const char* name : {"cairo", "prismatic"}) {
    for (int p = 1; p <= 4; ++p) {
      for (int q = 1; q <= 4; ++q) {
        const auto m = build_named(name, p, q);
        const auto r = validate(m);
        const std::string where = std::string(name) + " " + std::to_string(p) + "x" + std::to_string(q);
        v.require(r.ok, where + " has violations");
        v.require(r.euler_characteristic == 0, where + " Euler characteristic");
        v.require(std::abs(perimeter_per_tile(m) - half) <= 1e-9, where + " perimeter per tile");
      }
    }
  }
  return v;
}

Verdict criterion_15() {
  Verdict v;
  const auto mesh = build_cairo(1, 1);
  const double target = std::sqrt(2.0 + std::sqrt(3.0));
  for (double r : {20.0, 40.0, 80.0}) {
    const auto t = truncate(mesh, r);
    const double ratio = t.contained_ratio.value_or(NAN);
    char b[200];
    std::snprintf(b, sizeof b, "R=%g rho_hat %.6f P0/A0 %.6f", r, t.rho_hat, ratio);
    v.detail += (v.detail.empty() ? "" : "; ") + std::string(b);
    if (!(ratio <= t.rho_hat + 0.05)) {
      v.pass = false;
      v.detail += fmt(" exceeds rho_hat + 0.05 by %.4f", ratio - t.rho_hat - 0.05);
    }
    if (r == 80.0) {
      v.require(std::abs(t.rho_hat - target) / target < 0.02, "rho_hat at R=80 outside 2%");
      const auto shifted = truncate(mesh, r, t.origin + (*mesh.lattice)[0]);
      v.require(std::abs(shifted.rho_hat - t.rho_hat) / t.rho_hat < 0.01, "origin shift changes rho_hat by 1% or more");
    }
  }
  return v;
}

Verdict criterion_16() {
  Verdict v;
  const Rational deltas[] = {Rational(1), Rational(-1), Rational(1, 7)};
  int mutants = 0, killed = 0;
  for (const auto& name : preset_chain_names()) {
    const auto chain = preset_chain(name);
    const auto against = ratio_lower_bound(3.8414, equilateral_triangle_perimeter());
    const Rational cap = evaluate_counting_argument(chain, against).derived_ratio_cap;
    for (std::size_t s = 0; s < chain.size(); ++s) {
      for (std::size_t j = 0; j < 4; ++j) {
        for (const auto& d : deltas) {
          auto mutant = chain;
          mutant[s].form.c[j] += d;
          ++mutants;
          bool rejected = false;
          try {
            rejected = evaluate_counting_argument(mutant, against).derived_ratio_cap != cap;
          } catch (const NonSequiturError&) {
            rejected = true;
          }
          killed += rejected;
          if (!rejected) {
            v.require(false, name + " step " + std::to_string(s) + " coefficient " + kCountVariables[j] +
                                 " survived");
          }
        }
      }
    }
  }
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(killed) + "/" + std::to_string(mutants) + " mutants rejected";
  return v;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Verdict()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = {
      {1, "reference perimeters", criterion_1},
      {2, "efficient angle bounds 80.91 and 142.29 within 0.01 degrees", criterion_2},
      {3, "efficient edge bounds 0.4073 and 1.081 with their half-angle roots", criterion_3},
      {4, "extremal perimeters with oracle cross-checks", criterion_4},
      {5, "triangle bound 4.93594 at e = 1.081", criterion_5},
      {6, "ratio bounds with dual bookkeeping", criterion_6},
      {7, "surround capacities", criterion_7},
      {8, "exact counting bounds", criterion_8},
      {9, "contradiction chains and thresholds", criterion_9},
      {10, "planar epsilon thresholds and band cap", criterion_10},
      {11, "equilateral pentagons", criterion_11},
      {12, "circumscription optimality under 500 edge perturbations", criterion_12},
      {13, "angle tilings against brute force on 200 angle sets", criterion_13},
      {14, "Cairo and Prismatic tori up to 4x4", criterion_14},
      {15, "disk truncation statistics", criterion_15},
      {16, "mutation tests on counting chains", criterion_16},
  };
  return c;
}

bool run_one(const Criterion& c) {
  Verdict v;
  try {
    v = c.run();
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("exception: ") + e.what();
  }
  std::printf("criterion %2d: %s  %s", c.number, v.pass ? "PASS" : "FAIL", c.title);
  if (!v.detail.empty()) std::printf("  [%s]", v.detail.c_str());
  std::printf("\n");
  std::fflush(stdout);
  return v.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
    const int n = std::atoi(argv[2]);
    for (const auto& c : criteria())
      if (c.number == n) return run_one(c) ? 0 : 1;
    std::fprintf(stderr, "unknown criterion %s\n", argv[2]);
    return 2;
  }
  const bool report = argc == 2 && std::strcmp(argv[1], "--report") == 0;
  if (argc > 1 && !report) {
    std::fprintf(stderr, "usage: pentiso_acceptance [--report | --criterion N]\n");
    return 2;
  }
  int failed = 0;
  for (const auto& c : criteria()) failed += !run_one(c);
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria().size()) - failed, criteria().size());
  return report || failed == 0 ? 0 : 1;
}
