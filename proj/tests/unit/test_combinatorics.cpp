#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "pentiso/combinatorics.hpp"
#include "pentiso/errors.hpp"

using namespace pentiso;
using doctest::Approx;

namespace {

std::vector<double> deg(std::initializer_list<double> d) {
  std::vector<double> r;
  for (double x : d) r.push_back(deg_to_rad(x));
  return r;
}

bool has(const std::vector<VertexFigure>& v, std::vector<int> m) {
  return std::find(v.begin(), v.end(), VertexFigure{std::move(m)}) != v.end();
}

std::set<std::vector<int>> brute(const std::vector<double>& a, int max_degree) {
  std::set<std::vector<int>> out;
  std::vector<int> m(a.size(), 0);
  // odometer over 0..max_degree per angle
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

}  // namespace

TEST_CASE("angle tilings examples") {
  CHECK(angle_tilings(std::span<const double>(deg({108}))).empty());
  const auto two = angle_tilings(std::span<const double>(deg({90, 120})));
  CHECK(two.size() == 2);
  CHECK(has(two, {4, 0}));
  CHECK(has(two, {0, 3}));
  const auto three = angle_tilings(std::span<const double>(deg({90, 108, 126})));
  CHECK(has(three, {4, 0, 0}));
  CHECK(has(three, {0, 1, 2}));
  const auto req = angle_tilings(std::span<const double>(deg({90, 108, 126})), std::size_t{1});
  for (const auto& f : req) CHECK(f.multiplicities[1] > 0);
}

TEST_CASE("angle tilings match a brute-force enumerator") {
  std::mt19937 rng(17);
  const double nice[] = {60, 72, 80, 90, 100, 108, 112.5, 120, 126, 135, 140, 144, 150, 45, 30};
  std::uniform_int_distribution<int> pick(0, 14), count(1, 4);
  std::uniform_real_distribution<double> any(20, 179);
  for (int t = 0; t < 60; ++t) {
    std::vector<double> a;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) a.push_back(deg_to_rad(t % 3 == 0 ? any(rng) : nice[pick(rng)]));
    const auto got = angle_tilings(std::span<const double>(a), std::nullopt, 6);
    std::set<std::vector<int>> s;
    for (const auto& f : got) s.insert(f.multiplicities);
    CHECK(s == brute(a, 6));
  }
}

TEST_CASE("tiles_all_five") {
  CHECK(tiles_all_five(AngleVector::from_degrees({90, 108, 108, 108, 126})));
  CHECK_FALSE(tiles_all_five(AngleVector::from_degrees({108, 108, 108, 108, 108})));
  CHECK(tiles_all_five(AngleVector::from_degrees({90, 90, 120, 120, 120})));
}

TEST_CASE("surround capacities") {
  CHECK(surround_capacity(3, 4, 2, 2, 5) == 11);
  CHECK(surround_capacity(3, 4, 1, 2, 4) == 10);
  CHECK(surround_capacity(4, 4, 2, 2, 6) == 14);
  CHECK(surround_capacity(4, 4, 4, 2, 8) == 16);
  CHECK(surround_capacity(4, 3, 4, 1, 8) == 8);
  CHECK(surround_capacity({{4, 2}, {3, 4}, {1, 3}}, 8) == 15);
  CHECK_THROWS_AS(surround_capacity(-1, 4, 2, 2, 5), DomainError);
}

TEST_CASE("ratio bounds") {
  const double p0 = regular_pentagon_perimeter();
  CHECK(ratio_lower_bound(p0, 4.0).value == Approx(2.632835).epsilon(1e-6));
  CHECK(ratio_lower_bound(p0, equilateral_triangle_perimeter()).value == Approx(13.431279).epsilon(1e-6));
  CHECK(ratio_lower_bound(3.8414, equilateral_triangle_perimeter()).value == Approx(31.1753).epsilon(1e-5));
  CHECK(ratio_lower_bound(3.819, equilateral_triangle_perimeter()).value == Approx(15.554).epsilon(1e-4));
  CHECK_THROWS_AS(ratio_lower_bound(3.9, 4.0), DomainError);
  // antitone in P0, monotone in P2
  CHECK(ratio_lower_bound(3.83, 4.5).value > ratio_lower_bound(3.82, 4.5).value);
  CHECK(ratio_lower_bound(3.83, 4.6).value > ratio_lower_bound(3.83, 4.5).value);
  CHECK(perimeter_threshold_for_ratio(60, 4.93594) == Approx(3.8458).epsilon(2e-5));
  CHECK(perimeter_threshold_for_ratio(75, 4.93594) == Approx(3.8495).epsilon(2e-5));
  CHECK(perimeter_threshold_for_ratio(1e12, 4.93594) == Approx(cairo_perimeter()).epsilon(1e-12));
}

TEST_CASE("torus vertex count") {
  CHECK(torus_vertex_count(4, 2) == Rational(8));
  CHECK(torus_vertex_count(10, 0) == Rational(15));
  CHECK(torus_vertex_count(3, 0) == Rational(9, 2));
}

TEST_CASE("derived k bounds are exact and tight") {
  struct Expect {
    const char* scenario;
    const char* name;
    Rational alpha, beta;
  };
  const Expect table[] = {
      {"quad_deg4", "k4_low", Rational(1, 2), -7},        {"type2_deg4", "k4_low", Rational(1, 2), -12},
      {"quad_upper", "k4_high", Rational(1, 2), 6},       {"quad_upper", "k3_low", 1, -8},
      {"type2_upper", "k3_low", 1, -10},                  {"type2_upper", "k4_high", Rational(1, 2), Rational(15, 2)},
      {"type2_s_only", "k4_low", Rational(1, 2), Rational(-17, 2)},
      {"type2_three_s", "k4_low", Rational(1, 2), Rational(-25, 2)},
      {"quad_three_s", "k4_low", Rational(1, 2), -10},
  };
  for (const auto& e : table) {
    const auto s = preset_scenario(e.scenario);
    bool found = false;
    for (const auto& b : derive_k_bounds(s)) {
      if (b.name != e.name) continue;
      found = true;
      CHECK(b.alpha == e.alpha);
      CHECK(b.beta == e.beta);
      // the witness satisfies both inequalities with equality
      for (const auto& f : scenario_inequalities(s)) {
        const Affine val{f.c[0] + f.c[2] * b.witness_k3.n + f.c[3] * b.witness_k4.n,
                         f.c[1] + f.c[2] * b.witness_k3.m + f.c[3] * b.witness_k4.m};
        CHECK(val == Affine{0, 0});
      }
    }
    CHECK(found);
  }
}

TEST_CASE("counting chains") {
  const auto against_q = ratio_lower_bound(3.8414, equilateral_triangle_perimeter());
  const auto q28 = evaluate_counting_argument(preset_chain("quad_s_only"), against_q);
  CHECK(q28.derived_ratio_cap == Rational(28));
  CHECK(q28.contradicts);
  CHECK(evaluate_counting_argument(preset_chain("quad_a_count"), against_q).derived_ratio_cap == Rational(30));
  const auto q60 = evaluate_counting_argument(preset_chain("quad_three_s"), against_q);
  CHECK(q60.derived_ratio_cap == Rational(60));
  CHECK_FALSE(q60.contradicts);
  const auto against_t = ratio_lower_bound(3.83286553, 4.93594);
  CHECK(evaluate_counting_argument(preset_chain("type2_s_only"), against_t).contradicts);
  CHECK(evaluate_counting_argument(preset_chain("type2_a_count"), against_t).derived_ratio_cap == Rational(163, 5));
  CHECK(evaluate_counting_argument(preset_chain("type2_three_s"), against_t).derived_ratio_cap == Rational(75));
}

TEST_CASE("a perturbed chain is rejected") {
  auto chain = preset_chain("quad_s_only");
  // the derived k4 bound's m coefficient changes from 7 to 6
  chain[2].form.c[1] -= 1;
  CHECK_THROWS_AS(evaluate_counting_argument(chain, ratio_lower_bound(3.8414, 4.5)), NonSequiturError);
}

TEST_CASE("planar thresholds") {
  const auto t = planar_epsilon_thresholds();
  CHECK(t.ratio_eps == Approx(5.39e-5).epsilon(4e-3));
  CHECK((13.43 - 38.63 * t.ratio_eps) / (1 + 38.63 * t.ratio_eps) == Approx(13.4).epsilon(1e-7));
  CHECK(t.truncation_eps == Rational(12, 67));
  CHECK(convex_between_band_ratio_cap() == Rational(13, 5));
  CHECK(convex_between_band_ratio_cap(Rational(1, 4)) < convex_between_band_ratio_cap(Rational(1, 5)));
  CHECK(to_double(convex_between_band_ratio_cap()) < ratio_lower_bound(regular_pentagon_perimeter(), 4).value);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("32.6") == Rational(163, 5));
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK(to_string(Rational(15, 2)) == "15/2");
  CHECK(rational_from_double(0.125) == Rational(1, 8));
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}
