#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "pentiso/equilateral.hpp"
#include "pentiso/errors.hpp"
#include "pentiso/numeric.hpp"

using namespace pentiso;
using doctest::Approx;

namespace {

void check_equilateral_unit(const PolygonChain& c, double side) {
  const auto m = polygon_metrics(c);
  CHECK(std::abs(m.area - 1.0) < 1e-9);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(std::abs(norm(c[(i + 1) % c.size()] - c[i]) - side) < 1e-9);
  CHECK(c.signed_area() > 0);
  CHECK(c.is_simple());
}

}  // namespace

TEST_CASE("adjacent family") {
  const auto p = adjacent_family(kPi / 2);
  CHECK(p.x1 == Approx(0.8353).epsilon(1e-4));
  CHECK(p.perimeter() == Approx(4.177).epsilon(1e-4));
  CHECK(p.x1 * p.x1 == Approx(1.0 / (1.0 + std::sqrt(3.0) / 4.0)).epsilon(1e-14));
  for (double d : {60.0, 90.0, 120.0}) {
    const auto q = adjacent_family(deg_to_rad(d));
    check_equilateral_unit(q.chain, q.x1);
  }
  const auto best = grid_golden_min([](double a) { return adjacent_family(a).perimeter(); }, 0.2, kPi - 0.2);
  CHECK(rad_to_deg(best.x) == Approx(90).epsilon(1e-5));
  CHECK_THROWS_AS(adjacent_family(0.0), DomainError);
}

TEST_CASE("nonadjacent family") {
  const auto p = nonadjacent_family(kPi / 2);
  CHECK(p.x2 == Approx(0.7758).epsilon(1e-4));
  CHECK(p.x2 * p.x2 * (1.0 + std::sqrt(7.0) / 4.0) == Approx(1.0).epsilon(1e-12));
  CHECK(p.perimeter() == Approx(3.879).epsilon(1e-4));
  CHECK(p.base1 == Approx(2 * p.x2 * std::sin(p.a1 / 2)).epsilon(1e-14));
  CHECK(p.base2 == Approx(2 * std::sqrt(p.x2 * p.x2 - p.base1 * p.base1 / 4)).epsilon(1e-14));
  for (double d : {60.0, 80.0, 90.0, 110.0, 125.0}) {
    const auto q = nonadjacent_family(deg_to_rad(d));
    check_equilateral_unit(q.chain, q.x2);
    CHECK(q.a1 + q.a2 == Approx(kPi));
  }
  // the minimum sits at a1 = pi/2, golden section and a fine grid agree
  const auto g = grid_golden_min([](double a) { return nonadjacent_family(a).perimeter(); }, deg_to_rad(60),
                                 deg_to_rad(120));
  double best = 1e9, arg = 0;
  for (int i = 0; i <= 60000; ++i) {
    const double a = deg_to_rad(60.0 + i * 0.001);
    const double v = nonadjacent_family(a).perimeter();
    if (v < best) best = v, arg = a;
  }
  CHECK(std::abs(rad_to_deg(g.x) - 90.0) < 0.01);
  CHECK(std::abs(rad_to_deg(arg) - 90.0) < 0.01);
  // T3 area peaks at x2 = A1 / sqrt 2
  double t3best = 0, t3arg = 0;
  for (int i = 1; i < 2000; ++i) {
    const double a = deg_to_rad(50.0 + i * 0.04);
    try {
      const double t = nonadjacent_t3_area(a, 1.0);
      if (t > t3best) t3best = t, t3arg = a;
    } catch (const InfeasibleError&) {
    }
  }
  CHECK(rad_to_deg(t3arg) == Approx(90).epsilon(1e-3));
  CHECK_THROWS_AS(nonadjacent_family(deg_to_rad(30)), InfeasibleError);
}

TEST_CASE("champion angles") {
  auto a = interior_angles(nonadjacent_family(kPi / 2).chain);
  std::sort(a.begin(), a.end());
  CHECK(a[0] == Approx(kPi / 2).epsilon(1e-10));
  CHECK(a[1] == Approx(kPi / 2).epsilon(1e-10));
  CHECK(a[2] == Approx(kPi / 4 + std::acos(1 / (2 * std::sqrt(2.0)))).epsilon(1e-10));
  CHECK(a[3] == Approx(1.9948).epsilon(1e-4));
  CHECK(a[4] == Approx(1.5 * kPi - 2 * std::acos(1 / (2 * std::sqrt(2.0)))).epsilon(1e-10));
  CHECK(a[4] == Approx(2.2935).epsilon(1e-4));
}

TEST_CASE("closure residual") {
  CHECK(norm(closure_residual(AngleVector::from_degrees({108, 108, 108, 108, 108}))) < 1e-12);
  CHECK(norm(closure_residual(AngleVector::from_degrees({70.88, 144.56, 89.26, 99.93, 135.37}))) < 1e-3);
  CHECK(norm(closure_residual(AngleVector::from_degrees({90, 90, 120, 120, 120}))) > 1e-3);
  const auto a = AngleVector::from_degrees({80, 130, 100, 120, 110});
  const double n0 = norm(closure_residual(a));
  for (std::size_t k = 1; k < 5; ++k) CHECK(std::abs(norm(closure_residual(a.rotated(k))) - n0) < 1e-12);
}

TEST_CASE("special pentagon X") {
  const auto x = solve_special_X();
  const double expect[] = {70.88, 144.56, 89.26, 99.93, 135.37};
  const auto d = x.angles().degrees();
  for (int i = 0; i < 5; ++i) CHECK(std::abs(d[i] - expect[i]) < 0.05);
  CHECK(std::abs(x.a + 2 * x.b - kTwoPi) < 1e-10);
  CHECK(std::abs(x.c + 2 * x.e - kTwoPi) < 1e-10);
  CHECK(std::abs(x.a + x.c + 2 * x.d - kTwoPi) < 1e-10);
  CHECK(x.a + x.b + x.c + x.d + x.e == Approx(3 * kPi).epsilon(1e-12));
  CHECK(norm(closure_residual(x.angles())) < 1e-8);
  CHECK(cot_perimeter(x.angles()) > 3.994);
  check_equilateral_unit(x.chain, x.side);
  for (double a0 : {65.0, 70.0, 75.0})
    for (double c0 : {85.0, 90.0, 95.0}) {
      const auto y = solve_special_X(deg_to_rad(a0), deg_to_rad(c0));
      CHECK(std::abs(y.a - x.a) < 1e-6);
      CHECK(std::abs(y.c - x.c) < 1e-6);
    }
}

TEST_CASE("equilateral champion") {
  const auto c = equilateral_champion();
  CHECK(c.family == "nonadjacent");
  CHECK(c.perimeter == Approx(3.879).epsilon(1e-4));
  REQUIRE(c.candidates.size() == 3);
  CHECK(c.candidates[0].perimeter == Approx(4.177).epsilon(1e-4));
  CHECK(c.candidates[2].perimeter > 3.994);
}
