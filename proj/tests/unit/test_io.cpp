#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include "pentiso/errors.hpp"
#include "pentiso/io.hpp"

using namespace pentiso;

TEST_CASE("mesh JSON round trip") {
  const auto m = build_cairo(2, 1);
  const auto back = mesh_from_json(mesh_to_json(m));
  CHECK(back.vertices.size() == m.vertices.size());
  CHECK(back.edges == m.edges);
  CHECK(back.faces == m.faces);
  CHECK(validate(back).ok);
  CHECK(mesh_to_json(back) == mesh_to_json(m));
}

TEST_CASE("malformed meshes") {
  CHECK_THROWS_AS(mesh_from_json(R"({"lattice": null, "vertices": [[0,0]], "edges": [[0,3,[0,0]]], "faces": []})"),
                  MalformedMeshError);
  CHECK_THROWS_AS(mesh_from_json(R"({"vertices": []})"), MalformedMeshError);
  CHECK_THROWS_AS(mesh_from_json("not json"), ParseError);
  CHECK_THROWS_AS(
      mesh_from_json(R"({"lattice": null, "vertices": [[0,0],[1,0],[0,1]], "edges": [[0,1,[0,0]]], "faces": [[0,5,1]]})"),
      MalformedMeshError);
}

TEST_CASE("constraint JSON") {
  const auto c = constraints_from_json(
      R"({"fixed": [[0, 90]], "relations": [{"coeffs": [0,1,-1,0,0], "rhs_deg": 0}], "box": []})");
  REQUIRE(c.fixed.size() == 1);
  CHECK(rad_to_deg(c.fixed[0].second) == doctest::Approx(90));
  const auto again = constraints_from_json(constraints_to_json(c));
  CHECK(again.relations.size() == 1);
  CHECK(again.relations[0].coeffs == std::vector<int>{0, 1, -1, 0, 0});
  const auto p = constraints_from_json(R"({"preset": "degree_four"})");
  CHECK(minimize_perimeter(p).perimeter == doctest::Approx(3.8328655347).epsilon(1e-9));
  CHECK_THROWS_AS(constraints_from_json(R"({"fixed": [["a", 90]]})"), ParseError);
}

TEST_CASE("chain JSON") {
  const auto chain = preset_chain("quad_a_count");
  const auto back = chain_from_json(chain_to_json(chain));
  REQUIRE(back.size() == chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) CHECK(back[i].form == chain[i].form);
  const auto v = evaluate_counting_argument(back, ratio_lower_bound(3.8414, 4.5590141139));
  CHECK(v.derived_ratio_cap == Rational(30));
  const auto parsed = chain_from_json(R"([{"lhs": {"n": 1}, "op": "<=", "rhs": {"m": "32.6"}, "premise": true}])");
  CHECK(parsed[0].form.c[0] == Rational(-1));
  CHECK(parsed[0].form.c[1] == Rational(163, 5));
  CHECK_THROWS_AS(chain_from_json(R"([{"lhs": {"q": 1}, "op": "<="}])"), ParseError);
}

TEST_CASE("polygon JSON and CSV") {
  const auto j = nlohmann::json::parse(polygon_to_json(circumscribe(AngleVector::from_degrees({90, 90, 90, 90})).chain,
                                                       "circumscribed"));
  CHECK(j["construction"] == "circumscribed");
  CHECK(j["angles_deg"].size() == 4);
  const auto csv = curve_to_csv(one_angle_curve(100, 101, 0.5));
  CHECK(csv.rfind("angle_deg,excess_perimeter\n", 0) == 0);
  CHECK(format_fixed(-1e-9) == "0.000000");
}
