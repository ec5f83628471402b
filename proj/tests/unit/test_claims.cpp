#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <set>

#include "pentiso/claims.hpp"
#include "pentiso/errors.hpp"

using namespace pentiso;

namespace {

const ClaimResult& find(const std::vector<ClaimResult>& v, const std::string& id) {
  for (const auto& r : v)
    if (r.id == id) return r;
  FAIL("missing claim " << id);
  return v.front();
}

}  // namespace

TEST_CASE("registry shape") {
  const auto& reg = claim_registry();
  CHECK(reg.size() >= 35);
  std::set<std::string> ids;
  for (const auto& c : reg) {
    CHECK(ids.insert(c.id).second);
    CHECK(c.tol > 0);
    CHECK_FALSE(c.paper_ref.empty());
    // no claim passes with slack beyond 1% of its value unless it is a ledger entry
    if (!c.whitelisted && c.expected != 0) CHECK(c.tol <= 0.01 * std::abs(c.expected) + 1e-12);
  }
  CHECK(std::is_sorted(reg.begin(), reg.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; }));
}

TEST_CASE("every registered claim is accounted for") {
  const std::set<std::string> manifest = {
      "angle_bounds.max", "angle_bounds.min", "chain.quad_a_count", "chain.quad_a_count.contradicts",
      "chain.quad_s_only", "chain.quad_s_only.contradicts", "chain.quad_three_s", "chain.type2_a_count",
      "chain.type2_a_count.contradicts", "chain.type2_s_only", "chain.type2_s_only.contradicts",
      "chain.type2_three_s", "counting.quad_deg4.k4_low", "counting.quad_three_s.k4_low",
      "counting.quad_upper.k3_low", "counting.quad_upper.k4_high", "counting.type2_deg4.k4_low",
      "counting.type2_s_only.k4_low", "counting.type2_three_s.k4_low", "counting.type2_upper.k3_low",
      "counting.type2_upper.k4_high", "edge_bounds.alpha_hi", "edge_bounds.alpha_lo", "edge_bounds.e_max",
      "edge_bounds.e_max.full", "edge_bounds.e_min", "edge_bounds.e_min.full", "equilateral.adjacent.perimeter",
      "equilateral.adjacent.x1", "equilateral.champion.angle_large", "equilateral.champion.angle_small",
      "equilateral.champion.perimeter", "equilateral.nonadjacent.x2", "equilateral.x.A", "equilateral.x.B",
      "equilateral.x.C", "equilateral.x.D", "equilateral.x.E", "equilateral.x.cot_bound",
      "extremal.case_pentagon", "extremal.champion", "extremal.deg3_case5", "extremal.deg3_threshold",
      "extremal.degree_four", "extremal.outside_band", "extremal.two_pairs", "perimeter.cairo",
      "perimeter.regular_pentagon", "perimeter.square", "perimeter.triangle", "planar.band_ratio_cap",
      "planar.ratio_eps", "planar.truncation_eps", "ratio.13_4", "ratio.13_43", "ratio.13_type1",
      "ratio.15_554", "ratio.15_554.full", "ratio.24_117", "ratio.24_117.published", "ratio.2_6", "ratio.2_63",
      "ratio.31_1753", "ratio.31_1753.full", "ratio.34_77", "ratio.34_77.published", "surround.10",
      "surround.11", "surround.13", "surround.14", "surround.15", "surround.16", "surround.8",
      "threshold.3_8458", "threshold.3_8495", "triangle.e_1081"};
  std::set<std::string> ids;
  for (const auto& c : claim_registry()) ids.insert(c.id);
  CHECK(ids == manifest);
}

TEST_CASE("filters") {
  const auto a = run_claims(std::string("angle_bounds.*"));
  CHECK(a.size() == 2);
  CHECK(find(a, "angle_bounds.max").status == ClaimStatus::Pass);
  // the published lower bound is 0.0145 degrees off the root
  CHECK(find(a, "angle_bounds.min").status == ClaimStatus::Fail);
  CHECK_THROWS_AS(run_claims(std::string("nope.*")), UnknownClaimError);
}

TEST_CASE("dual bookkeeping of ratios") {
  const auto r = run_claims(std::string("ratio.*"));
  CHECK(find(r, "ratio.31_1753").status == ClaimStatus::Pass);
  CHECK(find(r, "ratio.31_1753").mode == ClaimMode::AsPublished);
  CHECK(find(r, "ratio.31_1753.full").status == ClaimStatus::DiscrepancyDocumented);
  CHECK(find(r, "ratio.34_77").status == ClaimStatus::Pass);
  CHECK(find(r, "ratio.34_77.published").status == ClaimStatus::DiscrepancyDocumented);
  CHECK(find(r, "ratio.34_77.published").computed == doctest::Approx(34.6965).epsilon(1e-5));
  // the two modes agree within 0.5%
  for (const char* base : {"ratio.31_1753", "ratio.15_554"}) {
    const double a = find(r, base).computed, b = find(r, std::string(base) + ".full").computed;
    CHECK(std::abs(a - b) / a < 0.006);
  }
}

TEST_CASE("evaluation rules") {
  Claim c;
  c.id = "t";
  c.paper_ref = "t";
  c.expected = 1.0;
  c.tol = 0.1;
  c.compute = [] { return 1.05; };
  CHECK(evaluate_claim(c).status == ClaimStatus::Pass);
  CHECK(evaluate_claim(c, 0.1).status == ClaimStatus::Fail);
  c.whitelisted = true;
  CHECK(evaluate_claim(c, 0.1).status == ClaimStatus::DiscrepancyDocumented);
  c.kind = ClaimKind::LowerBound;
  CHECK(evaluate_claim(c, 0.1).abs_err == 0.0);
  c.compute = [] { return 0.5; };
  CHECK(evaluate_claim(c).abs_err == doctest::Approx(0.5));
}

TEST_CASE("reports") {
  const auto all = run_claims();
  const auto json = render_report(all, ReportFormat::Json);
  CHECK(parse_json_report(json) == all);
  const auto text = render_report(all, ReportFormat::Text);
  const auto first_fail = text.find(" fail\n");
  const auto last_pass = text.rfind(" pass\n");
  REQUIRE(first_fail != std::string::npos);
  CHECK(last_pass < first_fail);
  std::size_t rows = 0;
  for (char ch : text) rows += ch == '\n';
  CHECK(rows >= 36);
}

TEST_CASE("tolerance scale from the environment") {
  setenv("PENTISO_TOL_SCALE", "2", 1);
  CHECK(tolerance_scale() == 2.0);
  setenv("PENTISO_TOL_SCALE", "bogus", 1);
  CHECK_THROWS_AS(tolerance_scale(), ParseError);
  unsetenv("PENTISO_TOL_SCALE");
  CHECK(tolerance_scale() == 1.0);
}
