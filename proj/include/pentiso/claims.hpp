#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pentiso {

enum class ClaimMode { AsPublished, FullPrecision };
std::string to_string(ClaimMode m);
ClaimMode parse_claim_mode(const std::string& s);

enum class ClaimKind {
  Value,       // |computed - expected| <= tol
  LowerBound,  // computed must exceed expected; abs_err is the shortfall
  UpperBound,  // computed must stay below expected; abs_err is the excess
};

enum class ClaimStatus { Pass, Fail, DiscrepancyDocumented };
std::string to_string(ClaimStatus s);
ClaimStatus parse_claim_status(const std::string& s);

struct Claim {
  std::string id;
  std::string description;
  std::string paper_ref;
  double expected = 0.0;
  double tol = 0.0;
  ClaimMode mode = ClaimMode::FullPrecision;
  ClaimKind kind = ClaimKind::Value;
  // Known mismatches recorded in the discrepancy ledger.
  bool whitelisted = false;
  std::function<double()> compute;
};

struct ClaimResult {
  std::string id;
  std::string paper_ref;
  double expected = 0.0;
  double computed = 0.0;
  double abs_err = 0.0;
  double tol = 0.0;
  ClaimStatus status = ClaimStatus::Fail;
  ClaimMode mode = ClaimMode::FullPrecision;
  friend bool operator==(const ClaimResult&, const ClaimResult&) = default;
};

// The full registry sorted by id.
const std::vector<Claim>& claim_registry();

// Multiplier applied to every tolerance; read from PENTISO_TOL_SCALE.
double tolerance_scale();

ClaimResult evaluate_claim(const Claim& c, double tol_scale = 1.0);

// Runs every claim whose id matches the glob pattern ('*' and '?').
// Throws UnknownClaimError when nothing matches.
std::vector<ClaimResult> run_claims(const std::optional<std::string>& filter = {});

enum class ReportFormat { Text, Json };
std::string render_report(const std::vector<ClaimResult>& results, ReportFormat format);
std::vector<ClaimResult> parse_json_report(const std::string& text);

struct ClaimSummary {
  int pass = 0;
  int fail = 0;
  int documented = 0;
};
ClaimSummary summarize(const std::vector<ClaimResult>& results);

}  // namespace pentiso
