#include "pentiso/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pentiso/claims.hpp"
#include "pentiso/combinatorics.hpp"
#include "pentiso/equilateral.hpp"
#include "pentiso/errors.hpp"
#include "pentiso/io.hpp"
#include "pentiso/optimize.hpp"
#include "pentiso/torus.hpp"

namespace pentiso {

namespace {

using ojson = nlohmann::ordered_json;

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
}

std::string join_fixed(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + format_fixed(v[i]);
  return s;
}

std::pair<int, int> parse_periods(const std::string& s) {
  int p = 0, q = 0;
  char x = 0;
  std::istringstream is(s);
  if (!(is >> p >> x >> q) || (x != 'x' && x != 'X') || !is.eof() || p < 1 || q < 1)
    throw ParseError("periods must look like 2x2");
  return {p, q};
}

Point parse_point(const std::string& s) {
  Point p;
  char comma = 0;
  std::istringstream is(s);
  if (!(is >> p.x >> comma >> p.y) || comma != ',' || !is.eof()) throw ParseError("origin must look like x,y");
  return p;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("not a number: '" + tok + "'");
    }
  }
  return v;
}

struct ClaimsArgs {
  std::string filter;
  std::string json_path;
  std::string format = "text";
};

int cmd_claims(const ClaimsArgs& a, std::ostream& out) {
  std::optional<std::string> filter;
  if (!a.filter.empty()) filter = a.filter;
  const auto results = run_claims(filter);
  if (!a.json_path.empty()) emit(a.json_path, render_report(results, ReportFormat::Json), out);
  if (a.json_path != "-")
    out << render_report(results, a.format == "json" ? ReportFormat::Json : ReportFormat::Text);
  return summarize(results).fail == 0 ? kExitOk : kExitFailure;
}

struct MinimizeArgs {
  std::string constraints;
  std::string preset;
  bool oracle = false;
  bool json = false;
};

int cmd_minimize(const MinimizeArgs& a, std::ostream& out) {
  const AngleConstraintSet c =
      a.preset.empty() ? constraints_from_json(read_text(a.constraints)) : preset_constraints(a.preset);
  const MinimizationResult r = a.oracle ? grid_oracle(c) : minimize_perimeter(c);
  if (a.json) {
    ojson j;
    j["angles_deg"] = r.angles.degrees();
    j["perimeter"] = r.perimeter;
    j["inradius"] = r.construction.inradius;
    out << j.dump(2) << "\n";
  } else {
    out << "angles_deg: " << join_fixed(r.angles.degrees()) << "\n";
    out << "perimeter: " << format_fixed(r.perimeter) << "\n";
    out << "efficient: " << (is_efficient(r.perimeter) ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

struct CurveArgs {
  std::string family = "one-angle-free";
  double from = 75.0, to = 150.0, step = 0.1;
  std::string out_path = "-";
};

int cmd_curve(const CurveArgs& a, std::ostream& out) {
  if (a.family != "one-angle-free") throw ParseError("unknown curve family '" + a.family + "'");
  emit(a.out_path, curve_to_csv(one_angle_curve(a.from, a.to, a.step)), out);
  return kExitOk;
}

std::string report_text(const ValidationReport& r) {
  std::string s = std::string("valid: ") + (r.ok ? "yes" : "no") + "\n";
  s += "V: " + std::to_string(r.vertices) + "\nE: " + std::to_string(r.edges) + "\nF: " + std::to_string(r.faces) +
       "\neuler_characteristic: " + std::to_string(r.euler_characteristic) + "\n";
  for (const auto& v : r.violations) s += "violation: " + v.kind + " at " + v.location + ": " + v.detail + "\n";
  return s;
}

int cmd_tiling_validate(const std::string& path, std::ostream& out) {
  const TilingMesh mesh = mesh_from_json(read_text(path));
  const auto r = validate(mesh);
  out << report_text(r);
  return r.ok ? kExitOk : kExitFailure;
}

int cmd_tiling_stats(const std::string& path, bool json, std::ostream& out) {
  const TilingMesh mesh = mesh_from_json(read_text(path));
  const auto r = validate(mesh);
  const auto c = census(mesh);
  ojson j;
  j["valid"] = r.ok;
  j["faces"] = r.faces;
  j["euler_characteristic"] = r.euler_characteristic;
  if (mesh.is_torus()) j["perimeter_per_tile"] = perimeter_per_tile(mesh);
  j["n"] = c.n;
  j["m"] = c.m;
  j["C1"] = c.c1;
  j["C2"] = c.c2;
  j["N1"] = c.n1;
  j["N2"] = c.n2;
  j["k3"] = c.k3;
  j["k4"] = c.k4;
  j["vertices"] = c.vertices;
  j["inefficient_vertices"] = c.inefficient_vertices;
  if (json) {
    out << j.dump(2) << "\n";
  } else {
    for (auto it = j.begin(); it != j.end(); ++it) {
      out << it.key() << ": ";
      if (it->is_number_float()) out << format_fixed(it->get<double>());
      else out << it->dump();
      out << "\n";
    }
  }
  return r.ok ? kExitOk : kExitFailure;
}

struct EquilateralArgs {
  std::string family = "champion";
  std::optional<double> a1_deg;
  bool json = false;
};

int cmd_equilateral(const EquilateralArgs& a, std::ostream& out) {
  ojson j;
  j["family"] = a.family;
  PolygonChain chain;
  double perimeter = 0.0;
  std::optional<double> side;
  std::optional<double> cot_bound;
  const double a1 = deg_to_rad(a.a1_deg.value_or(90.0));
  if (a.family == "adjacent") {
    const auto p = adjacent_family(a1);
    chain = p.chain;
    perimeter = p.perimeter();
    side = p.x1;
  } else if (a.family == "nonadjacent") {
    const auto p = nonadjacent_family(a1);
    chain = p.chain;
    perimeter = p.perimeter();
    side = p.x2;
  } else if (a.family == "special") {
    if (a.a1_deg) throw ParseError("--a1-deg does not apply to the special pentagon");
    const auto x = solve_special_X();
    chain = x.chain;
    perimeter = x.perimeter();
    side = x.side;
    cot_bound = cot_perimeter(x.angles());
  } else if (a.family == "champion") {
    if (a.a1_deg) throw ParseError("--a1-deg does not apply to the champion");
    const auto c = equilateral_champion();
    chain = c.pentagon;
    perimeter = c.perimeter;
    j["winner"] = c.family;
  } else {
    throw ParseError("unknown family '" + a.family + "'");
  }
  std::vector<double> angles;
  for (double t : interior_angles(chain)) angles.push_back(rad_to_deg(t));
  if (a.json) {
    j["angles_deg"] = angles;
    j["perimeter"] = perimeter;
    if (side) j["side"] = *side;
    if (cot_bound) j["cot_bound"] = *cot_bound;
    auto verts = ojson::array();
    for (const auto& p : chain.vertices()) verts.push_back(ojson::array({p.x, p.y}));
    j["vertices"] = verts;
    out << j.dump(2) << "\n";
  } else {
    if (j.contains("winner")) out << "winner: " << j["winner"].get<std::string>() << "\n";
    out << "angles_deg: " << join_fixed(angles) << "\n";
    if (side) out << "side: " << format_fixed(*side) << "\n";
    out << "perimeter: " << format_fixed(perimeter) << "\n";
    if (cot_bound) out << "cot_bound: " << format_fixed(*cot_bound) << "\n";
  }
  return kExitOk;
}

struct TruncateArgs {
  std::string tiling = "cairo";
  std::vector<double> radii;
  std::string origin;
  bool json = false;
};

int cmd_truncate(const TruncateArgs& a, std::ostream& out) {
  const TilingMesh mesh = build_named(a.tiling, 1, 1);
  std::optional<Point> origin;
  if (!a.origin.empty()) origin = parse_point(a.origin);
  auto arr = ojson::array();
  for (double r : a.radii) {
    const auto t = truncate(mesh, r, origin);
    ojson j;
    j["R"] = t.radius;
    j["origin"] = ojson::array({t.origin.x, t.origin.y});
    j["P_R"] = t.p_r;
    j["A_R"] = t.a_r;
    j["P0_R"] = t.p0_r;
    j["A0_R"] = t.a0_r;
    j["contained_tiles"] = t.contained_tiles;
    j["N_R"] = t.n_r;
    j["rho_hat"] = t.rho_hat;
    if (t.contained_ratio) j["P0_over_A0"] = *t.contained_ratio;
    arr.push_back(j);
  }
  if (a.json) {
    out << arr.dump(2) << "\n";
  } else {
    out << "R,P_R,A_R,P0_R,A0_R,N_R,rho_hat,P0_over_A0\n";
    for (const auto& j : arr) {
      out << format_fixed(j["R"].get<double>()) << "," << format_fixed(j["P_R"].get<double>()) << ","
          << format_fixed(j["A_R"].get<double>()) << "," << format_fixed(j["P0_R"].get<double>()) << ","
          << format_fixed(j["A0_R"].get<double>()) << "," << j["N_R"].get<long>() << ","
          << format_fixed(j["rho_hat"].get<double>()) << ","
          << (j.contains("P0_over_A0") ? format_fixed(j["P0_over_A0"].get<double>()) : std::string("nan")) << "\n";
    }
  }
  return kExitOk;
}

struct AngleTilingArgs {
  std::string angles;
  std::optional<std::size_t> required;
  int max_degree = 8;
};

int cmd_angle_tilings(const AngleTilingArgs& a, std::ostream& out) {
  std::vector<double> rad;
  for (double d : parse_list(a.angles)) rad.push_back(deg_to_rad(d));
  if (a.required && *a.required >= rad.size()) throw DomainError("required index out of range");
  const auto figs = angle_tilings(std::span<const double>(rad), a.required, a.max_degree);
  out << "degree,multiplicities\n";
  for (const auto& f : figs) {
    out << f.degree() << ",";
    for (std::size_t i = 0; i < f.multiplicities.size(); ++i) out << (i ? " " : "") << f.multiplicities[i];
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isoperimetric pentagonal tiling toolkit", "pentiso"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  ClaimsArgs claims_args;
  auto* claims = app.add_subcommand("claims", "Recompute every registered numeric claim");
  claims->add_option("--filter", claims_args.filter, "Glob over claim ids, e.g. 'ratio.*'");
  auto* claims_json = claims->add_option("--json", claims_args.json_path, "Write the JSON report here ('-' for stdout)");
  claims->add_option("--format", claims_args.format, "Report format on stdout")
      ->check(CLI::IsMember({"text", "json"}))
      ->excludes(claims_json);

  MinimizeArgs min_args;
  auto* minimize = app.add_subcommand("minimize", "Least-perimeter pentagon under angle constraints");
  auto* min_file = minimize->add_option("--constraints", min_args.constraints, "Constraint-set JSON ('-' for stdin)");
  auto* min_preset = minimize->add_option("--preset", min_args.preset, "Named constraint set")
                         ->check(CLI::IsMember(preset_names()));
  min_file->excludes(min_preset);
  minimize->add_flag("--oracle", min_args.oracle, "Use the exhaustive grid oracle");
  minimize->add_flag("--json", min_args.json, "Emit JSON");

  CurveArgs curve_args;
  auto* curve = app.add_subcommand("curve", "Figure data as CSV");
  curve->add_option("--family", curve_args.family)->check(CLI::IsMember({"one-angle-free"}));
  curve->add_option("--from", curve_args.from, "First angle in degrees");
  curve->add_option("--to", curve_args.to, "Last angle in degrees");
  curve->add_option("--step", curve_args.step, "Step in degrees");
  curve->add_option("--out", curve_args.out_path, "Output CSV ('-' for stdout)");

  auto* tiling = app.add_subcommand("tiling", "Torus tiling meshes");
  tiling->require_subcommand(1);
  std::string gen_name, gen_periods = "1x1", gen_out = "-";
  auto* generate = tiling->add_subcommand("generate", "Emit a mesh as JSON");
  generate->add_option("name", gen_name)->required()->check(CLI::IsMember({"cairo", "prismatic", "square"}));
  generate->add_option("--periods", gen_periods, "Copies of the fundamental domain, PxQ");
  generate->add_option("--out", gen_out, "Output file ('-' for stdout)");
  std::string validate_path;
  auto* validate_cmd = tiling->add_subcommand("validate", "Check a mesh JSON");
  validate_cmd->add_option("file", validate_path)->required();
  std::string stats_path;
  bool stats_json = false;
  auto* stats = tiling->add_subcommand("stats", "Census and perimeter statistics");
  stats->add_option("file", stats_path)->required();
  stats->add_flag("--json", stats_json);

  EquilateralArgs eq_args;
  auto* equilateral = app.add_subcommand("equilateral", "Equilateral pentagon families");
  equilateral->add_option("--family", eq_args.family)
      ->check(CLI::IsMember({"adjacent", "nonadjacent", "special", "champion"}));
  equilateral->add_option("--a1-deg", eq_args.a1_deg, "Family angle a1 in degrees");
  equilateral->add_flag("--json", eq_args.json);

  TruncateArgs tr_args;
  auto* trunc = app.add_subcommand("truncate", "Disk truncation statistics of a planar tiling");
  trunc->add_option("--tiling", tr_args.tiling)->check(CLI::IsMember({"cairo", "prismatic", "square"}));
  trunc->add_option("--radius", tr_args.radii, "One or more radii")->required()->delimiter(',');
  trunc->add_option("--origin", tr_args.origin, "Disk centre x,y");
  trunc->add_flag("--json", tr_args.json);

  AngleTilingArgs at_args;
  auto* at = app.add_subcommand("angle-tilings", "Vertex figures formed by a set of angles");
  at->add_option("--angles-deg", at_args.angles, "Comma-separated angles in degrees")->required();
  at->add_option("--required", at_args.required, "Index of an angle that must appear");
  at->add_option("--max-degree", at_args.max_degree)->check(CLI::Range(3, 12));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (claims->parsed()) return cmd_claims(claims_args, out);
    if (minimize->parsed()) {
      if (min_args.constraints.empty() && min_args.preset.empty()) {
        err << "minimize: one of --constraints or --preset is required\n";
        return kExitUsage;
      }
      return cmd_minimize(min_args, out);
    }
    if (curve->parsed()) return cmd_curve(curve_args, out);
    if (generate->parsed()) {
      const auto [p, q] = parse_periods(gen_periods);
      emit(gen_out, mesh_to_json(build_named(gen_name, p, q)), out);
      return kExitOk;
    }
    if (validate_cmd->parsed()) return cmd_tiling_validate(validate_path, out);
    if (stats->parsed()) return cmd_tiling_stats(stats_path, stats_json, out);
    if (equilateral->parsed()) return cmd_equilateral(eq_args, out);
    if (trunc->parsed()) return cmd_truncate(tr_args, out);
    if (at->parsed()) return cmd_angle_tilings(at_args, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownClaimError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MalformedMeshError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace pentiso
