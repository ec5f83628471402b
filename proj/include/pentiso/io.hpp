#pragma once

#include <string>
#include <vector>

#include "pentiso/combinatorics.hpp"
#include "pentiso/geom.hpp"
#include "pentiso/optimize.hpp"
#include "pentiso/torus.hpp"

namespace pentiso {

// Reads a whole file; "-" reads standard input.
std::string read_text(const std::string& path);
// Writes a whole file; "-" writes standard output.
void write_text(const std::string& path, const std::string& text);

// {"angles_deg": [..], "vertices": [[x,y],..], "construction": "..."}
std::string polygon_to_json(const PolygonChain& chain, const std::string& construction);

// {"lattice": [[ux,uy],[vx,vy]] | null, "vertices": [[x,y]..],
//  "edges": [[tail,head,[si,sj]]..], "faces": [[e..]..]}
// A face entry k >= 0 traverses edge k forward and -k-1 traverses it backward.
std::string mesh_to_json(const TilingMesh& mesh);
TilingMesh mesh_from_json(const std::string& text);

// {"fixed": [[idx,deg]], "relations": [{"coeffs": [..], "rhs_deg": ..}],
//  "box": [[lo,hi]..], "convex_only": bool} or {"preset": "name"}
AngleConstraintSet constraints_from_json(const std::string& text);
std::string constraints_to_json(const AngleConstraintSet& c);

// [{"lhs": {"n": a, "m": b, "k3": c, "k4": d}, "op": "<=" | ">=", "rhs": {...},
//   "justification": "...", "premise": bool, "from": [..]}]
// Coefficients may be numbers or rational strings such as "3/5".
std::vector<ChainStep> chain_from_json(const std::string& text);
std::string chain_to_json(const std::vector<ChainStep>& chain);

std::string curve_to_csv(const std::vector<CurvePoint>& points);

// Fixed six-decimal formatting used by every emitter.
std::string format_fixed(double v);

}  // namespace pentiso
