#include "pentiso/optimize.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "pentiso/errors.hpp"
#include "pentiso/numeric.hpp"

namespace pentiso {

AngleConstraintSet& AngleConstraintSet::fix_deg(std::size_t index, double deg) {
  fixed.emplace_back(index, deg_to_rad(deg));
  return *this;
}

AngleConstraintSet& AngleConstraintSet::relate_deg(std::vector<int> coeffs, double rhs_deg) {
  relations.push_back({std::move(coeffs), deg_to_rad(rhs_deg)});
  return *this;
}

AngleConstraintSet& AngleConstraintSet::equal(std::size_t i, std::size_t j) {
  std::vector<int> c(n, 0);
  c.at(i) = 1;
  c.at(j) = -1;
  relations.push_back({std::move(c), 0.0});
  return *this;
}

AngleConstraintSet& AngleConstraintSet::bound_deg(std::size_t index, double lo_deg, double hi_deg) {
  if (box.empty()) box.assign(n, {0.0, kPi});
  box.at(index) = {deg_to_rad(lo_deg), deg_to_rad(hi_deg)};
  return *this;
}

namespace {

constexpr double kFeasTol = 1e-9;

struct EqualitySystem {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
};

EqualitySystem equality_system(const AngleConstraintSet& c, const std::vector<double>& lo,
                               const std::vector<double>& hi) {
  const std::size_t n = c.n;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  rows.emplace_back(n, 1.0);
  rhs.push_back(static_cast<double>(n - 2) * kPi);
  for (const auto& [idx, value] : c.fixed) {
    if (idx >= n) throw DomainError("fixed angle index out of range");
    std::vector<double> r(n, 0.0);
    r[idx] = 1.0;
    rows.push_back(std::move(r));
    rhs.push_back(value);
  }
  for (const auto& rel : c.relations) {
    if (rel.coeffs.size() != n) throw DomainError("relation needs one coefficient per angle");
    rows.emplace_back(rel.coeffs.begin(), rel.coeffs.end());
    rhs.push_back(rel.rhs);
  }
  // a degenerate box pins the angle
  for (std::size_t i = 0; i < n; ++i) {
    if (hi[i] - lo[i] <= 1e-12) {
      std::vector<double> r(n, 0.0);
      r[i] = 1.0;
      rows.push_back(std::move(r));
      rhs.push_back(0.5 * (lo[i] + hi[i]));
    }
  }
  EqualitySystem s{Eigen::MatrixXd(rows.size(), n), Eigen::VectorXd(rows.size())};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t j = 0; j < n; ++j) s.a(r, j) = rows[r][j];
    s.b(r) = rhs[r];
  }
  return s;
}

void angle_bounds(const AngleConstraintSet& c, std::vector<double>& lo, std::vector<double>& hi) {
  lo.assign(c.n, 0.0);
  hi.assign(c.n, kPi);
  if (c.box.empty()) return;
  if (c.box.size() != c.n) throw DomainError("box needs one interval per angle");
  for (std::size_t i = 0; i < c.n; ++i) {
    lo[i] = std::max(0.0, c.box[i].first);
    hi[i] = std::min(kPi, c.box[i].second);
    if (lo[i] > hi[i]) throw InfeasibleError("empty box interval for angle " + std::to_string(i));
  }
}

double cot_half(double a) { return 1.0 / std::tan(0.5 * a); }

CircumscribedPolygon try_circumscribe(const AngleVector& a) { return circumscribe(a); }

MinimizationResult make_result(std::vector<double> angles) {
  AngleVector av(std::move(angles));
  const double p = cot_perimeter(av);
  return {av, p, try_circumscribe(av), {}};
}

bool lex_less_sorted(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

ReducedConstraints reduce_constraints(const AngleConstraintSet& c) {
  if (c.n < 3) throw DomainError("constraint set needs at least three angles");
  ReducedConstraints out;
  angle_bounds(c, out.lo, out.hi);
  const auto sys = equality_system(c, out.lo, out.hi);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  svd.setThreshold(1e-10);
  const Eigen::VectorXd p = svd.solve(sys.b);
  if ((sys.a * p - sys.b).norm() > kFeasTol * std::max(1.0, sys.b.norm())) {
    throw InfeasibleError("angle relations are inconsistent with the angle sum");
  }
  const auto rank = static_cast<Eigen::Index>(svd.rank());
  out.particular.assign(p.data(), p.data() + p.size());
  const Eigen::MatrixXd& v = svd.matrixV();
  for (Eigen::Index k = rank; k < v.cols(); ++k) {
    out.null_basis.emplace_back(v.col(k).data(), v.col(k).data() + v.rows());
  }
  return out;
}

MinimizationResult minimize_perimeter(const AngleConstraintSet& c) {
  const auto rc = reduce_constraints(c);
  const std::size_t n = c.n;
  const auto d = static_cast<Eigen::Index>(rc.null_basis.size());
  Eigen::VectorXd p(n);
  for (std::size_t i = 0; i < n; ++i) p(i) = rc.particular[i];
  Eigen::MatrixXd nb(n, d);
  for (Eigen::Index k = 0; k < d; ++k)
    for (std::size_t i = 0; i < n; ++i) nb(i, k) = rc.null_basis[k][i];

  // half-spaces g.z <= h with the angle-range constraints
  std::vector<Eigen::VectorXd> g;
  std::vector<double> h;
  std::vector<std::size_t> owner;
  std::vector<bool> upper;
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::VectorXd row = nb.row(i).transpose();
    if (row.norm() < 1e-12) {
      if (p(i) < rc.lo[i] - kFeasTol || p(i) > rc.hi[i] + kFeasTol || p(i) <= 0.0)
        throw InfeasibleError("pinned angle " + std::to_string(i) + " violates its bounds");
      if (c.convex_only && p(i) >= kPi - kFeasTol)
        throw InfeasibleError("pinned angle " + std::to_string(i) + " is not convex");
      continue;
    }
    g.push_back(-row);
    h.push_back(p(i) - rc.lo[i]);
    owner.push_back(i);
    upper.push_back(false);
    g.push_back(row);
    h.push_back(rc.hi[i] - p(i));
    owner.push_back(i);
    upper.push_back(true);
  }

  if (d == 0) {
    std::vector<double> a(p.data(), p.data() + p.size());
    return make_result(std::move(a));
  }
  if (d > 4) throw DimensionError("more than four free angle dimensions");

  // a strictly interior start: centroid of the enumerated polytope vertices
  const std::size_t m = g.size();
  Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
  std::size_t vertex_count = 0;
  std::vector<std::size_t> pick(static_cast<std::size_t>(d));
  std::vector<bool> mask(m, false);
  std::fill(mask.begin(), mask.begin() + d, true);
  do {
    Eigen::MatrixXd gm(d, d);
    Eigen::VectorXd hv(d);
    Eigen::Index r = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (!mask[j]) continue;
      gm.row(r) = g[j].transpose();
      hv(r) = h[j];
      ++r;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(gm);
    if (lu.rank() < d) continue;
    const Eigen::VectorXd z = lu.solve(hv);
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) ok = g[j].dot(z) <= h[j] + 1e-12;
    if (!ok) continue;
    centroid += z;
    ++vertex_count;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  if (vertex_count == 0) throw InfeasibleError("feasible angle region is empty");
  Eigen::VectorXd z = centroid / static_cast<double>(vertex_count);

  auto slacks_ok = [&](const Eigen::VectorXd& zz) {
    for (std::size_t j = 0; j < m; ++j)
      if (h[j] - g[j].dot(zz) <= 0.0) return false;
    return true;
  };
  double min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m; ++j) min_slack = std::min(min_slack, h[j] - g[j].dot(z));
  if (min_slack <= 1e-10) throw InfeasibleError("feasible angle region has empty interior");

  auto angles_of = [&](const Eigen::VectorXd& zz) -> Eigen::VectorXd { return p + nb * zz; };
  auto barrier_value = [&](const Eigen::VectorXd& zz, double t) {
    const Eigen::VectorXd a = angles_of(zz);
    double f = 0.0;
    for (std::size_t i = 0; i < n; ++i) f += cot_half(a(i));
    double phi = t * f;
    for (std::size_t j = 0; j < m; ++j) phi -= std::log(h[j] - g[j].dot(zz));
    return phi;
  };

  // log-barrier interior point with damped Newton steps
  for (double t = 1.0; static_cast<double>(m) / t > 1e-13; t *= 10.0) {
    for (int it = 0; it < 200; ++it) {
      const Eigen::VectorXd a = angles_of(z);
      Eigen::VectorXd grad = Eigen::VectorXd::Zero(d);
      Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(d, d);
      for (std::size_t i = 0; i < n; ++i) {
        const double s = 1.0 / std::sin(0.5 * a(i));
        const double d1 = -0.5 * s * s;
        const double d2 = 0.5 * s * s * cot_half(a(i));
        const Eigen::VectorXd row = nb.row(i).transpose();
        grad += t * d1 * row;
        hess += t * d2 * row * row.transpose();
      }
      for (std::size_t j = 0; j < m; ++j) {
        const double sl = h[j] - g[j].dot(z);
        grad += g[j] / sl;
        hess += g[j] * g[j].transpose() / (sl * sl);
      }
      const Eigen::VectorXd step = -hess.ldlt().solve(grad);
      const double decrement = -grad.dot(step);
      if (decrement < 1e-20) break;
      double alpha = 1.0;
      const double phi0 = barrier_value(z, t);
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls, alpha *= 0.5) {
        const Eigen::VectorXd cand = z + alpha * step;
        if (!slacks_ok(cand)) continue;
        if (barrier_value(cand, t) <= phi0 - 0.25 * alpha * decrement) {
          z = cand;
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
  }

  const Eigen::VectorXd a = angles_of(z);
  if (c.convex_only) {
    for (std::size_t j = 0; j < m; ++j) {
      if (upper[j] && rc.hi[owner[j]] >= kPi && h[j] - g[j].dot(z) < 1e-7)
        throw UnboundedError("perimeter infimum sits at a straight angle");
    }
  }
  std::vector<double> out(a.data(), a.data() + a.size());
  return make_result(std::move(out));
}

namespace {

// Reduced row echelon form of [A | b] with partial pivoting, in degrees.
struct Echelon {
  std::vector<std::vector<double>> rows;  // n coefficients followed by rhs
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(std::vector<std::vector<double>> rows, std::size_t n) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t best = r;
    for (std::size_t i = r + 1; i < rows.size(); ++i)
      if (std::abs(rows[i][col]) > std::abs(rows[best][col])) best = i;
    if (std::abs(rows[best][col]) < 1e-12) continue;
    std::swap(rows[r], rows[best]);
    const double piv = rows[r][col];
    for (double& v : rows[r]) v /= piv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const double f = rows[i][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= n; ++j) rows[i][j] -= f * rows[r][j];
    }
    e.pivots.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (std::abs(rows[i][n]) > 1e-7) throw InfeasibleError("angle relations are inconsistent");
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

}  // namespace

MinimizationResult grid_oracle(const AngleConstraintSet& c, const GridOracleConfig& cfg) {
  if (!(cfg.resolution > 0.0) || cfg.refinement_rounds < 0)
    throw DomainError("grid oracle needs a positive resolution");
  const std::size_t n = c.n;
  std::vector<double> lo(n, 0.0), hi(n, 180.0);
  if (!c.box.empty()) {
    if (c.box.size() != n) throw DomainError("box needs one interval per angle");
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::max(0.0, rad_to_deg(c.box[i].first));
      hi[i] = std::min(180.0, rad_to_deg(c.box[i].second));
    }
  }
  std::vector<std::vector<double>> rows;
  std::vector<double> sum_row(n + 1, 1.0);
  sum_row[n] = 180.0 * static_cast<double>(n - 2);
  rows.push_back(sum_row);
  for (const auto& [idx, v] : c.fixed) {
    std::vector<double> r(n + 1, 0.0);
    r.at(idx) = 1.0;
    r[n] = rad_to_deg(v);
    rows.push_back(std::move(r));
  }
  for (const auto& rel : c.relations) {
    if (rel.coeffs.size() != n) throw DomainError("relation needs one coefficient per angle");
    std::vector<double> r(rel.coeffs.begin(), rel.coeffs.end());
    r.push_back(rad_to_deg(rel.rhs));
    rows.push_back(std::move(r));
  }
  const Echelon ech = row_reduce(std::move(rows), n);
  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < n; ++j)
    if (std::find(ech.pivots.begin(), ech.pivots.end(), j) == ech.pivots.end()) free_vars.push_back(j);
  const std::size_t d = free_vars.size();
  if (d > 4) throw DimensionError("grid oracle supports at most four free angles");

  const double upper_open = c.convex_only ? 180.0 - 1e-9 : 180.0;
  auto evaluate = [&](const std::vector<double>& fv, std::vector<double>& angles) {
    for (std::size_t k = 0; k < d; ++k) angles[free_vars[k]] = fv[k];
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
      double v = ech.rows[r][n];
      for (std::size_t k = 0; k < d; ++k) v -= ech.rows[r][free_vars[k]] * fv[k];
      angles[ech.pivots[r]] = v;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = angles[i];
      if (a < lo[i] - 1e-9 || a > hi[i] + 1e-9 || a <= 1e-9 || a > upper_open)
        return std::numeric_limits<double>::infinity();
      s += 1.0 / std::tan(deg_to_rad(a) / 2.0);
    }
    return s;
  };

  std::vector<double> best_angles(n), scratch(n);
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](const std::vector<double>& fv) {
    const double f = evaluate(fv, scratch);
    if (f < best - 1e-15 || (std::abs(f - best) <= 1e-15 && lex_less_sorted(scratch, best_angles))) {
      best = f;
      best_angles = scratch;
    }
  };
  // odometer over a d-dimensional grid
  auto scan = [&](const std::vector<double>& from, const std::vector<double>& to, double step) {
    std::vector<long> count(d), idx(d, 0);
    for (std::size_t k = 0; k < d; ++k)
      count[k] = static_cast<long>(std::floor((to[k] - from[k]) / step + 1e-9)) + 1;
    std::vector<double> fv(d);
    while (true) {
      for (std::size_t k = 0; k < d; ++k) fv[k] = from[k] + step * static_cast<double>(idx[k]);
      consider(fv);
      std::size_t k = 0;
      while (k < d && ++idx[k] == count[k]) idx[k++] = 0;
      if (k == d) break;
    }
  };

  if (d == 0) {
    consider({});
  } else {
    std::vector<double> flo(d), fhi(d);
    double span = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      flo[k] = lo[free_vars[k]];
      fhi[k] = hi[free_vars[k]];
      span = std::max(span, fhi[k] - flo[k]);
    }
    constexpr double kBudget = 2e6;
    double step = cfg.resolution;
    while (std::pow(span / step + 1.0, static_cast<double>(d)) > kBudget) step *= 10.0;
    while (!std::isfinite(best)) {
      scan(flo, fhi, step);
      if (std::isfinite(best)) break;
      step /= 10.0;
      if (step < cfg.resolution * 1e-3) throw InfeasibleError("grid oracle found no feasible point");
    }
    int extra = 0;
    while (step > cfg.resolution * (1.0 + 1e-9) || extra < cfg.refinement_rounds) {
      if (step <= cfg.resolution * (1.0 + 1e-9)) ++extra;
      std::vector<double> wlo(d), whi(d);
      for (std::size_t k = 0; k < d; ++k) {
        const double centre = best_angles[free_vars[k]];
        wlo[k] = std::max(flo[k], centre - step);
        whi[k] = std::min(fhi[k], centre + step);
      }
      step /= 10.0;
      scan(wlo, whi, step);
    }
  }
  if (!std::isfinite(best)) throw InfeasibleError("grid oracle found no feasible point");
  // re-close the angle sum exactly before constructing
  std::vector<double> rad(n);
  for (std::size_t i = 0; i < n; ++i) rad[i] = deg_to_rad(best_angles[i]);
  return make_result(std::move(rad));
}

AngleConstraintSet preset_constraints(const std::string& name) {
  AngleConstraintSet c;
  if (name == "unconstrained") return c;
  if (name == "degree_four") {
    c.fix_deg(0, 90.0).equal(1, 2).equal(2, 3).equal(3, 4);
    return c;
  }
  if (name == "outside_band") {
    c.fix_deg(0, 120.0).equal(1, 2).equal(2, 3).equal(3, 4);
    return c;
  }
  if (name == "two_right") {
    c.fix_deg(0, 90.0).fix_deg(1, 90.0);
    return c;
  }
  throw DomainError("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"unconstrained", "degree_four", "outside_band", "two_right"};
}

double one_free_angle_perimeter(double a) {
  const double b = (3.0 * kPi - a) / 4.0;
  const double angles[5] = {a, b, b, b, b};
  return cot_perimeter(std::span<const double>(angles));
}

AngleBounds efficient_angle_bounds() {
  const double p1 = cairo_perimeter();
  auto g = [p1](double a) { return one_free_angle_perimeter(a) - p1; };
  AngleBounds b;
  b.a_min = bisect(g, deg_to_rad(30.0), deg_to_rad(108.0), 1e-14);
  b.a_max = bisect(g, deg_to_rad(108.0), kPi, 1e-14);
  return b;
}

InscribedPentagonParams inscribed_from_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5 * kPi))
    throw InfeasibleEdgeError("central half-angle outside (0, pi/2)");
  const double area_factor = 2.0 * std::sin(alpha) - 0.5 * std::sin(4.0 * alpha);
  if (!(area_factor > 0.0)) throw InfeasibleEdgeError("no unit-area inscribed pentagon");
  InscribedPentagonParams out;
  out.alpha = alpha;
  out.r = 1.0 / std::sqrt(area_factor);
  out.e = 2.0 * out.r * std::sin(2.0 * alpha);
  out.perimeter = 8.0 * out.r * std::sin(0.5 * alpha) + out.e;
  return out;
}

namespace {
constexpr double kAlphaLo = 1e-3;
}

InscribedPentagonParams inscribed_given_edge(double e) {
  if (!(e > 0.0)) throw InfeasibleEdgeError("edge length must be positive");
  if (!(e < 2.0)) throw InfeasibleEdgeError("edge length must lie below 2");
  const double e_top = inscribed_from_alpha(kAlphaLo).e;
  if (e >= e_top) throw InfeasibleEdgeError("edge too long for a unit-area inscribed pentagon");
  // e(alpha) decreases from e_top to 0 on (kAlphaLo, pi/2)
  const double alpha = bisect([e](double a) { return inscribed_from_alpha(a).e - e; }, kAlphaLo,
                              0.5 * kPi - 1e-15, 1e-15);
  return inscribed_from_alpha(alpha);
}

EdgeBounds efficient_edge_bounds(double target) {
  auto g = [target](double a) { return inscribed_from_alpha(a).perimeter - target; };
  const double sym = deg_to_rad(72.0);
  EdgeBounds b;
  b.alpha_lo = bisect(g, 0.01, sym, 1e-15);
  b.alpha_hi = bisect(g, sym, 0.5 * kPi - 1e-12, 1e-15);
  b.e_max = inscribed_from_alpha(b.alpha_lo).e;
  b.e_min = inscribed_from_alpha(b.alpha_hi).e;
  return b;
}

EdgeBounds efficient_edge_bounds() { return efficient_edge_bounds(cairo_perimeter()); }

double min_triangle_given_edge(double e) {
  if (!(e > 0.0)) throw DomainError("triangle base must be positive");
  return e + 2.0 * std::sqrt(0.25 * e * e + 4.0 / (e * e));
}

std::vector<CurvePoint> one_angle_curve(double lo_deg, double hi_deg, double step_deg) {
  if (!(lo_deg > 0.0 && hi_deg <= 180.0 && lo_deg <= hi_deg) || !(step_deg > 0.0))
    throw DomainError("curve range must lie inside (0, 180] with a positive step");
  const double p1 = cairo_perimeter();
  const auto count = static_cast<long>(std::floor((hi_deg - lo_deg) / step_deg + 1e-9)) + 1;
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    const double a = lo_deg + step_deg * static_cast<double>(i);
    out.push_back({a, one_free_angle_perimeter(deg_to_rad(a)) - p1});
  }
  return out;
}

std::vector<Deg3Case> quad_deg3_case_scan(std::optional<std::pair<double, double>> s_range_deg) {
  const AngleBounds ab = efficient_angle_bounds();
  double lo = rad_to_deg(ab.a_min), hi = 90.0;
  if (s_range_deg) {
    lo = std::max(lo, s_range_deg->first);
    hi = std::min(hi, s_range_deg->second);
  }
  if (!(lo < hi)) throw DomainError("empty s range");
  auto pent = [](std::initializer_list<double> deg) {
    std::vector<double> r;
    for (double d : deg) r.push_back(deg_to_rad(d));
    return cot_perimeter(std::span<const double>(r));
  };
  std::vector<Deg3Case> out;
  out.push_back({1, "infeasible", std::numeric_limits<double>::quiet_NaN(), 0.0,
                 "a + 3s = 360 and a + 2s = 360 force s = 0"});
  out.push_back({2, "not_efficient", 2.0 * rad_to_deg(ab.a_min), 0.0,
                 "x = 2s exceeds the largest efficient angle"});

  // x + y = 3s with a fifth angle 180 - s; perimeter is least at x = y
  AngleConstraintSet c3;
  c3.relate_deg({3, 1, 0, 0, 0}, 360.0).relate_deg({0, 1, 1, 1, 0}, 360.0).bound_deg(0, lo, hi);
  const auto r3 = minimize_perimeter(c3);
  out.push_back({3, "minimum", r3.perimeter, r3.angles.degrees()[0],
                 "two-dimensional solve; the optimum has x = y"});

  const auto m4 = grid_golden_min(
      [&](double s) { return pent({s, 360.0 - 3.0 * s, 1.5 * s, 90.0 + s / 4.0, 90.0 + s / 4.0}); },
      lo, hi);
  out.push_back({4, "minimum", m4.fx, m4.x, "angles s, 360-3s, 3s/2 and two of (180+s/2)/2"});
  const auto m5 = grid_golden_min(
      [&](double s) { return pent({s, 360.0 - 3.0 * s, 6.0 * s - 360.0, 270.0 - 2.0 * s, 270.0 - 2.0 * s}); },
      lo, hi);
  out.push_back({5, is_efficient(m5.fx) ? "minimum" : "not_efficient", m5.fx, m5.x,
                 "angles s, 360-3s, 6s-360 and two of 270-2s"});
  return out;
}

}  // namespace pentiso
