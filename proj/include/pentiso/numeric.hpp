#pragma once

#include <functional>

namespace pentiso {

struct ScalarMin {
  double x = 0.0;
  double fx = 0.0;
};

// Root of f on [lo, hi]; f(lo) and f(hi) must differ in sign.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-13);

// Local minimum of a unimodal f on [lo, hi].
ScalarMin golden_section(const std::function<double(double)>& f, double lo, double hi,
                         double tol = 1e-10);

// Global minimum of f on [lo, hi]: a uniform grid scan, three rounds of
// tenfold grid refinement around the best node, then golden-section polish.
ScalarMin grid_golden_min(const std::function<double(double)>& f, double lo, double hi,
                          int samples = 200, double tol = 1e-10);

}  // namespace pentiso
