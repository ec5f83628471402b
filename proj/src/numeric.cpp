#include "pentiso/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "pentiso/errors.hpp"

namespace pentiso {

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) throw ConvergenceError("bisection bracket has no sign change");
  for (int it = 0; it < 400 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ScalarMin golden_section(const std::function<double(double)>& f, double lo, double hi,
                         double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  double fc = f(c), fd = f(d);
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = f(d);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, f(x)};
}

ScalarMin grid_golden_min(const std::function<double(double)>& f, double lo, double hi,
                          int samples, double tol) {
  if (!(hi > lo) || samples < 2) throw DomainError("grid_golden_min needs lo < hi");
  double a = lo, b = hi;
  ScalarMin best{lo, f(lo)};
  for (int round = 0; round < 4; ++round) {
    const double step = (b - a) / samples;
    for (int i = 0; i <= samples; ++i) {
      const double x = a + step * i;
      const double fx = f(x);
      if (fx < best.fx) best = {x, fx};
    }
    a = std::max(lo, best.x - step);
    b = std::min(hi, best.x + step);
  }
  const ScalarMin polished = golden_section(f, a, b, tol);
  return polished.fx < best.fx ? polished : best;
}

}  // namespace pentiso
