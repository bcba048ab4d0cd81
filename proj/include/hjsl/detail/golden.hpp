#pragma once

#include <cmath>
#include <utility>

namespace hjsl::detail {

/// Golden-section minimization of a unimodal callable on [lo, hi] down to an
/// argument interval of width `tol`. Returns {argmin, min value}; the bracket
/// endpoints are also sampled so a boundary minimum is not missed.
template <class F>
std::pair<double, double> golden_min(F&& f, double lo, double hi, double tol) {
  constexpr double invphi = 0.61803398874989484820;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  double xb = 0.5 * (a + b);
  double fb = f(xb);
  if (f1 < fb) { xb = x1; fb = f1; }
  if (f2 < fb) { xb = x2; fb = f2; }
  const double fl = f(lo), fh = f(hi);
  if (fl < fb) { xb = lo; fb = fl; }
  if (fh < fb) { xb = hi; fb = fh; }
  return {xb, fb};
}

}  // namespace hjsl::detail
