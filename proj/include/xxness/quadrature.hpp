#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "xxness/errors.hpp"

namespace xxness {

// Adaptive Gauss-Kronrod (G7, K15) quadrature with interval bisection on the
// largest-error interval. Integrands here are smooth, so convergence is
// immediate; the refinement cap only guards against misuse.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-10,
                 int max_intervals = 2000) {
  static const double xgk[8] = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.0};
  static const double wgk[8] = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  static const double wg[4] = {
      0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

  struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
  };

  auto gk15 = [&](double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const double fc = f(c);
    double resk = wgk[7] * fc;
    double resg = wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
      const double fl = f(c - h * xgk[i]);
      const double fr = f(c + h * xgk[i]);
      resk += wgk[i] * (fl + fr);
      if (i % 2 == 1) resg += wg[i / 2] * (fl + fr);
    }
    return Interval{lo, hi, resk * h, std::abs(resk - resg) * h};
  };

  std::priority_queue<Interval> queue;
  queue.push(gk15(a, b));
  double total_value = queue.top().value;
  double total_error = queue.top().error;
  int n_intervals = 1;
  while (total_error > abs_tol) {
    if (n_intervals >= max_intervals)
      throw QuadratureError("integrate: tolerance not reached at maximum refinement");
    Interval worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Interval left = gk15(worst.a, mid);
    Interval right = gk15(mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++n_intervals;
  }
  return total_value;
}

}  // namespace xxness
