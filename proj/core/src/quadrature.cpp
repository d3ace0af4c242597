#include "qop/quadrature.hpp"

#include <cmath>

namespace qop::numerics {

std::vector<double> simpson_weights(const Grid& g) {
  const int n = g.n_points;
  const double h = g.spacing();
  std::vector<double> w(static_cast<size_t>(n), 0.0);
  const int intervals = n - 1;
  int simpson_end = intervals;  // node index up to which plain Simpson runs
  if (intervals % 2 != 0) simpson_end = intervals - 3;

  if (simpson_end > 0) {
    w[0] += h / 3.0;
    w[static_cast<size_t>(simpson_end)] += h / 3.0;
    for (int i = 1; i < simpson_end; ++i)
      w[static_cast<size_t>(i)] += (i % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
  }
  if (simpson_end != intervals) {
    // Simpson 3/8 on the trailing three intervals
    const double c = 3.0 * h / 8.0;
    w[static_cast<size_t>(simpson_end)] += c;
    w[static_cast<size_t>(simpson_end + 1)] += 3.0 * c;
    w[static_cast<size_t>(simpson_end + 2)] += 3.0 * c;
    w[static_cast<size_t>(simpson_end + 3)] += c;
  }
  return w;
}

Complex inner_product(const GridFunction& f, const GridFunction& g) {
  if (!(f.grid == g.grid)) throw_structural("inner_product: grid mismatch");
  const std::vector<double> w = simpson_weights(f.grid);
  Complex acc = 0.0;
  for (size_t i = 0; i < w.size(); ++i) acc += w[i] * std::conj(f.values[i]) * g.values[i];
  return acc;
}

double norm(const GridFunction& f) { return std::sqrt(std::abs(inner_product(f, f).real())); }

namespace {

double simpson_panel(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double m, double fm) {
  (void)m;
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double eval_checked(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (std::isnan(v)) throw_input("adaptive_simpson: integrand returned NaN");
  return v;
}

double adapt(const std::function<double(double)>& f, double a, double fa, double b, double fb,
             double m, double fm, double whole, double rel_tol, double abs_tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = eval_checked(f, lm);
  const double frm = eval_checked(f, rm);
  const double left = simpson_panel(f, a, fa, m, fm, lm, flm);
  const double right = simpson_panel(f, m, fm, b, fb, rm, frm);
  const double delta = left + right - whole;
  if (!std::isfinite(delta)) return left + right;  // inf: growth handled by caller
  if (depth <= 0 || std::abs(delta) <= 15.0 * std::max(abs_tol, rel_tol * std::abs(left + right)))
    return left + right + delta / 15.0;
  return adapt(f, a, fa, m, fm, lm, flm, left, rel_tol, abs_tol / 2.0, depth - 1) +
         adapt(f, m, fm, b, fb, rm, frm, right, rel_tol, abs_tol / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double rel_tol,
                        double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = eval_checked(f, a);
  const double fb = eval_checked(f, b);
  const double fm = eval_checked(f, m);
  const double whole = simpson_panel(f, a, fa, b, fb, m, fm);
  return adapt(f, a, fa, b, fb, m, fm, whole, rel_tol, abs_tol, max_depth);
}

}  // namespace qop::numerics
