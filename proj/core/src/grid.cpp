#include "qop/grid.hpp"

#include <cmath>

namespace qop::numerics {

static void check_grid(double a, double b, int n) {
  if (n < 8) throw_input("Grid: n_points must be >= 8");
  if (!(b > a)) throw_input("Grid: endpoints must satisfy b > a");
  if (!std::isfinite(a) || !std::isfinite(b)) throw_input("Grid: endpoints must be finite");
}

Grid Grid::interval(double a, double b, int n) {
  check_grid(a, b, n);
  return Grid{Kind::Interval, a, b, n};
}

Grid Grid::truncated_line(double truncation, int n) {
  if (!(truncation > 0.0)) throw_input("Grid: truncation radius must be > 0");
  check_grid(-truncation, truncation, n);
  return Grid{Kind::TruncatedLine, -truncation, truncation, n};
}

GridFunction::GridFunction(Grid g, std::vector<Complex> v, std::string lbl)
    : grid(g), values(std::move(v)), label(std::move(lbl)) {
  if (static_cast<int>(values.size()) != grid.n_points)
    throw_structural("GridFunction: values length must equal grid.n_points");
  for (const Complex& z : values)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw_input("GridFunction: non-finite sample in '" + label + "'");
}

GridFunction GridFunction::sample(const Grid& g, const Sampler& f, std::string label) {
  std::vector<Complex> v(static_cast<size_t>(g.n_points));
  for (int i = 0; i < g.n_points; ++i) v[static_cast<size_t>(i)] = f(g.node(i));
  return GridFunction(g, std::move(v), std::move(label));
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (const Complex& z : values) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace qop::numerics
