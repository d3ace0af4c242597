#include "qop/derivative.hpp"

#include <array>
#include <cmath>

namespace qop::numerics {

namespace {

// O(h^2) stencil tables. Central stencils are the classic minimal ones so
// that interior truncation error scales as h^2 exactly (Richardson factor 4).
struct Stencil {
  int offset;  // index of the leftmost node relative to the evaluation node
  std::array<double, 6> c;
  int len;
};

Stencil central(int order) {
  switch (order) {
    case 1: return {-1, {-0.5, 0.0, 0.5}, 3};
    case 2: return {-1, {1.0, -2.0, 1.0}, 3};
    case 3: return {-2, {-0.5, 1.0, 0.0, -1.0, 0.5}, 5};
    case 4: return {-2, {1.0, -4.0, 6.0, -4.0, 1.0}, 5};
    default: throw_input("derivative: order must be in {1,2,3,4}");
  }
}

Stencil forward(int order) {
  switch (order) {
    case 1: return {0, {-1.5, 2.0, -0.5}, 3};
    case 2: return {0, {2.0, -5.0, 4.0, -1.0}, 4};
    case 3: return {0, {-2.5, 9.0, -12.0, 7.0, -1.5}, 5};
    case 4: return {0, {3.0, -14.0, 26.0, -24.0, 11.0, -2.0}, 6};
    default: throw_input("derivative: order must be in {1,2,3,4}");
  }
}

Stencil backward(int order) {
  Stencil s = forward(order);
  Stencil r{1 - s.len, {}, s.len};
  const double sign = (order % 2 == 0) ? 1.0 : -1.0;
  for (int i = 0; i < s.len; ++i) r.c[static_cast<size_t>(i)] = sign * s.c[static_cast<size_t>(s.len - 1 - i)];
  return r;
}

Complex apply_stencil(const std::vector<Complex>& v, int i, const Stencil& s, double scale) {
  Complex acc = 0.0;
  for (int j = 0; j < s.len; ++j) acc += s.c[static_cast<size_t>(j)] * v[static_cast<size_t>(i + s.offset + j)];
  return acc * scale;
}

}  // namespace

GridFunction derivative(const GridFunction& f, int order) {
  if (order < 1 || order > 4) throw_input("derivative: order must be in {1,2,3,4}");
  const int n = f.grid.n_points;
  if (n < 2 * order + 5) throw_structural("derivative: grid too coarse for requested order");

  const double h = f.grid.spacing();
  const double scale = 1.0 / std::pow(h, order);
  const Stencil cs = central(order);
  const Stencil fs = forward(order);
  const Stencil bs = backward(order);

  std::vector<Complex> out(static_cast<size_t>(n));
  const int lo = -cs.offset;                 // first node where the central window fits
  const int hi = n - (cs.offset + cs.len);   // last such node
  for (int i = 0; i < n; ++i) {
    const Stencil& s = (i < lo) ? fs : (i > hi) ? bs : cs;
    out[static_cast<size_t>(i)] = apply_stencil(f.values, i, s, scale);
  }
  return GridFunction(f.grid, std::move(out), f.label.empty() ? "" : f.label + "'");
}

std::vector<Complex> endpoint_derivatives(const GridFunction& f, int k) {
  if (k < 1 || k > 4) throw_input("endpoint_derivatives: k must be in {1,2,3,4}");
  const int n = f.grid.n_points;
  if (n < 2 * k + 5) throw_structural("endpoint_derivatives: grid too coarse");
  const double h = f.grid.spacing();

  std::vector<Complex> tr(static_cast<size_t>(2 * k));
  tr[0] = f.values.front();
  tr[static_cast<size_t>(k)] = f.values.back();
  for (int j = 1; j < k; ++j) {
    const double scale = 1.0 / std::pow(h, j);
    tr[static_cast<size_t>(j)] = apply_stencil(f.values, 0, forward(j), scale);
    tr[static_cast<size_t>(k + j)] = apply_stencil(f.values, n - 1, backward(j), scale);
  }
  return tr;
}

}  // namespace qop::numerics
