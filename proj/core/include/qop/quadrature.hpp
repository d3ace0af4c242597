#pragma once

#include <functional>
#include <vector>

#include "qop/grid.hpp"

namespace qop::numerics {

/// Composite-Simpson weights for a uniform grid. When the interval count is
/// odd the last three intervals are closed with the 3/8 rule.
std::vector<double> simpson_weights(const Grid& g);

/// L2 inner product <f,g> = integral conj(f) g, conjugate-linear in f.
/// Both functions must live on the same grid.
Complex inner_product(const GridFunction& f, const GridFunction& g);

/// Simpson norm ||f|| = sqrt(<f,f>).
double norm(const GridFunction& f);

/// Adaptive Simpson quadrature of a real-valued sampler. Deterministic;
/// recursion stops at `max_depth` and accepts the current estimate.
/// NaN from the integrand raises an input error; +-inf propagates to the
/// caller, which decides what unbounded growth means.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-10, double abs_tol = 1e-14, int max_depth = 32);

}  // namespace qop::numerics
