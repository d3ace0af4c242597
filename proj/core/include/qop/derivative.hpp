#pragma once

#include "qop/grid.hpp"

namespace qop::numerics {

/// Finite-difference derivative of order 1..4, O(h^2) everywhere: central
/// stencils in the interior, one-sided stencils of the same accuracy at
/// nodes where the central window does not fit.
/// Requires n_points >= 2*order + 5.
GridFunction derivative(const GridFunction& f, int order);

/// Endpoint derivative values f^(j)(a), f^(j)(b) for j = 0..k-1 using the
/// one-sided O(h^2) stencils only. Layout: (f(a),...,f^(k-1)(a), f(b),...,f^(k-1)(b)).
std::vector<Complex> endpoint_derivatives(const GridFunction& f, int k);

}  // namespace qop::numerics
