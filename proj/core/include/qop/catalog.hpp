#pragma once

#include <string>
#include <vector>

#include "qop/constants.hpp"
#include "qop/grid.hpp"
#include "qop/norm_probe.hpp"

namespace qop::functions {

using numerics::Complex;
using numerics::GridFunction;
using numerics::Sampler;

struct Traits {
  bool square_integrable = false;   // on the natural support, zero-extended to R
  bool vanishes_at_infinity = false;
  bool schwartz = false;
  bool polynomially_bounded = false;
};

enum class Support { Line, Interval };

/// A named analytic function from the worked catalog: sampler, optional
/// closed-form derivatives, declared traits (verified by tests, not
/// trusted), and the probe metadata needed to integrate it honestly.
struct AnalyticFunction {
  std::string name;
  Sampler sampler;
  Sampler d1;  // may be empty
  Sampler d2;  // may be empty
  std::vector<double> singular_points;
  Traits known_traits;
  Support support = Support::Line;
  double a = 0.0, b = 0.0;          // support endpoints when Support::Interval
  std::vector<double> hint_points;  // narrow-feature locations for quadrature

  numerics::ProbeDomain probe_domain() const {
    return support == Support::Line ? numerics::ProbeDomain::real_line()
                                    : numerics::ProbeDomain::interval(a, b);
  }
};

/// Catalog lookup by name. Parametric entries use call syntax:
/// "gaussian(1)", "well_eigenfunction(2)", "circle_mode(3)",
/// "plane_wave(2)", "twisted_eigenfunction(1,0.7)".
AnalyticFunction catalog_get(const std::string& name, const Constants& c);

AnalyticFunction parabola_well(const Constants& c);
AnalyticFunction a_eigenfunction_f(const Constants& c);
AnalyticFunction a_deficiency_g(int sign, const Constants& c);  // sign = +1 or -1
AnalyticFunction triangle_sum_fn(const Constants& c);
AnalyticFunction unbounded_l2_fn(const Constants& c);
AnalyticFunction gaussian_fn(double sigma, const Constants& c);
AnalyticFunction well_eigenfunction(int n, const Constants& c);
AnalyticFunction circle_mode(int m, const Constants& c);
AnalyticFunction plane_wave_fn(double p, const Constants& c);
AnalyticFunction twisted_eigenfunction(int n, double alpha, const Constants& c);

/// Exact piecewise area of triangle_sum over [0, T]; triangle n has
/// half-width 1/n^2 and unit height, so the full series sums to pi^2/6.
double triangle_partial_integral(double T);

/// Boundary data of a grid function: values and one-sided O(h^2)
/// derivatives up to order k-1 at both endpoints,
/// (f(a),...,f^(k-1)(a), f(b),...,f^(k-1)(b)).
struct BoundaryTrace {
  int order = 0;
  std::vector<Complex> vector;
};

BoundaryTrace boundary_trace(const GridFunction& f, int k);

enum class DecayClass { RapidDecay, PolynomialDecay, NonDecaying, Unbounded };

struct DecayEvidence {
  DecayClass classification = DecayClass::NonDecaying;
  struct Failure {
    int poly_degree = 0;
    int deriv = 0;
  };
  std::vector<Failure> unbounded_directions;  // (m, j) whose window sups grow
  std::vector<double> abs_sups;               // window sups of |f| itself
};

/// Samples sup |x^m f^(j)(x)| on dyadic windows [2^j, 2^(j+1)], j = 3..14,
/// both signs. Rapid decay means every tested direction stays bounded;
/// "grows without bound" means a monotone >= 2x rise across 4 consecutive
/// windows.
DecayEvidence schwartz_probe(const AnalyticFunction& f, int max_poly_degree = 8,
                             int max_deriv = 2);

}  // namespace qop::functions
