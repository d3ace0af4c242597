#pragma once

#include <optional>
#include <vector>

#include "qop/grid.hpp"

namespace qop::numerics {

enum class ProbeStatus { Finite, Divergent, Inconclusive };

struct NormProbeResult {
  ProbeStatus status = ProbeStatus::Inconclusive;
  std::optional<double> value;          // present iff Finite
  std::vector<double> refinement_trace;  // partial integrals, one per refinement
};

struct ProbeDomain {
  bool line = false;
  double a = 0.0;
  double b = 0.0;
  static ProbeDomain interval(double a, double b) { return {false, a, b}; }
  static ProbeDomain real_line() { return {true, 0.0, 0.0}; }
};

struct ProbeOptions {
  double rtol = 1e-6;          // successive-partials agreement for Finite
  double growth_factor = 10.0; // growth across 3 refinements for Divergent
  int max_refinements = 40;
  double eps0 = 0.5;           // initial exclusion radius at singular points
  double t0 = 2.0;             // initial truncation radius on the line
  std::vector<double> hint_points;  // forced subdivision points (narrow features)
};

/// Decides square-integrability of |f|^2 over the domain by geometric
/// refinement: exclusion radii shrink toward each singular point while the
/// truncation radius grows toward infinity. Finite when two successive
/// partials agree to rtol; Divergent when the trace is strictly increasing
/// and grows by >= growth_factor across the last 3 refinements; otherwise
/// Inconclusive after max_refinements. Inconclusive is a real outcome, never
/// coerced to either side.
NormProbeResult improper_norm_probe(const Sampler& f, std::vector<double> singular_points,
                                    const ProbeDomain& dom, const ProbeOptions& opts = {});

}  // namespace qop::numerics
