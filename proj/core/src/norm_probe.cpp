#include "qop/norm_probe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qop/quadrature.hpp"

namespace qop::numerics {

namespace {

struct Segment {
  double lo, hi;
};

// Kept regions after removing exclusion balls around singular points.
std::vector<Segment> kept_segments(double lo, double hi, const std::vector<double>& sing,
                                   double eps) {
  std::vector<Segment> holes;
  for (double s : sing) {
    const double l = std::max(lo, s - eps);
    const double h = std::min(hi, s + eps);
    if (h > l) holes.push_back({l, h});
  }
  std::sort(holes.begin(), holes.end(), [](const Segment& x, const Segment& y) { return x.lo < y.lo; });
  std::vector<Segment> merged;
  for (const Segment& h : holes) {
    if (!merged.empty() && h.lo <= merged.back().hi)
      merged.back().hi = std::max(merged.back().hi, h.hi);
    else
      merged.push_back(h);
  }
  std::vector<Segment> kept;
  double cursor = lo;
  for (const Segment& h : merged) {
    if (h.lo > cursor) kept.push_back({cursor, h.lo});
    cursor = h.hi;
  }
  if (hi > cursor) kept.push_back({cursor, hi});
  return kept;
}

// Break a kept segment at hint points and at dyadic distances from the
// nearby singular points, so steep features always receive an endpoint
// sample before the adaptive pass.
std::vector<double> breakpoints(const Segment& seg, const std::vector<double>& sing,
                                const std::vector<double>& hints) {
  std::vector<double> pts{seg.lo, seg.hi};
  for (double h : hints)
    if (h > seg.lo && h < seg.hi) pts.push_back(h);
  for (double s : sing) {
    for (int side = -1; side <= 1; side += 2) {
      double d = std::max(std::abs(seg.lo - s), std::abs(seg.hi - s));
      for (double r = 1e-12; r <= d; r *= 2.0) {
        const double x = s + side * r;
        if (x > seg.lo && x < seg.hi) pts.push_back(x);
      }
    }
  }
  // dyadic tail partition keeps long line segments well conditioned
  for (double r = 1.0; r < std::max(std::abs(seg.lo), std::abs(seg.hi)); r *= 2.0)
    for (double x : {r, -r})
      if (x > seg.lo && x < seg.hi) pts.push_back(x);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

NormProbeResult improper_norm_probe(const Sampler& f, std::vector<double> singular_points,
                                    const ProbeDomain& dom, const ProbeOptions& opts) {
  if (!dom.line) {
    for (double s : singular_points)
      if (s < dom.a || s > dom.b)
        throw_input("improper_norm_probe: singular point outside domain closure");
  }

  const auto integrand = [&f](double x) {
    const Complex z = f(x);
    if (std::isnan(z.real()) || std::isnan(z.imag()))
      throw_input("improper_norm_probe: sampler returned NaN off the singular set");
    return std::norm(z);
  };

  NormProbeResult result;
  std::vector<double>& trace = result.refinement_trace;

  for (int j = 0; j < opts.max_refinements; ++j) {
    const double eps = opts.eps0 * std::pow(0.5, j);
    const double lo = dom.line ? -opts.t0 * std::pow(2.0, j) : dom.a;
    const double hi = dom.line ? opts.t0 * std::pow(2.0, j) : dom.b;

    double partial = 0.0;
    for (const Segment& seg : kept_segments(lo, hi, singular_points, eps)) {
      const std::vector<double> pts = breakpoints(seg, singular_points, opts.hint_points);
      for (size_t i = 0; i + 1 < pts.size(); ++i)
        partial += adaptive_simpson(integrand, pts[i], pts[i + 1], 1e-9, 1e-16, 30);
    }

    if (std::isinf(partial)) {
      // overflow past the detection window counts as divergence evidence
      // only when the trace was already climbing
      if (trace.size() >= 1 && (trace.size() < 2 || trace.back() > trace[trace.size() - 2])) {
        trace.push_back(partial);
        result.status = ProbeStatus::Divergent;
        return result;
      }
      throw_input("improper_norm_probe: non-finite partial without preceding growth");
    }
    trace.push_back(partial);

    const size_t m = trace.size();
    if (m >= 2) {
      const double cur = trace[m - 1], prev = trace[m - 2];
      if (std::abs(cur - prev) <= opts.rtol * std::max(std::abs(cur), 1e-300) ||
          (cur == 0.0 && prev == 0.0)) {
        result.status = ProbeStatus::Finite;
        result.value = cur;
        return result;
      }
    }
    if (m >= 4) {
      const bool increasing = trace[m - 1] > trace[m - 2] && trace[m - 2] > trace[m - 3] &&
                              trace[m - 3] > trace[m - 4];
      if (increasing && trace[m - 4] > 0.0 &&
          trace[m - 1] >= opts.growth_factor * trace[m - 4]) {
        result.status = ProbeStatus::Divergent;
        return result;
      }
    }
    // compact domain without singular points: nothing refines, partials repeat
    if (!dom.line && singular_points.empty() && m >= 2) break;
  }
  result.status = ProbeStatus::Inconclusive;
  return result;
}

}  // namespace qop::numerics
