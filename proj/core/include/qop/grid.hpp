#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "qop/errors.hpp"

namespace qop::numerics {

using Complex = std::complex<double>;
using Sampler = std::function<Complex(double)>;

/// Uniform 1D grid. Either a compact interval [a,b] or a symmetric
/// truncation [-T,T] standing in for the real line.
struct Grid {
  enum class Kind { Interval, TruncatedLine };

  Kind kind = Kind::Interval;
  double a = 0.0;
  double b = 1.0;
  int n_points = 0;

  static Grid interval(double a, double b, int n);
  static Grid truncated_line(double truncation, int n);

  double spacing() const { return (b - a) / static_cast<double>(n_points - 1); }
  double node(int i) const { return a + spacing() * static_cast<double>(i); }
  bool compact() const { return kind == Kind::Interval; }

  bool operator==(const Grid& o) const {
    return kind == o.kind && a == o.a && b == o.b && n_points == o.n_points;
  }
};

/// Complex-valued samples on a Grid. Values are validated finite on
/// construction; instances are immutable by convention.
struct GridFunction {
  Grid grid;
  std::vector<Complex> values;
  std::string label;

  GridFunction() = default;
  GridFunction(Grid g, std::vector<Complex> v, std::string lbl = "");

  static GridFunction sample(const Grid& g, const Sampler& f, std::string label = "");

  int size() const { return static_cast<int>(values.size()); }
  double max_abs() const;
};

}  // namespace qop::numerics
