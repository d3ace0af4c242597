#pragma once

#include <cmath>

#include "qop/errors.hpp"

namespace qop {

/// Physical constants shared by operators and catalog functions.
/// `a` is the half-width of the symmetric well (or the interval length for
/// box problems), `alpha` the phase of the twisted boundary condition.
struct Constants {
  double hbar = 1.0;
  double mass = 1.0;
  double a = 1.0;
  double alpha = 0.0;

  void validate() const {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw_input("Constants: hbar must be finite and > 0");
    if (!(mass > 0.0) || !std::isfinite(mass)) throw_input("Constants: mass must be finite and > 0");
    if (!(a > 0.0) || !std::isfinite(a)) throw_input("Constants: a must be finite and > 0");
    if (!std::isfinite(alpha)) throw_input("Constants: alpha must be finite");
  }
};

}  // namespace qop
