#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>

namespace oscent {

struct QuadratureSpec {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  // Refinement levels allowed per panel.
  int max_subdivisions = 15;
  // Expected number of sign changes of the integrand on a finite range; the
  // range is pre-split so that every panel spans at most one oscillation.
  std::optional<int> oscillation_hint;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Integral of f over [lo, hi]; hi may be kInfinity for integrands with an
// exponential or algebraic tail. Throws AccuracyError on non-convergence.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec = {});

// Sum of integrals over consecutive panels [breaks[i], breaks[i+1]]. The last
// break may be kInfinity. Each panel is integrated with a double-exponential
// rule, so integrable endpoint singularities (kinks at polynomial zeros,
// algebraic behaviour at the origin) are placed on panel boundaries.
QuadratureResult integrate_panels(const std::function<double(double)>& f,
                                  std::span<const double> breaks,
                                  const QuadratureSpec& spec = {});

}  // namespace oscent
