#include "oscent/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "oscent/errors.hpp"

namespace oscent {

namespace {

using boost::math::quadrature::exp_sinh;
using boost::math::quadrature::tanh_sinh;

QuadratureResult panel(const std::function<double(double)>& f, double a, double b,
                       const QuadratureSpec& spec) {
  QuadratureResult r;
  if (a == b) return r;
  const auto levels = static_cast<std::size_t>(spec.max_subdivisions);
  if (std::isinf(b)) {
    thread_local exp_sinh<double> integrator(levels);
    r.value = integrator.integrate(f, a, b, spec.rel_tol, &r.error, &r.l1);
  } else {
    thread_local tanh_sinh<double> integrator(levels);
    // tanh_sinh passes the distance to the nearest endpoint as a second
    // argument; only the abscissa is needed here.
    r.value = integrator.integrate([&](double x) { return f(x); }, a, b, spec.rel_tol, &r.error,
                                   &r.l1);
  }
  return r;
}

// High-degree integrands evaluated by recurrence carry roundoff that the
// error estimate of narrow end panels picks up.
constexpr double kRoundoffFloor = 1e-10;

void check(const QuadratureResult& r, const QuadratureSpec& spec) {
  const double allowed = std::max(spec.abs_tol, std::max(spec.rel_tol, kRoundoffFloor) * r.l1);
  if (!std::isfinite(r.value) || r.error > 100.0 * allowed + 1e-300) {
    throw AccuracyError("quadrature did not converge", r.value, r.error);
  }
}

}  // namespace

QuadratureResult integrate_panels(const std::function<double(double)>& f,
                                  std::span<const double> breaks, const QuadratureSpec& spec) {
  QuadratureResult total;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    QuadratureResult r;
    try {
      r = panel(f, breaks[i], breaks[i + 1], spec);
    } catch (const std::exception& e) {
      // Boost signals non-finite integrand values through exceptions.
      throw AccuracyError(std::string("quadrature failed: ") + e.what(), total.value,
                          std::numeric_limits<double>::infinity());
    }
    if (!std::isfinite(r.value)) {
      throw AccuracyError("quadrature returned a non-finite panel value", total.value, r.error);
    }
    total.value += r.value;
    total.error += r.error;
    total.l1 += r.l1;
  }
  check(total, spec);
  return total;
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec) {
  std::vector<double> breaks{lo};
  if (spec.oscillation_hint && *spec.oscillation_hint > 0 && std::isfinite(hi)) {
    const int panels = *spec.oscillation_hint + 1;
    for (int i = 1; i < panels; ++i) breaks.push_back(lo + (hi - lo) * i / panels);
  }
  breaks.push_back(hi);
  return integrate_panels(f, breaks, spec).value;
}

}  // namespace oscent
