#pragma once

// Test-side numerics kept independent of the library: composite
// Gauss-Legendre quadrature and small comparison helpers.

#include <cmath>
#include <functional>
#include <vector>

namespace testing_support {

inline double rel_diff(double a, double b) {
  return std::fabs(a - b) / std::max(std::fabs(b), 1e-300);
}

struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

inline GaussRule gauss_rule(int n) {
  GaussRule r{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < n; ++i) {
    long double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    long double dp = 0;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        long double p2 = ((2.0L * k - 1) * x * p1 - (k - 1.0L) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    r.x[i] = static_cast<double>(x);
    r.w[i] = static_cast<double>(2.0L / ((1 - x * x) * dp * dp));
  }
  return r;
}

// Composite Gauss-Legendre over `panels` equal panels of [a, b].
inline double gl_integrate(const std::function<double(double)>& f, double a, double b,
                           int panels = 64, int nodes = 20) {
  static const GaussRule rule = gauss_rule(20);
  const GaussRule& g = nodes == 20 ? rule : gauss_rule(nodes);
  long double total = 0;
  const double h = (b - a) / panels;
  for (int k = 0; k < panels; ++k) {
    const double lo = a + k * h;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      total += g.w[i] * 0.5 * h * f(lo + 0.5 * h * (g.x[i] + 1.0));
    }
  }
  return static_cast<double>(total);
}

// Composite Gauss-Legendre over the given breakpoints.
inline double gl_integrate_breaks(const std::function<double(double)>& f,
                                  const std::vector<double>& breaks, int panels = 16) {
  double total = 0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    total += gl_integrate(f, breaks[i], breaks[i + 1], panels);
  }
  return total;
}

}  // namespace testing_support
