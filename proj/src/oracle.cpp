#include "oscent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "oscent/specfun.hpp"

namespace oscent::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1] by Newton iteration on P_N.
Rule gauss_legendre(int n) {
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    long double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    long double dp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L;
      long double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
    rule.nodes[i] = static_cast<double>(-x);
    rule.nodes[n - 1 - i] = static_cast<double>(x);
    rule.weights[i] = rule.weights[n - 1 - i] = static_cast<double>(w);
  }
  return rule;
}

struct Samples {
  std::vector<double> points;
  std::vector<double> weights;
};

// Gauss-Legendre on each panel after the quintic smoothstep substitution
// x = a + (b - a) s(u), s(u) = u^3 (10 - 15 u + 6 u^2), which flattens the
// integrand at both panel ends.
Samples panel_samples(const std::vector<double>& breaks, int nodes) {
  const Rule rule = gauss_legendre(nodes);
  Samples out;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double a = breaks[k];
    const double b = breaks[k + 1];
    for (int i = 0; i < nodes; ++i) {
      const double u = 0.5 * (rule.nodes[i] + 1.0);
      const double s = u * u * u * (10.0 - 15.0 * u + 6.0 * u * u);
      const double ds = 30.0 * u * u * (1.0 - u) * (1.0 - u);
      out.points.push_back(a + (b - a) * s);
      out.weights.push_back(0.5 * rule.weights[i] * (b - a) * ds);
    }
  }
  return out;
}

double radial_part(const QuantumState& s, double lam, double r) {
  const double alpha = s.l + 0.5;
  const double x = lam * r * r;
  const double lag = laguerre_eval(s.n, alpha, x);
  const double log_c = std::log(2.0) + log_gamma(s.n + 1.0) + (s.l + 1.5) * std::log(lam) -
                       log_gamma(s.n + s.l + 1.5);
  return std::exp(log_c - x) * std::pow(r, 2 * s.l) * lag * lag;
}

double polar_part(const QuantumState& s, double theta) {
  const int m = std::abs(s.m);
  const int l = s.l;
  // |Y|^2 = A^2 [C_{l-m}^{(m+1/2)}(cos theta)]^2 sin^{2m} theta
  const double log_a2 = std::log(l + 0.5) + log_gamma(l - m + 1.0) + 2.0 * log_gamma(m + 0.5) -
                        (1.0 - 2.0 * m) * std::log(2.0) - 2.0 * std::log(kPi) -
                        log_gamma(l + m + 1.0);
  const double c = gegenbauer_eval(l - m, m + 0.5, std::cos(theta));
  return std::exp(log_a2) * c * c * std::pow(std::sin(theta), 2 * m);
}

double integrate_full(const QuantumState& s, const OscillatorParams& params, const GridSpec& grid,
                      const std::function<double(double)>& f) {
  const double lam = params.lambda;
  const double cutoff =
      grid.cutoff_multiplier * std::sqrt((2.0 * s.n + s.l + 1.5) / lam);

  std::vector<double> rb{0.0};
  for (double x : laguerre_roots(s.n, s.l + 0.5)) rb.push_back(std::sqrt(x / lam));
  const double start = rb.back();
  constexpr int kTailPanels = 8;
  for (int i = 1; i <= kTailPanels; ++i) rb.push_back(start + (cutoff - start) * i / kTailPanels);

  std::vector<double> tb{0.0};
  {
    const int m = std::abs(s.m);
    std::vector<double> roots = gegenbauer_roots(s.l - m, m + 0.5);
    std::vector<double> thetas;
    for (double t : roots) thetas.push_back(std::acos(t));
    std::sort(thetas.begin(), thetas.end());
    tb.insert(tb.end(), thetas.begin(), thetas.end());
  }
  tb.push_back(kPi);

  const Samples rs = panel_samples(rb, grid.radial_nodes);
  const Samples ts = panel_samples(tb, grid.polar_nodes);
  std::vector<double> radial(rs.points.size());
  for (std::size_t i = 0; i < radial.size(); ++i) radial[i] = radial_part(s, lam, rs.points[i]);
  std::vector<double> polar(ts.points.size());
  for (std::size_t j = 0; j < polar.size(); ++j) polar[j] = polar_part(s, ts.points[j]);

  long double total = 0.0L;
  for (std::size_t i = 0; i < radial.size(); ++i) {
    const double r = rs.points[i];
    long double row = 0.0L;
    for (std::size_t j = 0; j < polar.size(); ++j) {
      row += ts.weights[j] * std::sin(ts.points[j]) * f(radial[i] * polar[j]);
    }
    total += rs.weights[i] * r * r * row;
  }
  return static_cast<double>(2.0L * kPi * total);
}

GridSpec coarser(const GridSpec& g) {
  GridSpec c = g;
  c.radial_nodes = g.radial_nodes * 3 / 4;
  c.polar_nodes = g.polar_nodes * 3 / 4;
  return c;
}

// Integral on the requested grid, checked against a coarser grid.
double checked(const QuantumState& s, const OscillatorParams& params, const GridSpec& grid,
               const std::function<double(double)>& f) {
  grid.validate();
  const double fine = integrate_full(s, params, grid, f);
  const double coarse = integrate_full(s, params, coarser(grid), f);
  const double err = std::fabs(fine - coarse);
  if (!std::isfinite(fine) || err > 1e-9 * std::max(1.0, std::fabs(fine))) {
    throw AccuracyError("oracle grid did not resolve the integrand", fine, err);
  }
  return fine;
}

}  // namespace

void GridSpec::validate() const {
  if (radial_nodes < 16 || polar_nodes < 16 || azimuthal_nodes < 16) {
    throw DomainError("oracle grid node counts must be at least 16");
  }
  if (!(cutoff_multiplier >= 2.0)) throw DomainError("oracle cutoff multiplier must be >= 2");
}

GridSpec GridSpec::refined() const {
  GridSpec g = *this;
  g.radial_nodes *= 2;
  g.polar_nodes *= 2;
  g.azimuthal_nodes *= 2;
  return g;
}

double full_density(const QuantumState& state, const OscillatorParams& params, double r,
                    double theta, double /*phi*/) {
  if (r < 0.0) throw DomainError("full_density requires r >= 0");
  return radial_part(state, params.lambda, r) * polar_part(state, theta);
}

double normalization(const QuantumState& state, const OscillatorParams& params,
                     const GridSpec& grid) {
  return checked(state, params, grid, [](double rho) { return rho; });
}

double renyi_full(const QuantumState& state, const OscillatorParams& params, double p,
                  const GridSpec& grid) {
  if (!(p > 0.0)) throw DomainError("entropy order must be positive");
  if (p == 1.0) throw DomainError("Renyi order p = 1 is the Shannon limit; use shannon_full");
  const double integral =
      checked(state, params, grid, [p](double rho) { return rho > 0.0 ? std::pow(rho, p) : 0.0; });
  return std::log(integral) / (1.0 - p);
}

double shannon_full(const QuantumState& state, const OscillatorParams& params,
                    const GridSpec& grid) {
  return -checked(state, params, grid,
                  [](double rho) { return rho > 0.0 ? rho * std::log(rho) : 0.0; });
}

}  // namespace oscent::oracle
