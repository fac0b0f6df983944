#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "cli.hpp"
#include "oscent/angular.hpp"
#include "oscent/entropy.hpp"
#include "oscent/oracle.hpp"
#include "oscent/radial.hpp"
#include "oscent/rydberg.hpp"

namespace oscent::cli {

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

class Check {
 public:
  Check(std::string suite, std::string name, double tol) {
    c_.suite = std::move(suite);
    c_.check = std::move(name);
    c_.tolerance = tol;
  }
  void add(double deviation) {
    ++c_.cases;
    if (!(deviation <= c_.max_deviation)) c_.max_deviation = deviation;
  }
  VerifyCheck done() {
    c_.passed = c_.cases > 0 && c_.max_deviation <= c_.tolerance;
    return c_;
  }

 private:
  VerifyCheck c_;
};

std::vector<VerifyCheck> angular_suite(double scale) {
  Check lin_bell("angular", "linearization_vs_bell", 1e-9 * scale);
  Check exact_quad("angular", "exact_vs_quadrature", 1e-7 * scale);
  Check norm("angular", "normalization_p1", 1e-10 * scale);
  Check closed("angular", "closed_form_families", 1e-9 * scale);
  for (int l = 0; l <= 4; ++l) {
    for (int m = 0; m <= l; ++m) {
      const AngularState s(l, m);
      norm.add(std::fabs(angular::lambda_quadrature(s, EntropyOrder(1.0)).lambda_value - 1.0));
      for (int q = 1; q <= 6; ++q) {
        const EntropyOrder p(q / 2.0);
        if (p.odd_lattice() && !angular::jacobi_factor_sign_definite(s)) continue;
        const double a = angular::lambda_linearization(s, p).lambda_value;
        const double b = angular::lambda_bell(s, p).lambda_value;
        const double c = angular::lambda_quadrature(s, p).lambda_value;
        lin_bell.add(rel(a, b));
        exact_quad.add(std::max(rel(a, c), rel(b, c)));
        if (m == l || m == l - 1) closed.add(rel(angular::lambda_closed(s, p)->lambda_value, a));
      }
    }
  }
  return {lin_bell.done(), exact_quad.done(), norm.done(), closed.done()};
}

std::vector<VerifyCheck> radial_suite(double scale) {
  Check unit("radial", "norm_p1", 1e-10 * scale);
  Check paths("radial", "symbolic_vs_quadrature", 1e-9 * scale);
  Check closed_even("radial", "closed_n1l_even_2p", 1e-9 * scale);
  Check closed_odd("radial", "closed_n1l_odd_2p", 1e-9 * scale);
  for (int n = 0; n <= 10; ++n) {
    for (int l = 0; l <= 3; ++l) {
      unit.add(std::fabs(radial::laguerre_norm_quadrature(n, l, 1.0) - 1.0));
      unit.add(std::fabs(radial::laguerre_norm_symbolic(n, l, EntropyOrder(1.0)) - 1.0));
      for (int q : {4, 6}) {
        const EntropyOrder p(q / 2.0);
        paths.add(rel(radial::laguerre_norm_symbolic(n, l, p),
                      radial::laguerre_norm_quadrature(n, l, p.value())));
      }
    }
  }
  for (int l = 0; l <= 1; ++l) {
    for (int q = 1; q <= 6; ++q) {
      const EntropyOrder p(q / 2.0);
      const double d = rel(radial::closed_n1l(l, p).value, radial::laguerre_norm_quadrature(1, l, p.value()));
      (q % 2 == 0 ? closed_even : closed_odd).add(d);
    }
  }
  return {unit.done(), paths.done(), closed_even.done(), closed_odd.done()};
}

std::vector<VerifyCheck> rydberg_suite(double scale) {
  Check cosine("rydberg", "cosine_constant_p1", 1e-12 * scale);
  cosine.add(std::fabs(rydberg::cosine_constant(1.0).value - 1.0));
  Check bessel("rydberg", "bessel_constant_sine_case", 1e-6 * scale);
  bessel.add(rel(rydberg::bessel_constant(0.5, -0.5, 2.0).value, 1.0 / std::numbers::pi));
  Check p3("rydberg", "p3_n_independence", 1e-12 * scale);
  const OscillatorParams one(1.0);
  const EntropyOrder three(3.0);
  p3.add(std::fabs(rydberg::renyi_radial_asymptotic(10, 0, one, three).value -
                   rydberg::renyi_radial_asymptotic(1000000, 0, one, three).value));
  Check ratio("rydberg", "p2_ratio_decreasing", 0.0);
  const double cb = rydberg::bessel_constant(0.5, -0.5, 2.0).value;
  double prev = INFINITY;
  for (int n : {25, 50, 100}) {
    const double r = std::fabs(radial::laguerre_norm(n, 0, EntropyOrder(2.0)).value * std::sqrt(n) / cb - 1.0);
    ratio.add(r < prev ? 0.0 : r - prev);
    prev = r;
  }
  return {cosine.done(), bessel.done(), p3.done(), ratio.done()};
}

std::vector<VerifyCheck> oracle_suite(double scale) {
  Check decomposition("oracle", "decomposition_identity", 1e-7 * scale);
  Check normalization("oracle", "normalization", 1e-9 * scale);
  const OscillatorParams one(1.0);
  for (int n = 0; n <= 1; ++n) {
    for (int l = 0; l <= 1; ++l) {
      for (int m = 0; m <= l; ++m) {
        const QuantumState s(n, l, m);
        normalization.add(std::fabs(oracle::normalization(s, one) - 1.0));
        for (double p : {0.5, 2.0}) {
          decomposition.add(std::fabs(oracle::renyi_full(s, one, p) -
                                      entropy::renyi_total(s, one, EntropyOrder(p)).total));
        }
        decomposition.add(std::fabs(oracle::shannon_full(s, one) - entropy::shannon_total(s, one).total));
      }
    }
  }
  return {decomposition.done(), normalization.done()};
}

std::vector<VerifyCheck> uncertainty_suite(double scale) {
  Check saturation("uncertainty", "ground_state_saturation", 1e-9 * scale);
  Check inequality("uncertainty", "sum_above_bound", 1e-9 * scale);
  const OscillatorParams one(1.0);
  const QuantumState ground(0, 0, 0);
  for (double p : {2.0, 3.0}) {
    const auto u = entropy::uncertainty_sum(ground, one, entropy::ConjugatePair::from_p(p));
    saturation.add(std::fabs(u.sum - u.bound));
  }
  const auto sh = entropy::uncertainty_sum(ground, one, entropy::ConjugatePair(1.0, 1.0),
                                           entropy::Kind::shannon);
  saturation.add(std::fabs(sh.sum - sh.bound));
  for (int n = 0; n <= 2; ++n) {
    for (int l = 0; l <= 1; ++l) {
      for (int m = 0; m <= l; ++m) {
        const auto u = entropy::uncertainty_sum(QuantumState(n, l, m), one, entropy::ConjugatePair::from_p(2.0));
        inequality.add(std::max(0.0, u.bound - u.sum));
      }
    }
  }
  return {saturation.done(), inequality.done()};
}

}  // namespace

std::vector<VerifyCheck> run_verify_suite(const std::string& suite, double scale) {
  if (suite == "angular") return angular_suite(scale);
  if (suite == "radial") return radial_suite(scale);
  if (suite == "rydberg") return rydberg_suite(scale);
  if (suite == "oracle") return oracle_suite(scale);
  if (suite == "uncertainty") return uncertainty_suite(scale);
  throw UsageError("unknown suite '" + suite + "'");
}

}  // namespace oscent::cli
