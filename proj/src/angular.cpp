#include "oscent/angular.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "oscent/quadrature.hpp"

namespace oscent::angular {

namespace {

constexpr double kPi = std::numbers::pi;

// Largest (l-|m|) * 2p handled by the exact routes.
constexpr int kMaxExactDegree = 512;

void require_lattice(const AngularState& s, const EntropyOrder& p, const char* route) {
  if (!p.is_lattice()) {
    std::ostringstream os;
    os << route << " route requires 2p to be a positive integer, got p=" << p.value();
    throw DomainError(os.str());
  }
  const int n = s.l - s.abs_m();
  if (n * p.twice() > kMaxExactDegree) {
    std::ostringstream os;
    os << route << " route exceeds the exact lattice at (l=" << s.l << ", m=" << s.m
       << ", p=" << p.value() << ")";
    throw UnboundedGrowthError(os.str());
  }
}

// Integral of |C_{l-m}^{(m+1/2)}(t)|^{2p} (1-t^2)^{mp} over [-1,1], panels at
// the Gegenbauer zeros.
double gegenbauer_power_integral(const AngularState& s, double p, const QuadratureSpec& spec) {
  const int m = s.abs_m();
  const int n = s.l - m;
  const double lam = m + 0.5;
  std::vector<double> breaks{-1.0};
  for (double r : gegenbauer_roots(n, lam)) breaks.push_back(r);
  breaks.push_back(1.0);
  auto f = [&](double t) {
    const double c = std::abs(gegenbauer_eval(n, lam, t));
    const double w = (1.0 - t) * (1.0 + t);
    if (c == 0.0 || w <= 0.0) return (c == 0.0 || m > 0) ? 0.0 : std::pow(c, 2.0 * p);
    return std::exp(2.0 * p * std::log(c) + m * p * std::log(w));
  };
  return integrate_panels(f, breaks, spec).value;
}

// Replace a signed polynomial-route value by the quadrature of the
// absolute-value integrand when 2p is odd and the Jacobi factor changes sign.
AngularResult resolve_sign(const AngularState& s, const EntropyOrder& p, double route_value,
                           Method method) {
  AngularResult r;
  r.p = p.value();
  if (p.odd_lattice() && !jacobi_factor_sign_definite(s)) {
    AngularResult q = lambda_quadrature(s, p);
    q.signed_route_value = route_value;
    std::ostringstream os;
    os.precision(15);
    os << "odd 2p with sign-changing Jacobi factor: " << to_string(method)
       << " route integrates P^{2p} (value " << route_value
       << "); returning quadrature of |P|^{2p}";
    q.warnings.push_back(os.str());
    return q;
  }
  r.lambda_value = route_value;
  r.method = method;
  r.renyi = p.is_shannon() ? shannon_angular(s) : std::log(route_value) / (1.0 - p.value());
  return r;
}

double log_norm_const_squared(int l, int m) {
  return std::log(l + 0.5) + log_gamma(l - m + 1.0) + 2.0 * log_gamma(m + 0.5) -
         (1.0 - 2.0 * m) * std::numbers::ln2 - 2.0 * std::log(kPi) - log_gamma(l + m + 1.0);
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::linearization: return "linearization";
    case Method::bell: return "bell";
    case Method::closed_form: return "closed_form";
    case Method::quadrature: return "quadrature";
  }
  return "unknown";
}

double norm_const_squared(const AngularState& state) {
  return std::exp(log_norm_const_squared(state.l, state.abs_m()));
}

bool jacobi_factor_sign_definite(const AngularState& state) { return state.l == state.abs_m(); }

Rational linearization_c0(const AngularState& state, int twice_p) {
  const int l = state.l;
  const int m = state.abs_m();
  const int n = l - m;
  // f(j) = (m-l)_j (l+m+1)_j / ((m+1)_j j!)
  std::vector<Rational> f(n + 1);
  f[0] = 1;
  for (int j = 0; j < n; ++j) {
    f[j + 1] = f[j] * Rational(m - l + j) * Rational(l + m + 1 + j) / (Rational(m + 1 + j) * (j + 1));
  }
  // The 2p-fold sum over j_1..j_{2p} depends on the indices only through the
  // product of f(j_i) and J = j_1 + ... + j_{2p}; accumulate it grouped by J.
  const RationalPoly f_poly(f);
  RationalPoly grouped = poly_power_convolution(f_poly, twice_p);
  const Rational mp = Rational(m * twice_p, 2);
  Rational sum(0);
  Rational ratio(1);  // (mp+1)_J / (2mp+2)_J
  for (int J = 0; J <= grouped.degree(); ++J) {
    sum += ratio * grouped.coefficient(J);
    ratio *= (mp + 1 + J) / (2 * mp + 2 + J);
  }
  // binom(l, l-m)^{2p}
  Rational binom = factorial_exact(l) / (factorial_exact(n) * factorial_exact(m));
  Rational scale(1);
  for (int i = 0; i < twice_p; ++i) scale *= binom;
  return scale * sum;
}

Rational bell_sigma_exact(const AngularState& state, int twice_p) {
  const int m = state.abs_m();
  const int n = state.l - m;
  const OrthonormalPoly jac = orthonormal_jacobi(n, Rational(m), Rational(m));
  const RationalPoly power = poly_power_bell(jac.base, twice_p);
  const Rational shift = Rational(m * twice_p, 2) + Rational(3, 2);
  Rational sum(0);
  Rational ratio(1);  // (1/2)_{k/2} / (mp + 3/2)_{k/2}
  for (int k = 0; k <= power.degree(); k += 2) {
    sum += power.coefficient(k) * ratio;
    const int h = k / 2;
    ratio *= (Rational(1, 2) + h) / (shift + h);
  }
  return sum;
}

AngularResult lambda_linearization(const AngularState& state, const EntropyOrder& p) {
  require_lattice(state, p, "linearization");
  const int l = state.l;
  const int m = state.abs_m();
  const double pv = p.value();
  const double mp = m * pv;
  // A''_{l,m}
  const double log_a2 =
      (2.0 * pv * (2.0 * m - 1.0) + 2.0) * std::numbers::ln2 + pv * std::log(2.0 * l + 1.0) -
      (2.0 * pv - 1.0) * std::log(kPi) + 2.0 * log_gamma(mp + 1.0) - log_gamma(2.0 * mp + 2.0) +
      pv * (2.0 * log_gamma(m + 0.5) + 2.0 * log_gamma(m + 1.0) + log_gamma(l - m + 1.0) +
            log_gamma(l + m + 1.0) - 2.0 * log_gamma(2.0 * m + 1.0) - 2.0 * log_gamma(l + 1.0));
  const Rational c0 = linearization_c0(state, p.twice());
  const double value = std::exp(log_a2) * to_double(c0);
  return resolve_sign(state, p, value, Method::linearization);
}

AngularResult lambda_bell(const AngularState& state, const EntropyOrder& p) {
  require_lattice(state, p, "bell");
  const int m = state.abs_m();
  const int n = state.l - m;
  const double pv = p.value();
  const double mp = m * pv;
  const OrthonormalPoly jac = orthonormal_jacobi(n, Rational(m), Rational(m));
  const Rational sigma = bell_sigma_exact(state, p.twice());
  // Gamma(mp+1)/(2^p pi^{p-1}) * h^{-p} * 2 Gamma(1/2)/Gamma(mp+3/2) * sigma
  const double log_prefactor = log_gamma(mp + 1.0) - pv * std::numbers::ln2 -
                               (pv - 1.0) * std::log(kPi) - pv * std::log(to_double(jac.norm_square)) +
                               std::numbers::ln2 + 0.5 * std::log(kPi) - log_gamma(mp + 1.5);
  const double value = std::exp(log_prefactor) * to_double(sigma);
  return resolve_sign(state, p, value, Method::bell);
}

AngularResult lambda_quadrature(const AngularState& state, const EntropyOrder& p) {
  const double pv = p.value();
  QuadratureSpec spec;
  spec.rel_tol = 1e-13;
  const double integral = gegenbauer_power_integral(state, pv, spec);
  AngularResult r;
  r.p = pv;
  r.method = Method::quadrature;
  r.lambda_value =
      2.0 * kPi * std::exp(pv * log_norm_const_squared(state.l, state.abs_m())) * integral;
  r.renyi = p.is_shannon() ? shannon_angular(state) : std::log(r.lambda_value) / (1.0 - pv);
  return r;
}

std::optional<AngularResult> lambda_closed(const AngularState& state, const EntropyOrder& p) {
  const int l = state.l;
  const int m = state.abs_m();
  const double pv = p.value();
  double log_lambda = 0.0;
  if (m == l) {
    log_lambda = (((2.0 * l - 1.0) * pv) + 1.0) * std::numbers::ln2 + pv * std::log(l + 0.5) -
                 (2.0 * pv - 1.5) * std::log(kPi) + 2.0 * pv * log_gamma(l + 0.5) +
                 log_gamma(l * pv + 1.0) - pv * log_gamma(2.0 * l + 1.0) -
                 log_gamma(l * pv + 1.5);
  } else if (l == 1 && m == 0) {
    log_lambda = pv * std::log(3.0) + (1.0 - pv) * std::log(4.0 * kPi) - std::log(2.0 * pv + 1.0);
  } else if (m == l - 1) {
    const double log_k = std::log(l + 0.5) + 2.0 * std::log(2.0 * l - 1.0) +
                         2.0 * log_gamma(l - 0.5) - (3.0 - 2.0 * l) * std::numbers::ln2 -
                         log_gamma(2.0 * l) - 2.0 * std::log(kPi);
    log_lambda = std::log(2.0 * kPi) + pv * log_k + log_gamma(pv + 0.5) +
                 log_gamma(pv * l - pv + 1.0) - log_gamma(pv * l + 1.5);
  } else {
    return std::nullopt;
  }
  AngularResult r;
  r.p = pv;
  r.method = Method::closed_form;
  r.lambda_value = std::exp(log_lambda);
  r.renyi = p.is_shannon() ? *shannon_angular_closed(state) : log_lambda / (1.0 - pv);
  return r;
}

AngularResult renyi_angular(const AngularState& state, const EntropyOrder& p) {
  if (p.is_shannon()) {
    throw DomainError("Renyi order p = 1 is the Shannon limit; use shannon_angular");
  }
  if (auto closed = lambda_closed(state, p)) return *closed;
  if (p.is_lattice()) {
    try {
      return lambda_linearization(state, p);
    } catch (const UnboundedGrowthError& e) {
      AngularResult r = lambda_quadrature(state, p);
      r.warnings.push_back(std::string(e.what()) + "; used quadrature");
      return r;
    }
  }
  return lambda_quadrature(state, p);
}

std::optional<double> shannon_angular_closed(const AngularState& state) {
  const int l = state.l;
  const int m = state.abs_m();
  if (m == l) {
    return -l * (digamma(l + 1.0) - digamma(l + 1.5) + std::log(4.0)) +
           std::log(4.0 * kPi * kPi / (2.0 * l + 1.0)) + log_gamma(2.0 * l + 1.0) -
           2.0 * log_gamma(l + 0.5);
  }
  if (l == 1 && m == 0) return 2.0 / 3.0 + std::log(4.0 * kPi / 3.0);
  if (m == l - 1) {
    const double log_k = std::log(l + 0.5) + 2.0 * std::log(2.0 * l - 1.0) +
                         2.0 * log_gamma(l - 0.5) - (3.0 - 2.0 * l) * std::numbers::ln2 -
                         log_gamma(2.0 * l) - 2.0 * std::log(kPi);
    return -log_k - digamma(1.5) - (l - 1) * digamma(l) + l * digamma(l + 1.5);
  }
  return std::nullopt;
}

double shannon_angular_quadrature(const AngularState& state) {
  const int m = state.abs_m();
  const int n = state.l - m;
  const double lam = m + 0.5;
  const double a2 = norm_const_squared(state);
  std::vector<double> breaks{-1.0};
  for (double r : gegenbauer_roots(n, lam)) breaks.push_back(r);
  breaks.push_back(1.0);
  auto f = [&](double t) {
    const double c = gegenbauer_eval(n, lam, t);
    const double w = (1.0 - t) * (1.0 + t);
    const double g = a2 * c * c * std::pow(w, m);
    return g > 0.0 ? g * std::log(g) : 0.0;
  };
  QuadratureSpec spec;
  spec.rel_tol = 1e-13;
  return -2.0 * kPi * integrate_panels(f, breaks, spec).value;
}

double shannon_angular(const AngularState& state) {
  if (auto closed = shannon_angular_closed(state)) return *closed;
  return shannon_angular_quadrature(state);
}

}  // namespace oscent::angular
