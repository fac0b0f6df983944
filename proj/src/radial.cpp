#include "oscent/radial.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "oscent/quadrature.hpp"

namespace oscent::radial {

namespace {

// Largest degree n * 2p of the exact expansion on the symbolic path.
constexpr int kMaxSymbolicDegree = 600;

double alpha_of(int l) { return l + 0.5; }

std::vector<double> norm_breaks(int n, double alpha) {
  std::vector<double> breaks{0.0};
  for (double r : laguerre_roots(n, alpha)) breaks.push_back(r);
  const double nu = 4.0 * n + 2.0 * alpha + 2.0;
  const double tail = nu + 6.0 * std::cbrt(nu) + 20.0;
  if (tail > breaks.back()) breaks.push_back(tail);
  breaks.push_back(kInfinity);
  return breaks;
}

void check_convergence(int l, double p) {
  // beta + p alpha = p l + 1/2 > -1
  if (!(p * l + 0.5 > -1.0)) throw DivergenceError("norm integral diverges at the origin");
}

}  // namespace

std::string to_string(NormPath path) {
  switch (path) {
    case NormPath::symbolic: return "symbolic";
    case NormPath::quadrature: return "quadrature";
    case NormPath::closed_n1: return "closed_n1";
  }
  return "unknown";
}

double energy(const QuantumState& state, const OscillatorParams& params) {
  return params.lambda * (2.0 * state.n + state.l + 1.5);
}

double radial_density(const QuantumState& state, const OscillatorParams& params, double r) {
  if (r < 0.0) throw DomainError("radial_density requires r >= 0");
  const int n = state.n;
  const int l = state.l;
  const double lam = params.lambda;
  const double x = lam * r * r;
  const double log_pref = std::numbers::ln2 + log_gamma(n + 1.0) + (l + 1.5) * std::log(lam) -
                          log_gamma(n + l + 1.5) - x;
  const double poly = laguerre_eval(n, alpha_of(l), x);
  return std::exp(log_pref) * std::pow(r, 2 * l) * poly * poly;
}

double laguerre_psi(int n, int l, double x) {
  return static_cast<double>(laguerre_function(n, alpha_of(l), static_cast<long double>(x)));
}

double laguerre_norm_symbolic(int n, int l, const EntropyOrder& p) {
  if (!p.is_lattice()) throw DomainError("symbolic Laguerre norm requires 2p to be an integer");
  check_convergence(l, p.value());
  const int q = p.twice();
  if (n * q > kMaxSymbolicDegree) {
    std::ostringstream os;
    os << "symbolic Laguerre norm exceeds the exact lattice at (n=" << n << ", l=" << l
       << ", p=" << p.value() << ")";
    throw UnboundedGrowthError(os.str());
  }
  const Rational alpha = Rational(2 * l + 1, 2);
  const RationalPoly power = poly_power_convolution(laguerre_poly(n, alpha), q);
  const Rational rp = Rational(q, 2);
  const Rational shift = rp * l + Rational(3, 2);
  Rational sum(0);
  Rational weight(1);  // (pl + 3/2)_k / p^k
  for (int k = 0; k <= power.degree(); ++k) {
    sum += power.coefficient(k) * weight;
    weight *= (shift + k) / rp;
  }
  const double pv = p.value();
  const double s = to_double(shift);
  const double log_pref = pv * (log_gamma(n + 1.0) - log_gamma(n + alpha_of(l) + 1.0)) +
                          log_gamma(s) - s * std::log(pv);
  return std::exp(log_pref) * to_double(sum);
}

double laguerre_norm_quadrature(int n, int l, double p) {
  if (!(p > 0.0)) throw DomainError("entropy order must be positive");
  check_convergence(l, p);
  const double alpha = alpha_of(l);
  const double beta = 0.5 * (1.0 - p);
  auto f = [&](double x) {
    const long double psi = std::fabs(laguerre_function(n, alpha, static_cast<long double>(x)));
    if (psi == 0.0L || x <= 0.0) return 0.0;
    return static_cast<double>(std::exp(2.0L * p * std::log(psi) + beta * std::log(static_cast<long double>(x))));
  };
  const std::vector<double> breaks = norm_breaks(n, alpha);
  QuadratureSpec spec;
  spec.rel_tol = 1e-13;
  return integrate_panels(f, breaks, spec).value;
}

LaguerreNorm laguerre_norm(int n, int l, const EntropyOrder& p) {
  if (n < 0 || l < 0) throw DomainError("laguerre_norm requires n, l >= 0");
  LaguerreNorm out;
  out.alpha = alpha_of(l);
  out.beta = 0.5 * (1.0 - p.value());
  if (p.is_lattice()) {
    try {
      const double symbolic = laguerre_norm_symbolic(n, l, p);
      if (p.odd_lattice() && n >= 1) {
        out.value = laguerre_norm_quadrature(n, l, p.value());
        out.path = NormPath::quadrature;
        out.signed_value = symbolic;
        std::ostringstream os;
        os.precision(15);
        os << "odd 2p with sign-changing Laguerre factor: symbolic route integrates psi^{2p} (value "
           << symbolic << "); returning quadrature of |psi|^{2p}";
        out.warnings.push_back(os.str());
      } else {
        out.value = symbolic;
        out.path = NormPath::symbolic;
      }
      return out;
    } catch (const UnboundedGrowthError& e) {
      out.warnings.push_back(std::string(e.what()) + "; used quadrature");
    }
  }
  out.value = laguerre_norm_quadrature(n, l, p.value());
  out.path = NormPath::quadrature;
  return out;
}

LaguerreNorm closed_n1l(int l, const EntropyOrder& p) {
  if (!p.is_lattice()) throw DomainError("closed_n1l requires 2p to be an integer");
  if (l < 0) throw DomainError("closed_n1l requires l >= 0");
  const int q = p.twice();
  const Rational rp = Rational(q, 2);
  const Rational alpha = -(rp * (l + 2)) - Rational(3, 2);
  const Rational x = -(rp * (2 * l + 3)) / 2;
  const Rational lag = laguerre_eval_exact(q, alpha, x);
  const double pv = p.value();
  const double log_pref = log_gamma(l * pv + 1.5) - pv * log_gamma(l + 2.5) + log_gamma(q + 1.0) -
                          ((l + 2) * pv + 1.5) * std::log(pv);
  LaguerreNorm out;
  out.value = std::exp(log_pref) * to_double(lag);
  out.path = NormPath::closed_n1;
  out.alpha = alpha_of(l);
  out.beta = 0.5 * (1.0 - pv);
  return out;
}

double negparam_laguerre_integral(int n, double nu, double x) {
  if (n < 0) throw DomainError("negparam_laguerre_integral requires n >= 0");
  if (!(nu > 0.0)) throw DomainError("negparam_laguerre_integral requires nu > 0");
  auto f = [&](double y) {
    if (y <= 0.0) return 0.0;
    const double base = x + y;
    if (base == 0.0) return n == 0 ? std::exp((nu - 1.0) * std::log(y) - y) : 0.0;
    const double mag = std::exp(n * std::log(std::fabs(base)) + (nu - 1.0) * std::log(y) - y);
    return (base < 0.0 && n % 2 == 1) ? -mag : mag;
  };
  std::vector<double> breaks{0.0};
  if (x < 0.0) breaks.push_back(-x);
  breaks.push_back(kInfinity);
  QuadratureSpec spec;
  spec.rel_tol = 1e-13;
  const double integral = integrate_panels(f, breaks, spec).value;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * integral * std::exp(-log_gamma(n + 1.0) - log_gamma(nu));
}

RadialEntropy renyi_radial_exact(const QuantumState& state, const OscillatorParams& params,
                                 const EntropyOrder& p) {
  if (p.is_shannon()) {
    throw DomainError("Renyi order p = 1 is the Shannon limit; use shannon_radial_exact");
  }
  RadialEntropy out;
  out.norm = laguerre_norm(state.n, state.l, p);
  const double log_scale = std::numbers::ln2 + 1.5 * std::log(params.lambda);
  out.value = -log_scale + std::log(out.norm.value) / (1.0 - p.value());
  return out;
}

double shannon_radial_exact(const QuantumState& state, const OscillatorParams& params) {
  const int n = state.n;
  const double alpha = alpha_of(state.l);
  auto f = [&](double x) {
    if (x <= 0.0) return 0.0;
    const long double psi = laguerre_function(n, alpha, static_cast<long double>(x));
    const long double psi2 = psi * psi;
    if (psi2 == 0.0L) return 0.0;
    return static_cast<double>(psi2 * (std::log(psi2) - 0.5L * std::log(static_cast<long double>(x))));
  };
  const std::vector<double> breaks = norm_breaks(n, alpha);
  QuadratureSpec spec;
  spec.rel_tol = 1e-13;
  const double integral = integrate_panels(f, breaks, spec).value;
  return -(std::numbers::ln2 + 1.5 * std::log(params.lambda)) - integral;
}

}  // namespace oscent::radial
