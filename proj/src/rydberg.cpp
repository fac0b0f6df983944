#include "oscent/rydberg.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <tuple>
#include <vector>

#include "oscent/quadrature.hpp"
#include "oscent/specfun.hpp"

namespace oscent::rydberg {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_gamma_pole(double x) { return x <= 0.0 && x == std::round(x); }

// Partial sums at K0 * 2^i zeros.
constexpr int kFirstZeros = 16;
constexpr int kLevels = 7;

double bessel_constant_uncached(double alpha, double beta, double p) {
  const double s = 2.0 * beta + 1.0;
  auto g = [&](double t) {
    if (t <= 0.0) return 0.0;
    const double j = std::fabs(bessel_j(alpha, 2.0 * t));
    if (j == 0.0) return 0.0;
    return 2.0 * std::exp(s * std::log(t) + 2.0 * p * std::log(j));
  };
  const int total = kFirstZeros << (kLevels - 1);
  std::vector<double> zeros;
  zeros.reserve(total + 1);
  zeros.push_back(0.0);
  boost::math::cyl_bessel_j_zero(alpha, 1, static_cast<unsigned>(total), std::back_inserter(zeros));
  for (std::size_t i = 1; i < zeros.size(); ++i) zeros[i] *= 0.5;

  QuadratureSpec spec;
  spec.rel_tol = 1e-14;
  std::vector<double> partial;
  double sum = 0.0;
  double comp = 0.0;
  int next = kFirstZeros;
  for (int k = 0; k < total; ++k) {
    const double breaks[2] = {zeros[k], zeros[k + 1]};
    const double v = integrate_panels(g, breaks, spec).value - comp;
    const double t = sum + v;
    comp = (t - sum) - v;
    sum = t;
    if (k + 1 == next) {
      partial.push_back(sum);
      next *= 2;
    }
  }

  // The remainder after K zeros behaves as K^{-gamma} (c0 + c1/K + ...).
  const double gamma = p - 2.0 * beta - 2.0;
  std::vector<std::vector<double>> table(kLevels);
  for (int i = 0; i < kLevels; ++i) {
    table[i].push_back(partial[i]);
    for (int j = 1; j <= i; ++j) {
      const double f = std::pow(2.0, gamma + j - 1);
      table[i].push_back((f * table[i][j - 1] - table[i - 1][j - 1]) / (f - 1.0));
    }
  }
  const double value = table[kLevels - 1][kLevels - 1];
  const double error = std::fabs(value - table[kLevels - 2][kLevels - 2]);
  if (!std::isfinite(value) || error > 1e-7 * std::fabs(value)) {
    throw AccuracyError("Bessel-regime constant did not converge", value, error);
  }
  return value;
}

}  // namespace

std::string to_string(ConstantKind kind) {
  return kind == ConstantKind::cosine ? "cosine" : "bessel";
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::cosine: return "cosine";
    case Regime::transition: return "transition";
    case Regime::bessel: return "bessel";
  }
  return "unknown";
}

Regime classify(double p) {
  if (p < kCriticalOrder) return Regime::cosine;
  if (p == kCriticalOrder) return Regime::transition;
  return Regime::bessel;
}

RegimeConstant cosine_constant(double p) {
  if (!(p > 0.0)) throw DomainError("entropy order must be positive");
  RegimeConstant c;
  c.kind = ConstantKind::cosine;
  c.p = p;
  c.beta = 0.5 * (1.0 - p);
  const double a1 = c.beta + 1.0 - 0.5 * p;  // 3/2 - p
  const double a2 = 1.0 - 0.5 * p;
  const double a3 = p + 0.5;
  const double d1 = c.beta + 2.0 - p;
  const double d2 = 1.0 + p;
  if (is_gamma_pole(a1) || is_gamma_pole(a2)) {
    c.divergent = true;
    c.value = std::numeric_limits<double>::infinity();
    return c;
  }
  if (is_gamma_pole(d1)) {
    c.value = 0.0;
    return c;
  }
  c.value = std::pow(2.0, c.beta + 1.0) / std::pow(kPi, p + 0.5) * std::tgamma(a1) *
            std::tgamma(a2) * std::tgamma(a3) / (std::tgamma(d1) * std::tgamma(d2));
  return c;
}

RegimeConstant bessel_constant(double alpha, double beta, double p) {
  if (!(p > kCriticalOrder)) {
    std::ostringstream os;
    os << "Bessel-regime constant diverges for p <= 3/2 (p=" << p << ")";
    throw DivergenceError(os.str());
  }
  if (!(alpha >= 0.0)) throw DomainError("Bessel-regime constant requires alpha >= 0");
  if (!(2.0 * beta + 1.0 + 2.0 * p * alpha > -1.0)) {
    throw DivergenceError("Bessel-regime constant diverges at the origin");
  }
  if (!(p - 2.0 * beta - 2.0 > 0.0)) {
    throw DivergenceError("Bessel-regime constant diverges in the tail");
  }
  static std::mutex mutex;
  static std::map<std::tuple<double, double, double>, double> memo;
  const auto key = std::make_tuple(alpha, beta, p);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) {
      return RegimeConstant{ConstantKind::bessel, it->second, false, alpha, beta, p};
    }
  }
  const double value = bessel_constant_uncached(alpha, beta, p);
  {
    std::lock_guard<std::mutex> lock(mutex);
    memo.emplace(key, value);
  }
  return RegimeConstant{ConstantKind::bessel, value, false, alpha, beta, p};
}

AsymptoticValue renyi_radial_asymptotic(int n, int l, const OscillatorParams& params,
                                        const EntropyOrder& p) {
  if (n < 1) throw DomainError("Rydberg asymptotics require n >= 1");
  if (l < 0) throw DomainError("Rydberg asymptotics require l >= 0");
  if (p.is_shannon()) {
    throw DomainError("Renyi order p = 1 is the Shannon limit; use shannon_radial_asymptotic");
  }
  const double pv = p.value();
  const double lam = params.lambda;
  const double ln_n = std::log(static_cast<double>(n));
  AsymptoticValue out;
  out.regime = classify(pv);
  switch (out.regime) {
    case Regime::cosine: {
      const RegimeConstant c = cosine_constant(pv);
      out.value = -1.5 * std::log(lam) + std::log(c.value) / (1.0 - pv) +
                  0.5 * (std::numbers::ln2 + 3.0 * ln_n);
      out.leading_exponent = 1.5;
      break;
    }
    case Regime::transition: {
      if (n < 2) throw DomainError("transition-regime asymptotics require n >= 2");
      const double c = 8.0 * std::numbers::sqrt2 / (3.0 * std::pow(kPi, 2.5));
      out.value = -2.0 * (0.75 * std::log(lam) + std::log(c) - 0.75 * ln_n + std::log(ln_n));
      out.leading_exponent = 1.5;
      out.caveat = true;
      break;
    }
    case Regime::bessel: {
      const double beta = 0.5 * (1.0 - pv);
      const RegimeConstant c = bessel_constant(l + 0.5, beta, pv);
      out.value = -(std::numbers::ln2 + 1.5 * std::log(lam)) +
                  (std::log(c.value) + 0.5 * (pv - 3.0) * ln_n) / (1.0 - pv);
      out.leading_exponent = (pv - 3.0) / (2.0 * (1.0 - pv));
      break;
    }
  }
  return out;
}

double shannon_radial_asymptotic(int n, const OscillatorParams& params) {
  if (n < 1) throw DomainError("Rydberg asymptotics require n >= 1");
  return 1.5 * std::log(static_cast<double>(n)) - 1.5 * std::log(params.lambda) +
         std::log(kPi) - 1.0;
}

}  // namespace oscent::rydberg
