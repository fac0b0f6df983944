#pragma once

// Leading-order Rydberg (n -> infinity) asymptotics of the radial Renyi and
// Shannon entropies. The norm N_{n,l}(p) is dominated by the cosine regime of
// the Laguerre functions for p < 3/2 and by the Bessel regime near the origin
// for p > 3/2.

#include <string>

#include "oscent/types.hpp"

namespace oscent::rydberg {

inline constexpr double kCriticalOrder = 1.5;

enum class ConstantKind { cosine, bessel };
enum class Regime { cosine, transition, bessel };

std::string to_string(ConstantKind kind);
std::string to_string(Regime regime);

// Regime of the asymptotic formula as a function of p alone.
Regime classify(double p);

struct RegimeConstant {
  ConstantKind kind = ConstantKind::cosine;
  double value = 0.0;
  bool divergent = false;
  double alpha = 0.0;
  double beta = 0.0;
  double p = 0.0;
};

// C(beta, p) with beta = (1-p)/2. Returns a divergent marker at poles of the
// numerator Gamma factors (p = 3/2 among them).
RegimeConstant cosine_constant(double p);

// C_B(alpha, beta, p) = 2 int_0^inf t^{2 beta + 1} |J_alpha(2t)|^{2p} dt,
// p > 3/2. Integrated between consecutive zeros of J_alpha(2t) with
// Richardson extrapolation of the algebraically decaying remainder. Results
// are memoized.
RegimeConstant bessel_constant(double alpha, double beta, double p);

struct AsymptoticValue {
  double value = 0.0;
  Regime regime = Regime::cosine;
  // Coefficient of ln n in the leading term.
  double leading_exponent = 0.0;
  // Set when the formula omits a remainder of the same order as the
  // retained constant.
  bool caveat = false;
};

// Leading-order radial Renyi entropy of the state (n, l) for large n, p != 1.
AsymptoticValue renyi_radial_asymptotic(int n, int l, const OscillatorParams& params,
                                        const EntropyOrder& p);

// (3/2) ln n - (3/2) ln lambda + ln pi - 1.
double shannon_radial_asymptotic(int n, const OscillatorParams& params);

}  // namespace oscent::rydberg
