#pragma once

// Radial quantities of the isotropic oscillator V(r) = lambda^2 r^2 / 2.
//
// With x = lambda r^2 and psi(x) = Lhat_n^{(alpha)}(x) sqrt(x^alpha e^{-x}),
// alpha = l + 1/2, the radial density is rho(r) = 2 lambda^{3/2} x^{-1/2} psi(x)^2
// and every radial Renyi entropy reduces to the norm
//
//   N_{n,l}(p) = int_0^inf psi(x)^{2p} x^{(1-p)/2} dx.

#include <optional>
#include <string>

#include "oscent/specfun.hpp"
#include "oscent/types.hpp"

namespace oscent::radial {

enum class NormPath { symbolic, quadrature, closed_n1 };

std::string to_string(NormPath path);

struct LaguerreNorm {
  double value = 1.0;
  NormPath path = NormPath::quadrature;
  double alpha = 0.5;
  double beta = 0.0;
  // Signed polynomial-route value when the symbolic path was overridden.
  std::optional<double> signed_value;
  Warnings warnings;
};

double energy(const QuantumState& state, const OscillatorParams& params);

// rho_{n,l}(r), normalized so that int rho r^2 dr = 1.
double radial_density(const QuantumState& state, const OscillatorParams& params, double r);

// Orthonormal Laguerre function psi(x) defined above.
double laguerre_psi(int n, int l, double x);

// N_{n,l}(p). Symbolic on the lattice (2p integer) up to a size limit,
// quadrature otherwise.
LaguerreNorm laguerre_norm(int n, int l, const EntropyOrder& p);

// Termwise Gamma integration of the exact expansion of [L_n]^{2p}; 2p
// integer. For odd 2p and n >= 1 this is the signed integral of psi^{2p}.
// Throws UnboundedGrowthError past the size limit.
double laguerre_norm_symbolic(int n, int l, const EntropyOrder& p);

// Panels at the Laguerre zeros with an exponential tail; any p > 0.
double laguerre_norm_quadrature(int n, int l, double p);

// Closed form for N_{1,l}(p) through a negative-parameter Laguerre
// polynomial; 2p integer.
LaguerreNorm closed_n1l(int l, const EntropyOrder& p);

// ((-1)^n / (n! Gamma(nu))) int_0^inf (x+y)^n y^{nu-1} e^{-y} dy, which
// equals L_n^{(-n-nu)}(x).
double negparam_laguerre_integral(int n, double nu, double x);

struct RadialEntropy {
  double value = 0.0;
  LaguerreNorm norm;
};

// R_p[rho_{n,l}] = ln[(2 lambda^{3/2})^{p-1} N_{n,l}(p)] / (1-p), p != 1.
RadialEntropy renyi_radial_exact(const QuantumState& state, const OscillatorParams& params,
                                 const EntropyOrder& p);

// -int rho ln rho r^2 dr.
double shannon_radial_exact(const QuantumState& state, const OscillatorParams& params);

}  // namespace oscent::radial
