#pragma once

// Angular entropies of a central-potential state. The functional
//
//   Lambda_{l,m}(p) = int_{S^2} |Y_{l,m}|^{2p} dOmega
//
// is independent of the potential. It is available through two exact
// polynomial routes on the half-integer lattice (2p a positive integer),
// closed forms for the (l,l), (l,l-1) and (1,0) families at any real p, and
// adaptive quadrature at any real p.

#include <optional>
#include <string>

#include "oscent/specfun.hpp"
#include "oscent/types.hpp"

namespace oscent::angular {

enum class Method { linearization, bell, closed_form, quadrature };

std::string to_string(Method m);

struct AngularResult {
  double lambda_value = 1.0;
  // R_p[Y] in nats; for p = 1 this carries the Shannon limit.
  double renyi = 0.0;
  Method method = Method::quadrature;
  double p = 1.0;
  // Value of the signed polynomial route when it was overridden by quadrature.
  std::optional<double> signed_route_value;
  Warnings warnings;
};

// A_{l,m}^2 with m -> |m|.
double norm_const_squared(const AngularState& state);

// True when the Jacobi factor P_{l-|m|}^{(|m|,|m|)} keeps one sign on (-1,1).
bool jacobi_factor_sign_definite(const AngularState& state);

// Exact lattice coefficient c0(p, l, m) of the linearization route, 2p = twice_p.
Rational linearization_c0(const AngularState& state, int twice_p);

// Exact sum Sigma(l, m, p) of the Bell route without its Gamma(1/2)/Gamma(mp+3/2)
// and norm factors: sum over even k of A_k (1/2)_{k/2} / (mp+3/2)_{k/2}.
Rational bell_sigma_exact(const AngularState& state, int twice_p);

// Lattice-only exact routes. For odd 2p with a sign-changing Jacobi factor
// these return the quadrature value of the absolute-value integrand and keep
// the polynomial-route value in `signed_route_value`.
AngularResult lambda_linearization(const AngularState& state, const EntropyOrder& p);
AngularResult lambda_bell(const AngularState& state, const EntropyOrder& p);

AngularResult lambda_quadrature(const AngularState& state, const EntropyOrder& p);

// Closed form for the (l,l), (l,l-1) and (1,0) families; empty otherwise.
std::optional<AngularResult> lambda_closed(const AngularState& state, const EntropyOrder& p);

// R_p[Y_{l,m}] = ln(Lambda)/(1-p). Dispatches closed form, then linearization
// on the lattice, then quadrature.
AngularResult renyi_angular(const AngularState& state, const EntropyOrder& p);

std::optional<double> shannon_angular_closed(const AngularState& state);
double shannon_angular_quadrature(const AngularState& state);

// S[Y_{l,m}]: closed form when the family has one, quadrature otherwise.
double shannon_angular(const AngularState& state);

}  // namespace oscent::angular
