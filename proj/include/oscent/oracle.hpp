#pragma once

// Brute-force evaluation of entropic functionals of the full density
// rho(r) |Y(theta, phi)|^2 over R^3 by tensorized Gauss-Legendre quadrature.
// Shares only the special-function kernel with the decomposition code.

#include "oscent/types.hpp"

namespace oscent::oracle {

struct GridSpec {
  // Gauss-Legendre nodes per radial panel.
  int radial_nodes = 48;
  // Gauss-Legendre nodes per polar panel.
  int polar_nodes = 48;
  // The integrand is phi-free and integrated exactly; kept for completeness.
  int azimuthal_nodes = 16;
  // Cutoff radius in units of sqrt((2n + l + 3/2) / lambda).
  double cutoff_multiplier = 6.0;

  void validate() const;
  GridSpec refined() const;
};

double full_density(const QuantumState& state, const OscillatorParams& params, double r,
                    double theta, double phi);

// int rho d^3r.
double normalization(const QuantumState& state, const OscillatorParams& params,
                     const GridSpec& grid = {});

// ln(int rho^p d^3r) / (1-p), p != 1.
double renyi_full(const QuantumState& state, const OscillatorParams& params, double p,
                  const GridSpec& grid = {});

// -int rho ln rho d^3r.
double shannon_full(const QuantumState& state, const OscillatorParams& params,
                    const GridSpec& grid = {});

}  // namespace oscent::oracle
