#pragma once

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "oscent/errors.hpp"

namespace oscent {

// Rényi order p > 0. Knows whether it sits on the half-integer lattice
// (2p a positive integer) where the exact polynomial routes apply.
class EntropyOrder {
 public:
  explicit EntropyOrder(double p) : p_(p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw DomainError("entropy order must be a finite positive number, got " +
                        std::to_string(p));
    }
    const double twice = std::round(2.0 * p);
    lattice_ = twice >= 1.0 && std::abs(2.0 * p - twice) < 1e-12;
    twice_ = lattice_ ? static_cast<int>(twice) : 0;
    if (lattice_) p_ = twice / 2.0;
  }

  double value() const noexcept { return p_; }
  bool is_shannon() const noexcept { return lattice_ && twice_ == 2; }
  bool is_lattice() const noexcept { return lattice_; }
  // 2p for lattice orders, 0 otherwise.
  int twice() const noexcept { return twice_; }
  bool odd_lattice() const noexcept { return lattice_ && (twice_ % 2 == 1); }

 private:
  double p_;
  bool lattice_ = false;
  int twice_ = 0;
};

// Orbital part of a state; the density depends on |m| only.
struct AngularState {
  int l = 0;
  int m = 0;

  AngularState() = default;
  AngularState(int l_, int m_) : l(l_), m(m_) {
    if (l < 0 || std::abs(m) > l) {
      throw DomainError("invalid angular state (l=" + std::to_string(l) +
                        ", m=" + std::to_string(m) + ")");
    }
  }
  int abs_m() const noexcept { return std::abs(m); }
};

// Oscillator quantum numbers (n, l, m).
struct QuantumState {
  int n = 0;
  int l = 0;
  int m = 0;

  QuantumState() = default;
  QuantumState(int n_, int l_, int m_) : n(n_), l(l_), m(m_) {
    if (n < 0 || l < 0 || std::abs(m) > l) {
      throw DomainError("invalid quantum state (n=" + std::to_string(n) +
                        ", l=" + std::to_string(l) + ", m=" + std::to_string(m) + ")");
    }
  }
  AngularState angular() const { return AngularState(l, m); }
};

// Oscillator strength lambda of V(r) = lambda^2 r^2 / 2, atomic units.
struct OscillatorParams {
  double lambda = 1.0;

  OscillatorParams() = default;
  explicit OscillatorParams(double lam) : lambda(lam) {
    if (!(lam > 0.0) || !std::isfinite(lam)) {
      throw DomainError("oscillator strength must be positive");
    }
  }
};

using Warnings = std::vector<std::string>;

}  // namespace oscent
