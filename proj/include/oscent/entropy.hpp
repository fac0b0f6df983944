#pragma once

// Total entropies of oscillator states assembled from their radial and
// angular parts, the momentum-space shift, and position-momentum entropic
// uncertainty sums.

#include <optional>
#include <string>

#include "oscent/angular.hpp"
#include "oscent/radial.hpp"
#include "oscent/rydberg.hpp"
#include "oscent/types.hpp"

namespace oscent::entropy {

enum class Space { position, momentum };
enum class Mode { exact, asymptotic };
enum class Kind { renyi, shannon };

std::string to_string(Space space);
std::string to_string(Mode mode);

struct EntropyDecomposition {
  double radial = 0.0;
  double angular = 0.0;
  double total = 0.0;
  Space space = Space::position;
  Mode mode = Mode::exact;
  double p = 1.0;
  // Method tags of the two parts.
  std::string radial_method;
  std::string angular_method;
  // Asymptotic mode only.
  std::optional<rydberg::Regime> regime;
  bool caveat = false;
  Warnings warnings;
};

EntropyDecomposition renyi_total(const QuantumState& state, const OscillatorParams& params,
                                 const EntropyOrder& p, Mode mode = Mode::exact,
                                 Space space = Space::position);

EntropyDecomposition shannon_total(const QuantumState& state, const OscillatorParams& params,
                                   Mode mode = Mode::exact, Space space = Space::position);

// T_p = (e^{(1-p) r} - 1) / (1-p).
double tsallis_from_renyi(double renyi, double p);

// <rho> = exp(-R_2[rho]).
double disequilibrium(const QuantumState& state, const OscillatorParams& params);

// R_p[gamma] = R_p[rho] + 3 ln lambda. For p = 1 the same shift applies to
// the Shannon entropy and must be requested with `shannon`.
double momentum_renyi(double position_value, const OscillatorParams& params,
                      const EntropyOrder& p, bool shannon = false);

// Renyi orders with 1/p + 1/q = 2.
class ConjugatePair {
 public:
  ConjugatePair(double p, double q);
  static ConjugatePair from_p(double p);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

 private:
  double p_;
  double q_;
};

// 3 ln pi - (3/2) (ln p/(1-p) + ln q/(1-q)), with ln p/(1-p) -> -1 at p = 1.
// Takes any p, q > 0 without checking conjugacy.
double renyi_bound(double p, double q);

// 3 (1 + ln pi).
double shannon_bound();

// R_p[rho] + R_q[gamma] for any p, q > 0 (p, q != 1) without checking
// conjugacy.
double renyi_pair_sum(const QuantumState& state, const OscillatorParams& params, double p,
                      double q, Mode mode = Mode::exact);

struct UncertaintyRecord {
  double sum = 0.0;
  double bound = 0.0;
  bool saturated = false;
  // Asymptotic sums with an unknown remainder; the inequality is not
  // asserted for them.
  bool caveat = false;
};

inline constexpr double kSaturationTolerance = 1e-9;

UncertaintyRecord uncertainty_sum(const QuantumState& state, const OscillatorParams& params,
                                  const ConjugatePair& pair, Kind kind = Kind::renyi,
                                  Mode mode = Mode::exact);

}  // namespace oscent::entropy
