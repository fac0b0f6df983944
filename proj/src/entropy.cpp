#include "oscent/entropy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace oscent::entropy {

namespace {

double log_ratio(double p) { return p == 1.0 ? -1.0 : std::log(p) / (1.0 - p); }

void append(Warnings& to, const Warnings& from) { to.insert(to.end(), from.begin(), from.end()); }

double total_order(const QuantumState& state, const OscillatorParams& params, double p,
                   Mode mode, Space space, bool& caveat) {
  const EntropyOrder order(p);
  const EntropyDecomposition d = order.is_shannon() ? shannon_total(state, params, mode, space)
                                                    : renyi_total(state, params, order, mode, space);
  caveat = caveat || d.caveat;
  return d.total;
}

}  // namespace

std::string to_string(Space space) { return space == Space::position ? "position" : "momentum"; }

std::string to_string(Mode mode) { return mode == Mode::exact ? "exact" : "asymptotic"; }

EntropyDecomposition renyi_total(const QuantumState& state, const OscillatorParams& params,
                                 const EntropyOrder& p, Mode mode, Space space) {
  if (p.is_shannon()) {
    throw DomainError("Renyi order p = 1 is the Shannon limit; use shannon_total");
  }
  EntropyDecomposition d;
  d.p = p.value();
  d.mode = mode;
  d.space = space;
  if (mode == Mode::exact) {
    const radial::RadialEntropy r = radial::renyi_radial_exact(state, params, p);
    d.radial = r.value;
    d.radial_method = radial::to_string(r.norm.path);
    append(d.warnings, r.norm.warnings);
  } else {
    const rydberg::AsymptoticValue a = rydberg::renyi_radial_asymptotic(state.n, state.l, params, p);
    d.radial = a.value;
    d.radial_method = "asymptotic:" + rydberg::to_string(a.regime);
    d.regime = a.regime;
    d.caveat = a.caveat;
  }
  if (space == Space::momentum) d.radial = momentum_renyi(d.radial, params, p);
  const angular::AngularResult a = angular::renyi_angular(state.angular(), p);
  d.angular = a.renyi;
  d.angular_method = angular::to_string(a.method);
  append(d.warnings, a.warnings);
  d.total = d.radial + d.angular;
  return d;
}

EntropyDecomposition shannon_total(const QuantumState& state, const OscillatorParams& params,
                                   Mode mode, Space space) {
  EntropyDecomposition d;
  d.p = 1.0;
  d.mode = mode;
  d.space = space;
  if (mode == Mode::exact) {
    d.radial = radial::shannon_radial_exact(state, params);
    d.radial_method = "quadrature";
  } else {
    d.radial = rydberg::shannon_radial_asymptotic(state.n, params);
    d.radial_method = "asymptotic";
  }
  if (space == Space::momentum) d.radial = momentum_renyi(d.radial, params, EntropyOrder(1.0), true);
  const AngularState ang = state.angular();
  const auto closed = angular::shannon_angular_closed(ang);
  d.angular = closed ? *closed : angular::shannon_angular_quadrature(ang);
  d.angular_method = closed ? "closed_form" : "quadrature";
  d.total = d.radial + d.angular;
  return d;
}

double tsallis_from_renyi(double renyi, double p) {
  if (p == 1.0) throw DomainError("Tsallis entropy from Renyi requires p != 1");
  return std::expm1((1.0 - p) * renyi) / (1.0 - p);
}

double disequilibrium(const QuantumState& state, const OscillatorParams& params) {
  return std::exp(-renyi_total(state, params, EntropyOrder(2.0)).total);
}

double momentum_renyi(double position_value, const OscillatorParams& params,
                      const EntropyOrder& p, bool shannon) {
  if (p.is_shannon() && !shannon) {
    throw DomainError("p = 1 is the Shannon entropy; request the Shannon shift explicitly");
  }
  return position_value + 3.0 * std::log(params.lambda);
}

ConjugatePair::ConjugatePair(double p, double q) : p_(p), q_(q) {
  if (!(p > 0.5) || !(q > 0.5)) throw DomainError("conjugate orders must exceed 1/2");
  if (std::fabs(1.0 / p + 1.0 / q - 2.0) > 1e-12) {
    std::ostringstream os;
    os << "orders (" << p << ", " << q << ") are not conjugate: 1/p + 1/q != 2";
    throw DomainError(os.str());
  }
}

ConjugatePair ConjugatePair::from_p(double p) {
  if (!(p > 0.5)) throw DomainError("conjugate orders must exceed 1/2");
  return ConjugatePair(p, p / (2.0 * p - 1.0));
}

double renyi_bound(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0)) throw DomainError("entropy orders must be positive");
  return 3.0 * std::log(std::numbers::pi) - 1.5 * (log_ratio(p) + log_ratio(q));
}

double shannon_bound() { return 3.0 * (1.0 + std::log(std::numbers::pi)); }

double renyi_pair_sum(const QuantumState& state, const OscillatorParams& params, double p,
                      double q, Mode mode) {
  bool caveat = false;
  return total_order(state, params, p, mode, Space::position, caveat) +
         total_order(state, params, q, mode, Space::momentum, caveat);
}

UncertaintyRecord uncertainty_sum(const QuantumState& state, const OscillatorParams& params,
                                  const ConjugatePair& pair, Kind kind, Mode mode) {
  UncertaintyRecord rec;
  if (kind == Kind::shannon) {
    if (pair.p() != 1.0 || pair.q() != 1.0) {
      throw DomainError("Shannon uncertainty sum requires p = q = 1");
    }
    rec.sum = shannon_total(state, params, mode, Space::position).total +
              shannon_total(state, params, mode, Space::momentum).total;
    rec.bound = shannon_bound();
  } else {
    if (pair.p() == 1.0) {
      throw DomainError("Renyi uncertainty sum at p = q = 1 is the Shannon sum");
    }
    rec.sum = total_order(state, params, pair.p(), mode, Space::position, rec.caveat) +
              total_order(state, params, pair.q(), mode, Space::momentum, rec.caveat);
    rec.bound = renyi_bound(pair.p(), pair.q());
  }
  rec.saturated = std::fabs(rec.sum - rec.bound) < kSaturationTolerance;
  return rec;
}

}  // namespace oscent::entropy
