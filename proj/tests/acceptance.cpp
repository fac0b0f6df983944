// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oscent/angular.hpp"
#include "oscent/entropy.hpp"
#include "oscent/oracle.hpp"
#include "oscent/radial.hpp"
#include "oscent/rydberg.hpp"
#include "support.hpp"

using namespace oscent;
using testing_support::rel_diff;

namespace {

constexpr double kPi = std::numbers::pi;
const OscillatorParams kOne(1.0);
const std::vector<int> kLadder{50, 100, 200, 400};

struct Tally {
  bool ok = true;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (failures.size() < 8) failures.push_back(what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

std::string state_label(int l, int m, double p) {
  std::ostringstream os;
  os << "(l=" << l << ",m=" << m << ",p=" << p << ")";
  return os.str();
}

void criterion1(Tally& t) {
  const std::vector<std::pair<AngularState, double>> shannon{
      {AngularState(0, 0), std::log(4 * kPi)},
      {AngularState(1, 1), std::log(2 * kPi / 3) + 5.0 / 3},
      {AngularState(1, 0), 2.0 / 3 + std::log(4 * kPi / 3)},
  };
  double worst = 0;
  for (const auto& [s, expected] : shannon) {
    const double d = std::fabs(angular::shannon_angular_quadrature(s) - expected);
    worst = std::max(worst, d);
    t.expect(d < 1e-6, "Shannon " + state_label(s.l, s.m, 1) + " off by " + fmt(d));
  }
  t.note("max Shannon deviation " + fmt(worst));
  worst = 0;
  for (double p : {0.5, 2.0, 3.0}) {
    const double d = std::fabs(angular::renyi_angular(AngularState(0, 0), EntropyOrder(p)).renyi - std::log(4 * kPi));
    worst = std::max(worst, d);
    t.expect(d < 1e-9, "R_p[Y00] at p=" + std::to_string(p) + " off by " + fmt(d));
  }
  t.note("max R_p[Y00] deviation " + fmt(worst));
}

void criterion2(Tally& t) {
  double worst_lb = 0;
  double worst_q = 0;
  int asserted = 0;
  int reported = 0;
  for (int l = 0; l <= 6; ++l) {
    for (int m = 0; m <= l; ++m) {
      const AngularState s(l, m);
      const bool definite = angular::jacobi_factor_sign_definite(s);
      for (int q = 1; q <= 8; ++q) {
        const EntropyOrder p(q / 2.0);
        if (p.odd_lattice() && !definite) {
          // Polynomial routes give the signed integral here; compare them
          // with each other and report.
          const auto a = angular::lambda_linearization(s, p);
          const auto b = angular::lambda_bell(s, p);
          if (a.signed_route_value && b.signed_route_value) {
            const double scale = std::max(1.0, std::fabs(*b.signed_route_value));
            t.expect(std::fabs(*a.signed_route_value - *b.signed_route_value) < 1e-9 * scale,
                     "signed routes disagree " + state_label(l, m, p.value()));
          }
          ++reported;
          continue;
        }
        const double a = angular::lambda_linearization(s, p).lambda_value;
        const double b = angular::lambda_bell(s, p).lambda_value;
        const double c = angular::lambda_quadrature(s, p).lambda_value;
        const double lb = rel_diff(a, b);
        const double q1 = std::max(rel_diff(a, c), rel_diff(b, c));
        worst_lb = std::max(worst_lb, lb);
        worst_q = std::max(worst_q, q1);
        t.expect(lb < 1e-9, "linearization vs Bell " + state_label(l, m, p.value()) + " " + fmt(lb));
        t.expect(q1 < 1e-7, "exact vs quadrature " + state_label(l, m, p.value()) + " " + fmt(q1));
        ++asserted;
      }
    }
  }
  t.note(std::to_string(asserted) + " cases asserted, " + std::to_string(reported) +
         " sign-changing odd-2p cases reported with warning; max lin/Bell " + fmt(worst_lb) +
         ", max exact/quadrature " + fmt(worst_q));
}

void criterion3(Tally& t) {
  double worst = 0;
  int cases = 0;
  for (int l = 1; l <= 6; ++l) {
    for (int m : {l, l - 1}) {
      const AngularState s(l, m);
      for (double p : {0.7, 1.3, 2.0, 3.5}) {
        const auto closed = angular::lambda_closed(s, EntropyOrder(p));
        t.expect(closed.has_value(), "no closed form " + state_label(l, m, p));
        if (!closed) continue;
        const double d = rel_diff(closed->lambda_value, angular::lambda_quadrature(s, EntropyOrder(p)).lambda_value);
        worst = std::max(worst, d);
        ++cases;
        t.expect(d < 1e-9, "closed vs quadrature " + state_label(l, m, p) + " " + fmt(d));
      }
      for (int q = 1; q <= 8; ++q) {
        const EntropyOrder p(q / 2.0);
        const double closed = angular::lambda_closed(s, p)->lambda_value;
        const double ref = p.odd_lattice() && !angular::jacobi_factor_sign_definite(s)
                               ? angular::lambda_quadrature(s, p).lambda_value
                               : angular::lambda_linearization(s, p).lambda_value;
        const double d = rel_diff(closed, ref);
        worst = std::max(worst, d);
        ++cases;
        t.expect(d < 1e-9, "closed vs exact " + state_label(l, m, p.value()) + " " + fmt(d));
      }
    }
  }
  // l = 0 belongs to the (l,l) family
  for (double p : {0.7, 1.3, 2.0, 3.5}) {
    const double d = std::fabs(angular::lambda_closed(AngularState(0, 0), EntropyOrder(p))->lambda_value -
                               std::pow(4 * kPi, 1 - p));
    t.expect(d < 1e-9, "closed (0,0) at p=" + std::to_string(p));
  }
  t.note(std::to_string(cases) + " cases, max relative deviation " + fmt(worst));
}

void criterion4(Tally& t) {
  double worst_even = 0;
  double worst_odd = 0;
  for (int l = 0; l <= 1; ++l) {
    for (int q = 1; q <= 6; ++q) {
      const EntropyOrder p(q / 2.0);
      const double closed = radial::closed_n1l(l, p).value;
      const double quad = radial::laguerre_norm_quadrature(1, l, p.value());
      const double d = rel_diff(closed, quad);
      (q % 2 == 0 ? worst_even : worst_odd) = std::max(q % 2 == 0 ? worst_even : worst_odd, d);
      t.expect(d < 1e-9, "closed_n1l vs quadrature (l=" + std::to_string(l) + ", 2p=" + std::to_string(q) +
                             "): closed " + std::to_string(closed) + ", quadrature " + std::to_string(quad));
    }
  }
  double worst_unit = 0;
  for (int l = 0; l <= 3; ++l) {
    const double d = std::fabs(radial::closed_n1l(l, EntropyOrder(1.0)).value - 1);
    worst_unit = std::max(worst_unit, d);
    t.expect(d < 1e-10, "N_{1," + std::to_string(l) + "}(1) off by " + fmt(d));
  }
  t.note("even 2p max " + fmt(worst_even) + ", odd 2p max " + fmt(worst_odd) + ", N(1) max " + fmt(worst_unit));
}

void criterion5(Tally& t) {
  const QuantumState g(0, 0, 0);
  const double r2 = entropy::renyi_total(g, kOne, EntropyOrder(2)).total;
  const double dis = entropy::disequilibrium(g, kOne);
  const double sh = entropy::shannon_total(g, kOne).total;
  const double r2_expected = 1.5 * std::log(2 * kPi);
  const double dis_expected = std::pow(2 * kPi, -1.5);
  const double sh_expected = 1.5 * (1 + std::log(kPi));
  t.expect(std::fabs(r2 - r2_expected) < 1e-9, "R2 " + fmt(r2 - r2_expected));
  t.expect(std::fabs(dis - dis_expected) < 1e-9, "disequilibrium " + fmt(dis - dis_expected));
  t.expect(std::fabs(sh - sh_expected) < 1e-9, "Shannon " + fmt(sh - sh_expected));
  const double o_r2 = oracle::renyi_full(g, kOne, 2.0);
  const double o_sh = oracle::shannon_full(g, kOne);
  const double o_dis = std::exp(-o_r2);
  t.expect(std::fabs(o_r2 - r2) < 1e-8, "oracle R2 " + fmt(o_r2 - r2));
  t.expect(std::fabs(o_dis - dis) < 1e-8, "oracle disequilibrium " + fmt(o_dis - dis));
  t.expect(std::fabs(o_sh - sh) < 1e-8, "oracle Shannon " + fmt(o_sh - sh));
  t.note("R2 " + std::to_string(r2) + ", disequilibrium " + std::to_string(dis) + ", Shannon " +
         std::to_string(sh));
}

void criterion6(Tally& t) {
  const QuantumState g(0, 0, 0);
  for (double p : {2.0, 3.0}) {
    const auto u = entropy::uncertainty_sum(g, kOne, entropy::ConjugatePair::from_p(p));
    t.expect(std::fabs(u.sum - u.bound) < 1e-9 && u.saturated,
             "ground state does not saturate at p=" + std::to_string(p) + ": " + fmt(u.sum - u.bound));
  }
  // (3/2, 3) does not satisfy 1/p + 1/q = 2; the sum and bound are evaluated
  // literally. The conjugate partner of 3/2 is 3/4.
  {
    const double sum = entropy::renyi_pair_sum(g, kOne, 1.5, 3.0);
    const double bound = entropy::renyi_bound(1.5, 3.0);
    t.expect(std::fabs(sum - bound) < 1e-9, "ground state (3/2, 3) literal: " + fmt(sum - bound));
    const auto u = entropy::uncertainty_sum(g, kOne, entropy::ConjugatePair::from_p(1.5));
    t.expect(std::fabs(u.sum - u.bound) < 1e-9, "ground state (3/2, 3/4): " + fmt(u.sum - u.bound));
  }
  const auto sh = entropy::uncertainty_sum(g, kOne, entropy::ConjugatePair(1, 1), entropy::Kind::shannon);
  t.expect(std::fabs(sh.sum - 3 * (1 + std::log(kPi))) < 1e-9, "Shannon sum " + fmt(sh.sum - 3 * (1 + std::log(kPi))));

  int states = 0;
  double min_gap = INFINITY;
  for (int n = 0; n <= 5; ++n) {
    for (int l = 0; l <= 3; ++l) {
      for (int m = 0; m <= l; ++m) {
        const QuantumState s(n, l, m);
        ++states;
        for (double p : {2.0, 3.0, 1.5}) {
          const auto u = entropy::uncertainty_sum(s, kOne, entropy::ConjugatePair::from_p(p));
          min_gap = std::min(min_gap, u.sum - u.bound);
          t.expect(u.sum >= u.bound - 1e-9, "inequality violated n=" + std::to_string(n) + " " +
                                                state_label(l, m, p));
        }
        const auto s1 = entropy::uncertainty_sum(s, kOne, entropy::ConjugatePair(1, 1), entropy::Kind::shannon);
        min_gap = std::min(min_gap, s1.sum - s1.bound);
        t.expect(s1.sum >= s1.bound - 1e-9, "Shannon inequality violated n=" + std::to_string(n));
      }
    }
  }
  t.note(std::to_string(states) + " states, smallest sum - bound " + fmt(min_gap));
}

// 4/pi^2 int_0^inf sin^4 u / u^2 du with the tail averaged analytically.
double sine_integral_constant() {
  const double upper = 400 * kPi;
  const double head = testing_support::gl_integrate(
      [](double u) {
        if (u < 1e-4) return u * u;
        const double s = std::sin(u);
        return s * s * s * s / (u * u);
      },
      0.0, upper, 4000);
  return 4 / (kPi * kPi) * (head + 0.375 / upper);
}

void criterion7(Tally& t) {
  const double cb = rydberg::bessel_constant(0.5, -0.5, 2.0).value;
  const double sine = sine_integral_constant();
  t.expect(rel_diff(cb, 1 / kPi) < 1e-6, "C_B(1/2,-1/2,2) vs 1/pi " + fmt(rel_diff(cb, 1 / kPi)));
  t.expect(rel_diff(sine, 1 / kPi) < 1e-6, "sine integral vs 1/pi " + fmt(rel_diff(sine, 1 / kPi)));

  // (a)
  std::vector<double> dev;
  for (int n : kLadder) {
    dev.push_back(std::fabs(radial::laguerre_norm(n, 0, EntropyOrder(2)).value * std::sqrt(n) / cb - 1));
  }
  for (std::size_t i = 1; i < dev.size(); ++i) t.expect(dev[i] < dev[i - 1], "(a) deviation not decreasing");
  t.expect(dev.back() < 0.15, "(a) deviation at n=400 " + fmt(dev.back()));

  // (b)
  const double n200 = radial::laguerre_norm(200, 0, EntropyOrder(3)).value;
  const double n400 = radial::laguerre_norm(400, 0, EntropyOrder(3)).value;
  const double change = std::fabs(n400 / n200 - 1);
  t.expect(change < 0.05, "(b) N(3) changes by " + fmt(change));

  // (c), (d), (e)
  std::vector<double> dc, dd, xs, ys;
  for (int n : kLadder) {
    const QuantumState s(n, 0, 0);
    dc.push_back(std::fabs(radial::renyi_radial_exact(s, kOne, EntropyOrder(0.5)).value -
                           rydberg::renyi_radial_asymptotic(n, 0, kOne, EntropyOrder(0.5)).value));
    dd.push_back(std::fabs(radial::shannon_radial_exact(s, kOne) - (1.5 * std::log(n) + std::log(kPi) - 1)));
    xs.push_back(std::log(n));
    ys.push_back(radial::renyi_radial_exact(s, kOne, EntropyOrder(1.5)).value);
  }
  for (std::size_t i = 1; i < kLadder.size(); ++i) {
    t.expect(dc[i] < dc[i - 1], "(c) p=1/2 difference not decreasing at n=" + std::to_string(kLadder[i]));
    t.expect(dd[i] < dd[i - 1], "(d) Shannon difference not decreasing at n=" + std::to_string(kLadder[i]));
  }
  const double mx = (xs[0] + xs[1] + xs[2] + xs[3]) / 4;
  const double my = (ys[0] + ys[1] + ys[2] + ys[3]) / 4;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  t.expect(std::fabs(slope / 1.5 - 1) < 0.25, "(e) slope " + std::to_string(slope));
  t.note("(a) dev@400 " + fmt(dev.back()) + ", (b) change " + fmt(change) + ", (c) diff@400 " + fmt(dc.back()) +
         ", (d) diff@400 " + fmt(dd.back()) + ", (e) slope " + std::to_string(slope));
}

void criterion8(Tally& t) {
  double worst = 0;
  int cases = 0;
  for (int n = 0; n <= 3; ++n) {
    for (int l = 0; l <= 2; ++l) {
      for (int m = -l; m <= l; ++m) {
        const QuantumState s(n, l, m);
        for (double p : {0.5, 2.0, 3.0}) {
          const double d = std::fabs(oracle::renyi_full(s, kOne, p) -
                                     entropy::renyi_total(s, kOne, EntropyOrder(p)).total);
          worst = std::max(worst, d);
          ++cases;
          t.expect(d < 1e-7, "Renyi n=" + std::to_string(n) + " " + state_label(l, m, p) + " " + fmt(d));
        }
        const double d = std::fabs(oracle::shannon_full(s, kOne) - entropy::shannon_total(s, kOne).total);
        worst = std::max(worst, d);
        ++cases;
        t.expect(d < 1e-7, "Shannon n=" + std::to_string(n) + " " + state_label(l, m, 1) + " " + fmt(d));
      }
    }
  }
  t.note(std::to_string(cases) + " cases, max deviation " + fmt(worst));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
      {"angular reference values", criterion1},
      {"cross-method angular suite", criterion2},
      {"closed-form angular families", criterion3},
      {"N_{1,l} closed form", criterion4},
      {"ground-state exact values", criterion5},
      {"uncertainty relations", criterion6},
      {"Rydberg convergence", criterion7},
      {"oracle master check", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(t);
    } catch (const std::exception& e) {
      t.ok = false;
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string detail;
    for (const auto& n : t.notes) detail += (detail.empty() ? "" : "; ") + n;
    std::printf("[%s] criterion %zu: %s (%.1fs) %s\n", t.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                secs, detail.c_str());
    for (const auto& f : t.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
    if (!t.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
