#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscent/types.hpp"

namespace oscent::cli {

// Malformed flags or an unusable request; exit status 64.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitAccuracy = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

struct ConvergenceRow {
  int n = 0;
  double exact = 0.0;
  double asymptotic = 0.0;
  double difference = 0.0;
  // N_exact / N_asymptotic; empty for the Shannon entropy and for the
  // transition regime.
  std::optional<double> ratio;
  std::string regime;
  bool caveat = false;
  Warnings warnings;
};

// Exact against asymptotic radial entropy over an ascending ladder of n.
// p = 1 selects the Shannon entropy. Rows keep the ladder order.
std::vector<ConvergenceRow> emit_convergence_table(double p, int l, double lambda,
                                                   const std::vector<int>& n_ladder,
                                                   int jobs = 1);

struct VerifyCheck {
  std::string suite;
  std::string check;
  bool passed = false;
  int cases = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
};

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites{"angular", "radial", "rydberg", "oracle",
                                               "uncertainty"};
  return suites;
}

// Invariant checks of one suite; tolerances are multiplied by `scale`.
std::vector<VerifyCheck> run_verify_suite(const std::string& suite, double scale);

// Parses `args` (without the program name), writes the report to `out` and
// diagnostics to `err`, and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oscent::cli
