#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>

#include "oscent/angular.hpp"
#include "oscent/entropy.hpp"
#include "oscent/radial.hpp"
#include "oscent/rydberg.hpp"

#ifndef OSCENT_VERSION
#define OSCENT_VERSION "0.0.0"
#endif

namespace oscent::cli {

namespace {

using Json = nlohmann::ordered_json;

// ---- parallel evaluation ----------------------------------------------------

template <class T>
std::vector<T> parallel_map(std::size_t count, int jobs, const std::function<T(std::size_t)>& f) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

// ---- argument lists ---------------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

double parse_real(const std::string& s) {
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const double num = parse_real(s.substr(0, slash));
    const double den = parse_real(s.substr(slash + 1));
    if (den == 0.0) throw UsageError("zero denominator in '" + s + "'");
    return num / den;
  }
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

// "0,2,5" or "0..3" or a mix of both.
std::vector<int> int_list(const std::string& s, const char* name) {
  std::vector<int> out;
  for (const std::string& tok : split(s, ',')) {
    const auto dots = tok.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(tok));
      continue;
    }
    const int lo = parse_int(tok.substr(0, dots));
    const int hi = parse_int(tok.substr(dots + 2));
    if (hi < lo) throw UsageError(std::string("empty range for --") + name);
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string("empty list for --") + name);
  return out;
}

std::vector<double> real_list(const std::string& s, const char* name) {
  std::vector<double> out;
  for (const std::string& tok : split(s, ',')) out.push_back(parse_real(tok));
  if (out.empty()) throw UsageError(std::string("empty list for --") + name);
  return out;
}

// ---- report -----------------------------------------------------------------

double round15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

Json number(double v) {
  if (!std::isfinite(v)) return Json(nullptr);
  return Json(round15(v));
}

Json optional_number(const std::optional<double>& v) { return v ? number(*v) : Json(nullptr); }

struct Options {
  std::string format = "json";
  bool bits = false;
  int jobs = 1;
};

Json entropy_value(double nats, const Options& opt) {
  return number(opt.bits ? nats / std::numbers::ln2 : nats);
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v.get<double>());
    return buf;
  }
  std::string s;
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += "; ";
      s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
    }
  } else if (v.is_string()) {
    s = v.get<std::string>();
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void write_report(std::ostream& out, const Options& opt, const Json& request,
                  const std::vector<Json>& results) {
  Json warnings = Json::array();
  for (const Json& r : results) {
    if (r.contains("warnings")) {
      for (const Json& w : r["warnings"]) warnings.push_back(w);
    }
  }
  if (opt.format == "json") {
    Json doc;
    doc["request"] = request;
    doc["results"] = results;
    doc["warnings"] = warnings;
    doc["version"] = OSCENT_VERSION;
    out << doc.dump(2) << '\n';
    return;
  }
  if (results.empty()) return;
  std::vector<std::string> keys;
  for (auto it = results.front().begin(); it != results.front().end(); ++it) keys.push_back(it.key());
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
  out << '\n';
  for (const Json& r : results) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out << (i ? "," : "") << (r.contains(keys[i]) ? csv_cell(r[keys[i]]) : "");
    }
    out << '\n';
  }
}

Json warnings_json(const Warnings& w) {
  Json a = Json::array();
  for (const auto& s : w) a.push_back(s);
  return a;
}

// ---- state selection --------------------------------------------------------

std::vector<QuantumState> states(const std::vector<int>& ns, const std::vector<int>& ls,
                                 const std::string& m_spec) {
  std::vector<QuantumState> out;
  const bool all_m = m_spec == "all";
  const std::vector<int> ms = all_m ? std::vector<int>{} : int_list(m_spec, "m");
  for (int n : ns) {
    for (int l : ls) {
      if (all_m) {
        for (int m = -l; m <= l; ++m) out.emplace_back(n, l, m);
      } else {
        for (int m : ms) out.emplace_back(n, l, m);
      }
    }
  }
  return out;
}

entropy::Mode parse_mode(const std::string& s) {
  return s == "asymptotic" ? entropy::Mode::asymptotic : entropy::Mode::exact;
}

entropy::Space parse_space(const std::string& s) {
  return s == "momentum" ? entropy::Space::momentum : entropy::Space::position;
}

// ---- commands ---------------------------------------------------------------

Json angular_record(const AngularState& s, double p, const std::string& method,
                    const Options& opt) {
  const EntropyOrder order(p);
  Json r;
  r["l"] = s.l;
  r["m"] = s.m;
  r["p"] = number(order.value());
  if (order.is_shannon()) {
    const auto closed = angular::shannon_angular_closed(s);
    r["lambda"] = 1.0;
    r["renyi"] = entropy_value(closed ? *closed : angular::shannon_angular_quadrature(s), opt);
    r["method"] = closed ? "closed_form" : "quadrature";
    r["warnings"] = Json::array();
    return r;
  }
  angular::AngularResult a;
  if (method == "auto") {
    a = angular::renyi_angular(s, order);
  } else if (method == "linearization") {
    a = angular::lambda_linearization(s, order);
  } else if (method == "bell") {
    a = angular::lambda_bell(s, order);
  } else if (method == "quadrature") {
    a = angular::lambda_quadrature(s, order);
  } else {
    auto c = angular::lambda_closed(s, order);
    if (!c) throw DomainError("no closed form for this state");
    a = *c;
  }
  r["lambda"] = number(a.lambda_value);
  r["renyi"] = entropy_value(a.renyi, opt);
  r["method"] = angular::to_string(a.method);
  r["warnings"] = warnings_json(a.warnings);
  return r;
}

Json radial_record(const QuantumState& s, double p, double lambda, const std::string& path,
                   const Options& opt) {
  const EntropyOrder order(p);
  const OscillatorParams params(lambda);
  Json r;
  r["n"] = s.n;
  r["l"] = s.l;
  r["p"] = number(order.value());
  r["lambda"] = number(lambda);
  r["energy"] = number(radial::energy(s, params));
  if (order.is_shannon()) {
    r["norm"] = 1.0;
    r["path"] = "quadrature";
    r["renyi"] = entropy_value(radial::shannon_radial_exact(s, params), opt);
    r["warnings"] = Json::array();
    return r;
  }
  radial::LaguerreNorm norm;
  if (path == "auto") {
    norm = radial::laguerre_norm(s.n, s.l, order);
  } else if (path == "symbolic") {
    norm.value = radial::laguerre_norm_symbolic(s.n, s.l, order);
    norm.path = radial::NormPath::symbolic;
  } else if (path == "quadrature") {
    norm.value = radial::laguerre_norm_quadrature(s.n, s.l, order.value());
    norm.path = radial::NormPath::quadrature;
  } else {
    if (s.n != 1) throw DomainError("closed_n1 path requires n = 1");
    norm = radial::closed_n1l(s.l, order);
  }
  const double renyi =
      -(std::numbers::ln2 + 1.5 * std::log(lambda)) + std::log(norm.value) / (1.0 - order.value());
  r["norm"] = number(norm.value);
  r["path"] = radial::to_string(norm.path);
  r["renyi"] = entropy_value(renyi, opt);
  r["warnings"] = warnings_json(norm.warnings);
  return r;
}

Json asymptotic_record(int n, int l, double p, double lambda, const Options& opt) {
  const EntropyOrder order(p);
  const OscillatorParams params(lambda);
  Json r;
  r["n"] = n;
  r["l"] = l;
  r["p"] = number(order.value());
  r["lambda"] = number(lambda);
  if (order.is_shannon()) {
    r["value"] = entropy_value(rydberg::shannon_radial_asymptotic(n, params), opt);
    r["regime"] = "shannon";
    r["leading_exponent"] = 1.5;
    r["caveat"] = false;
  } else {
    const rydberg::AsymptoticValue a = rydberg::renyi_radial_asymptotic(n, l, params, order);
    r["value"] = entropy_value(a.value, opt);
    r["regime"] = rydberg::to_string(a.regime);
    r["leading_exponent"] = number(a.leading_exponent);
    r["caveat"] = a.caveat;
  }
  Warnings w;
  if (r["caveat"].get<bool>()) w.push_back("transition regime: O(1) remainder of the ln n term is unknown");
  r["warnings"] = warnings_json(w);
  return r;
}

Json total_record(const QuantumState& s, double p, double lambda, const std::string& mode,
                  const std::string& space, const Options& opt) {
  const EntropyOrder order(p);
  const OscillatorParams params(lambda);
  const entropy::EntropyDecomposition d =
      order.is_shannon() ? entropy::shannon_total(s, params, parse_mode(mode), parse_space(space))
                         : entropy::renyi_total(s, params, order, parse_mode(mode), parse_space(space));
  Json r;
  r["n"] = s.n;
  r["l"] = s.l;
  r["m"] = s.m;
  r["p"] = number(order.value());
  r["lambda"] = number(lambda);
  r["mode"] = entropy::to_string(d.mode);
  r["space"] = entropy::to_string(d.space);
  r["radial"] = entropy_value(d.radial, opt);
  r["angular"] = entropy_value(d.angular, opt);
  r["total"] = entropy_value(d.total, opt);
  r["tsallis"] = order.is_shannon() ? Json(nullptr)
                                    : number(entropy::tsallis_from_renyi(d.total, order.value()));
  r["radial_method"] = d.radial_method;
  r["angular_method"] = d.angular_method;
  r["regime"] = d.regime ? Json(rydberg::to_string(*d.regime)) : Json(nullptr);
  r["caveat"] = d.caveat;
  Warnings w = d.warnings;
  if (d.caveat) w.push_back("transition regime: O(1) remainder of the ln n term is unknown");
  r["warnings"] = warnings_json(w);
  return r;
}

Json uncertainty_record(const QuantumState& s, double p, std::optional<double> q, double lambda,
                        bool shannon, const std::string& mode, const Options& opt) {
  const OscillatorParams params(lambda);
  const entropy::ConjugatePair pair =
      shannon ? entropy::ConjugatePair(1.0, 1.0)
              : (q ? entropy::ConjugatePair(p, *q) : entropy::ConjugatePair::from_p(p));
  const entropy::UncertaintyRecord u = entropy::uncertainty_sum(
      s, params, pair, shannon ? entropy::Kind::shannon : entropy::Kind::renyi, parse_mode(mode));
  Json r;
  r["n"] = s.n;
  r["l"] = s.l;
  r["m"] = s.m;
  r["p"] = number(pair.p());
  r["q"] = number(pair.q());
  r["lambda"] = number(lambda);
  r["kind"] = shannon ? "shannon" : "renyi";
  r["sum"] = entropy_value(u.sum, opt);
  r["bound"] = entropy_value(u.bound, opt);
  r["saturated"] = u.saturated;
  r["caveat"] = u.caveat;
  Warnings w;
  if (u.caveat) w.push_back("asymptotic sum with unknown remainder; inequality not asserted");
  r["warnings"] = warnings_json(w);
  return r;
}

Json sweep_record(const ConvergenceRow& row, const Options& opt) {
  Json r;
  r["n"] = row.n;
  r["exact"] = entropy_value(row.exact, opt);
  r["asymptotic"] = entropy_value(row.asymptotic, opt);
  r["difference"] = entropy_value(row.difference, opt);
  r["ratio"] = optional_number(row.ratio);
  r["regime"] = row.regime;
  r["caveat"] = row.caveat;
  r["warnings"] = warnings_json(row.warnings);
  return r;
}

Json verify_record(const VerifyCheck& c) {
  Json r;
  r["suite"] = c.suite;
  r["check"] = c.check;
  r["passed"] = c.passed;
  r["cases"] = c.cases;
  r["max_deviation"] = number(c.max_deviation);
  r["tolerance"] = number(c.tolerance);
  return r;
}

double precision_scale(const std::optional<double>& flag) {
  if (flag) {
    if (!(*flag > 0.0)) throw UsageError("--tolerance-scale must be positive");
    return *flag;
  }
  if (const char* env = std::getenv("OSCENT_PRECISION")) {
    const double v = parse_real(env);
    if (!(v > 0.0)) throw UsageError("OSCENT_PRECISION must be a positive number");
    return v;
  }
  return 1.0;
}

}  // namespace

std::vector<ConvergenceRow> emit_convergence_table(double p, int l, double lambda,
                                                   const std::vector<int>& n_ladder, int jobs) {
  if (n_ladder.empty()) throw UsageError("convergence table needs a non-empty n ladder");
  for (std::size_t i = 1; i < n_ladder.size(); ++i) {
    if (n_ladder[i] <= n_ladder[i - 1]) throw UsageError("n ladder must be strictly ascending");
  }
  const EntropyOrder order(p);
  const OscillatorParams params(lambda);
  return parallel_map<ConvergenceRow>(n_ladder.size(), jobs, [&](std::size_t i) {
    ConvergenceRow row;
    row.n = n_ladder[i];
    const QuantumState s(row.n, l, 0);
    if (order.is_shannon()) {
      row.exact = radial::shannon_radial_exact(s, params);
      row.asymptotic = rydberg::shannon_radial_asymptotic(row.n, params);
      row.regime = "shannon";
    } else {
      const radial::RadialEntropy e = radial::renyi_radial_exact(s, params, order);
      const rydberg::AsymptoticValue a = rydberg::renyi_radial_asymptotic(row.n, l, params, order);
      row.exact = e.value;
      row.asymptotic = a.value;
      row.regime = rydberg::to_string(a.regime);
      row.caveat = a.caveat;
      row.warnings = e.norm.warnings;
      if (!a.caveat) row.ratio = std::exp((1.0 - order.value()) * (e.value - a.value));
    }
    row.difference = row.exact - row.asymptotic;
    return row;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropies of three-dimensional isotropic harmonic-oscillator states", "oscent"};
  app.require_subcommand(1);
  app.set_version_flag("--version", OSCENT_VERSION);

  Options opt;
  std::string n_spec, l_spec, m_spec = "0", p_spec, q_spec;
  double lambda = 1.0;
  std::string mode = "exact", space = "position", method = "auto", path = "auto";
  std::string quantity = "radial-renyi", suites_spec = "all";
  bool shannon = false;
  std::optional<double> tolerance_scale;

  auto common = [&](CLI::App* sub, bool sweep = false) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_str(sweep ? "csv" : "json");
    sub->add_flag("--bits", opt.bits, "Report entropies in bits instead of nats");
    sub->add_option("--jobs", opt.jobs, "Concurrent evaluations")->check(CLI::PositiveNumber);
  };
  auto lambda_opt = [&](CLI::App* sub) {
    sub->add_option("--lambda", lambda, "Oscillator strength")->check(CLI::PositiveNumber);
  };

  CLI::App* c_angular = app.add_subcommand("angular", "Angular functional and entropies");
  c_angular->add_option("--l", l_spec, "Orbital numbers (list or a..b range)")->required();
  c_angular->add_option("--m", m_spec, "Magnetic numbers, or 'all'");
  c_angular->add_option("--p", p_spec, "Entropy orders (list; fractions allowed)")->required();
  c_angular->add_option("--method", method, "Evaluation route")
      ->check(CLI::IsMember({"auto", "linearization", "bell", "quadrature", "closed_form"}));
  common(c_angular);

  CLI::App* c_radial = app.add_subcommand("radial", "Exact radial norms and entropies");
  c_radial->add_option("--n", n_spec, "Radial numbers")->required();
  c_radial->add_option("--l", l_spec, "Orbital numbers")->required();
  c_radial->add_option("--p", p_spec, "Entropy orders")->required();
  c_radial->add_option("--path", path, "Norm evaluation path")
      ->check(CLI::IsMember({"auto", "symbolic", "quadrature", "closed_n1"}));
  lambda_opt(c_radial);
  common(c_radial);

  CLI::App* c_asym = app.add_subcommand("asymptotic", "Rydberg asymptotics of the radial entropy");
  c_asym->add_option("--n", n_spec, "Radial numbers")->required();
  c_asym->add_option("--l", l_spec, "Orbital numbers")->default_str("0");
  c_asym->add_option("--p", p_spec, "Entropy orders")->required();
  lambda_opt(c_asym);
  common(c_asym);

  CLI::App* c_total = app.add_subcommand("total", "Total entropies from radial and angular parts");
  c_total->add_option("--n", n_spec, "Radial numbers")->required();
  c_total->add_option("--l", l_spec, "Orbital numbers")->required();
  c_total->add_option("--m", m_spec, "Magnetic numbers, or 'all'");
  c_total->add_option("--p", p_spec, "Entropy orders")->required();
  c_total->add_option("--mode", mode)->check(CLI::IsMember({"exact", "asymptotic"}));
  c_total->add_option("--space", space)->check(CLI::IsMember({"position", "momentum"}));
  lambda_opt(c_total);
  common(c_total);

  CLI::App* c_unc = app.add_subcommand("uncertainty", "Position-momentum entropic uncertainty sums");
  c_unc->add_option("--n", n_spec, "Radial numbers")->required();
  c_unc->add_option("--l", l_spec, "Orbital numbers")->required();
  c_unc->add_option("--m", m_spec, "Magnetic numbers, or 'all'");
  c_unc->add_option("--p", p_spec, "Position orders; q defaults to the conjugate p/(2p-1)");
  c_unc->add_option("--q", q_spec, "Momentum orders, one per p");
  c_unc->add_flag("--shannon", shannon, "Shannon sum (p = q = 1)");
  c_unc->add_option("--mode", mode)->check(CLI::IsMember({"exact", "asymptotic"}));
  lambda_opt(c_unc);
  common(c_unc);

  CLI::App* c_verify = app.add_subcommand("verify", "Run invariant suites");
  c_verify->add_option("--suite", suites_spec, "Suites (list) or 'all'");
  c_verify->add_option("--tolerance-scale", tolerance_scale, "Multiply every suite tolerance");
  common(c_verify);

  CLI::App* c_sweep = app.add_subcommand("sweep", "Exact versus asymptotic convergence table");
  c_sweep->add_option("--quantity", quantity)
      ->check(CLI::IsMember({"radial-renyi", "radial-shannon"}));
  c_sweep->add_option("--p", p_spec, "Entropy order (radial-renyi)");
  c_sweep->add_option("--n", n_spec, "Ascending n ladder")->required();
  c_sweep->add_option("--l", l_spec, "Orbital number")->default_str("0");
  lambda_opt(c_sweep);
  common(c_sweep, true);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(OSCENT_VERSION) + "\n"
                                                           : app.help());
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    if (!sub->get_option("--format")->count()) opt.format = command == "sweep" ? "csv" : "json";
    if (l_spec.empty()) l_spec = "0";

    Json request;
    request["command"] = command;
    for (const CLI::Option* o : sub->get_options()) {
      if (o->get_name() == "--help" || o->count() == 0) continue;
      const auto& res = o->results();
      request[o->get_name().substr(2)] = res.size() == 1 ? Json(res.front()) : Json(res);
    }

    std::vector<std::function<Json()>> tasks;
    int status = kExitOk;

    if (command == "angular") {
      for (int l : int_list(l_spec, "l")) {
        const auto st = states({0}, {l}, m_spec);
        for (const QuantumState& s : st) {
          for (double p : real_list(p_spec, "p")) {
            tasks.push_back([=, &opt] { return angular_record(s.angular(), p, method, opt); });
          }
        }
      }
    } else if (command == "radial") {
      for (const QuantumState& s : states(int_list(n_spec, "n"), int_list(l_spec, "l"), "0")) {
        for (double p : real_list(p_spec, "p")) {
          tasks.push_back([=, &opt] { return radial_record(s, p, lambda, path, opt); });
        }
      }
    } else if (command == "asymptotic") {
      for (int n : int_list(n_spec, "n")) {
        for (int l : int_list(l_spec, "l")) {
          for (double p : real_list(p_spec, "p")) {
            tasks.push_back([=, &opt] { return asymptotic_record(n, l, p, lambda, opt); });
          }
        }
      }
    } else if (command == "total") {
      for (const QuantumState& s : states(int_list(n_spec, "n"), int_list(l_spec, "l"), m_spec)) {
        for (double p : real_list(p_spec, "p")) {
          tasks.push_back([=, &opt] { return total_record(s, p, lambda, mode, space, opt); });
        }
      }
    } else if (command == "uncertainty") {
      std::vector<double> ps = shannon ? std::vector<double>{1.0} : real_list(p_spec.empty() ? "2" : p_spec, "p");
      std::vector<std::optional<double>> qs(ps.size());
      if (!q_spec.empty() && !shannon) {
        const auto given = real_list(q_spec, "q");
        if (given.size() != ps.size()) throw UsageError("--q needs one value per --p value");
        for (std::size_t i = 0; i < ps.size(); ++i) qs[i] = given[i];
      }
      for (const QuantumState& s : states(int_list(n_spec, "n"), int_list(l_spec, "l"), m_spec)) {
        for (std::size_t i = 0; i < ps.size(); ++i) {
          const double p = ps[i];
          const auto q = qs[i];
          tasks.push_back([=, &opt] { return uncertainty_record(s, p, q, lambda, shannon, mode, opt); });
        }
      }
    } else if (command == "verify") {
      const double scale = precision_scale(tolerance_scale);
      std::vector<std::string> suites =
          suites_spec == "all" ? verify_suites() : split(suites_spec, ',');
      for (const auto& s : suites) {
        if (std::find(verify_suites().begin(), verify_suites().end(), s) == verify_suites().end()) {
          throw UsageError("unknown suite '" + s + "'");
        }
      }
      const auto checks = parallel_map<std::vector<VerifyCheck>>(
          suites.size(), opt.jobs, [&](std::size_t i) { return run_verify_suite(suites[i], scale); });
      std::vector<Json> results;
      for (const auto& group : checks) {
        for (const VerifyCheck& c : group) {
          results.push_back(verify_record(c));
          if (!c.passed) status = kExitVerificationFailed;
        }
      }
      write_report(out, opt, request, results);
      return status;
    } else if (command == "sweep") {
      const double p = quantity == "radial-shannon" ? 1.0 : real_list(p_spec.empty() ? "2" : p_spec, "p").front();
      const auto ls = int_list(l_spec, "l");
      if (ls.size() != 1) throw UsageError("sweep takes a single --l");
      const auto rows = emit_convergence_table(p, ls.front(), lambda, int_list(n_spec, "n"), opt.jobs);
      std::vector<Json> results;
      for (const auto& row : rows) results.push_back(sweep_record(row, opt));
      write_report(out, opt, request, results);
      return status;
    }

    const std::vector<Json> results =
        parallel_map<Json>(tasks.size(), opt.jobs, [&](std::size_t i) { return tasks[i](); });
    write_report(out, opt, request, results);
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AccuracyError& e) {
    err << "accuracy error: " << e.what() << '\n';
    return kExitAccuracy;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const UnboundedGrowthError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace oscent::cli
