#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "cli.hpp"

using namespace oscent::cli;
using Json = nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
      } else if (c == ',' && !quoted) {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += c;
      }
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("angular command") {
  const Outcome o = invoke({"angular", "--l", "1", "--m", "0", "--p", "2", "--format", "json"});
  REQUIRE(o.status == kExitOk);
  const Json doc = Json::parse(o.out);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK(doc.contains("request"));
  CHECK(doc.contains("results"));
  CHECK(doc.contains("warnings"));
  CHECK(doc.contains("version"));
  const Json& r = doc["results"][0];
  CHECK(std::fabs(r["lambda"].get<double>() / (9 / (20 * kPi)) - 1) < 1e-14);
  CHECK(std::fabs(r["renyi"].get<double>() - std::log(20 * kPi / 9)) < 1e-14);
  CHECK(r["method"] == "closed_form");
  CHECK(doc["request"]["command"] == "angular");
}

TEST_CASE("ordered JSON layout") {
  const Outcome o = invoke({"angular", "--l", "2", "--m", "all", "--p", "1/2,2"});
  REQUIRE(o.status == kExitOk);
  const auto request = o.out.find("\"request\"");
  const auto results = o.out.find("\"results\"");
  const auto warnings = o.out.rfind("\"warnings\"");
  const auto version = o.out.find("\"version\"");
  CHECK(request < results);
  CHECK(results < warnings);
  CHECK(warnings < version);
  const Json doc = Json::parse(o.out);
  CHECK(doc["results"].size() == 10);
  // only (2, 0) at p = 1/2 goes through a polynomial route with a sign change;
  // (2, +-1) use the closed form
  CHECK(doc["warnings"].size() == 1);
}

TEST_CASE("uncertainty command") {
  const Outcome o = invoke({"uncertainty", "--n", "0", "--l", "0", "--m", "0", "--p", "2"});
  REQUIRE(o.status == kExitOk);
  const Json r = Json::parse(o.out)["results"][0];
  CHECK(r["saturated"] == true);
  CHECK(std::fabs(r["q"].get<double>() - 2.0 / 3) < 1e-14);
  const Outcome s = invoke({"uncertainty", "--n", "0", "--l", "0", "--shannon"});
  CHECK(std::fabs(Json::parse(s.out)["results"][0]["sum"].get<double>() - 3 * (1 + std::log(kPi))) < 1e-13);
  CHECK(invoke({"uncertainty", "--n", "0", "--l", "0", "--p", "1.5", "--q", "3"}).status == kExitDomain);
}

TEST_CASE("sweep command and convergence table") {
  const Outcome o = invoke({"sweep", "--quantity", "radial-renyi", "--p", "2", "--n", "50,100,200,400", "--l", "0"});
  REQUIRE(o.status == kExitOk);
  const auto rows = csv_rows(o.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0][0] == "n");
  CHECK(rows[0][1] == "exact");
  CHECK(rows[0][2] == "asymptotic");
  CHECK(rows[0][3] == "difference");
  CHECK(rows[0][4] == "ratio");
  double prev = INFINITY;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double dev = std::fabs(std::stod(rows[i][4]) - 1);
    CHECK(dev < prev);
    prev = dev;
  }

  const auto table = emit_convergence_table(3.0, 0, 1.0, {200, 400});
  CHECK(std::fabs(table[1].exact - table[0].exact) < 0.025);
  CHECK(table[0].regime == "bessel");

  const auto shannon = emit_convergence_table(1.0, 0, 1.0, {50, 100});
  CHECK_FALSE(shannon[0].ratio.has_value());
  CHECK(std::fabs(shannon[1].difference) < std::fabs(shannon[0].difference));

  CHECK_THROWS_AS(emit_convergence_table(2.0, 0, 1.0, {}), UsageError);
  CHECK_THROWS_AS(emit_convergence_table(2.0, 0, 1.0, {100, 50}), UsageError);
  CHECK(invoke({"sweep", "--p", "2", "--n", ""}).status == kExitUsage);
}

TEST_CASE("output is deterministic and independent of --jobs") {
  const std::vector<std::string> args{"total", "--n", "0..2", "--l", "0..1", "--m", "all", "--p", "1/2,2,3", "--format", "csv"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  std::vector<std::string> parallel = args;
  parallel.insert(parallel.end(), {"--jobs", "3"});
  const Outcome c = invoke(parallel);
  REQUIRE(a.status == kExitOk);
  CHECK(a.out == b.out);
  CHECK(csv_rows(a.out).size() == csv_rows(c.out).size());
  CHECK(csv_rows(a.out).back() == csv_rows(c.out).back());
}

TEST_CASE("bits flag") {
  const Json nats = Json::parse(invoke({"radial", "--n", "0", "--l", "0", "--p", "2"}).out)["results"][0];
  const Json bits = Json::parse(invoke({"radial", "--n", "0", "--l", "0", "--p", "2", "--bits"}).out)["results"][0];
  CHECK(std::fabs(bits["renyi"].get<double>() - nats["renyi"].get<double>() / std::numbers::ln2) < 1e-13);
  CHECK(bits["norm"] == nats["norm"]);
}

TEST_CASE("records carry method and regime tags") {
  const Json r = Json::parse(invoke({"asymptotic", "--n", "100", "--p", "1.5"}).out)["results"][0];
  CHECK(r["regime"] == "transition");
  CHECK(r["caveat"] == true);
  CHECK(r["warnings"].size() == 1);
  const Json t = Json::parse(invoke({"total", "--n", "1", "--l", "0", "--p", "1/2"}).out)["results"][0];
  CHECK(t["radial_method"] == "quadrature");
  CHECK(t["warnings"].size() == 1);
}

TEST_CASE("exit statuses") {
  CHECK(invoke({"angular", "--l", "1", "--m", "3", "--p", "2"}).status == kExitDomain);
  CHECK(invoke({"angular", "--l", "1", "--p", "0"}).status == kExitDomain);
  CHECK(invoke({"angular", "--l", "1", "--p", "2", "--unknown"}).status == kExitUsage);
  CHECK(invoke({"angular", "--l", "x", "--p", "2"}).status == kExitUsage);
  CHECK(invoke({}).status == kExitUsage);
  CHECK(invoke({"--help"}).status == kExitOk);
  CHECK(invoke({"radial", "--n", "1", "--l", "0", "--p", "3/2", "--path", "closed_n1"}).status == kExitOk);
  CHECK(invoke({"radial", "--n", "2", "--l", "0", "--p", "2", "--path", "closed_n1"}).status == kExitDomain);
}

TEST_CASE("verify command") {
  const Outcome ok = invoke({"verify", "--suite", "angular,uncertainty"});
  CHECK(ok.status == kExitOk);
  const Json doc = Json::parse(ok.out);
  for (const Json& r : doc["results"]) CHECK(r["passed"] == true);

  // the odd-2p comparison of the N_{1,l} closed form fails honestly
  const Outcome radial = invoke({"verify", "--suite", "radial", "--format", "csv"});
  CHECK(radial.status == kExitVerificationFailed);
  CHECK(radial.out.find("closed_n1l_odd_2p,false") != std::string::npos);
  CHECK(radial.out.find("closed_n1l_even_2p,true") != std::string::npos);

  CHECK(invoke({"verify", "--suite", "nonsense"}).status == kExitUsage);

  ::setenv("OSCENT_PRECISION", "10", 1);
  const Json scaled = Json::parse(invoke({"verify", "--suite", "uncertainty"}).out);
  ::unsetenv("OSCENT_PRECISION");
  CHECK(std::fabs(scaled["results"][0]["tolerance"].get<double>() - 1e-8) < 1e-20);
}
