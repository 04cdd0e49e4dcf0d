#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "hankel/report.hpp"
#include "hankel/runner.hpp"

using namespace hankel;

namespace {

std::string run_to_string(const RunConfig& cfg, int* exit_code = nullptr) {
  std::ostringstream out;
  const int rc = run(cfg, out);
  if (exit_code) *exit_code = rc;
  return out.str();
}

}  // namespace

TEST_CASE("json values preserve insertion order and render doubles round-trip") {
  JsonValue obj = JsonValue::object();
  obj["zeta"] = 1;
  obj["alpha"] = 0.1;
  obj["nested"] = JsonValue::object();
  obj["nested"]["flag"] = true;
  JsonValue arr = JsonValue::array();
  arr.push_back(1024.0);
  arr.push_back("text");
  obj["list"] = std::move(arr);

  const std::string s = obj.dump();
  CHECK(s.find("\"zeta\"") < s.find("\"alpha\""));
  CHECK(s.find("\"alpha\"") < s.find("\"nested\""));
  CHECK(s.find("0.10000000000000001") != std::string::npos);  // 17 significant digits
  CHECK(s.find("1024") != std::string::npos);
  CHECK(s.find("true") != std::string::npos);
}

TEST_CASE("json strings are escaped and non-finite numbers quoted") {
  JsonValue obj = JsonValue::object();
  obj["text"] = std::string("a\"b\\c\n\t");
  obj["plus_inf"] = std::numeric_limits<double>::infinity();
  obj["minus_inf"] = -std::numeric_limits<double>::infinity();
  obj["undefined"] = std::nan("");
  const std::string s = obj.dump();
  CHECK(s.find("a\\\"b\\\\c\\n\\t") != std::string::npos);
  CHECK(s.find("\"inf\"") != std::string::npos);
  CHECK(s.find("\"-inf\"") != std::string::npos);
  CHECK(s.find("\"nan\"") != std::string::npos);
}

TEST_CASE("report renders text and csv with assertion outcomes") {
  Report rep;
  rep.command = "demo";
  rep.results["value"] = 3.5;
  rep.check("first, with a comma", true, 1.0, 1.0, 0.0);
  rep.check("second", false, 2.0, 3.0, 1e-9, "drifted");
  CHECK_FALSE(rep.all_passed());

  const std::string text = rep.to_text();
  CHECK(text.find("[PASS] first, with a comma") != std::string::npos);
  CHECK(text.find("[FAIL] second") != std::string::npos);
  CHECK(text.find("status: FAIL") != std::string::npos);

  const std::string csv = rep.to_csv();
  CHECK(csv.rfind("name,status,lhs,rhs,tolerance", 0) == 0);
  CHECK(csv.find("first; with a comma") != std::string::npos);  // commas sanitized
  CHECK(csv.find("fail") != std::string::npos);

  const std::string json = rep.to_json().dump();
  CHECK(json.find("\"command\": \"demo\"") != std::string::npos);
  CHECK(json.find("\"version\"") != std::string::npos);
}

TEST_CASE("run config validation") {
  RunConfig cfg;
  cfg.command = Command::scan;
  CHECK_NOTHROW(cfg.validate());
  cfg.grid_step = 0.06;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.grid_step = 0.05;
  cfg.samples = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.samples = 10;
  cfg.atoms = 65;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.atoms = 3;
  cfg.workers = 80;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.workers = 0;
  cfg.tolerance = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

  CHECK(parse_output_format("json") == OutputFormat::json);
  CHECK(parse_output_format("csv") == OutputFormat::csv);
  CHECK(parse_output_format("text") == OutputFormat::text);
  CHECK_THROWS_AS(parse_output_format("xml"), std::invalid_argument);
}

TEST_CASE("revert command inverts the half-plane kernel exactly") {
  RunConfig cfg;
  cfg.command = Command::revert;
  cfg.exact = true;
  cfg.coeffs = "2,3,4,5";
  int rc = 1;
  const std::string out = run_to_string(cfg, &rc);
  CHECK(rc == 0);
  // inverse of z/(1-z)^2 truncated: alternating Catalan numbers
  CHECK(out.find("\"A2\": \"-2\"") != std::string::npos);
  CHECK(out.find("\"A3\": \"5\"") != std::string::npos);
  CHECK(out.find("\"A4\": \"-14\"") != std::string::npos);
  CHECK(out.find("\"A5\": \"42\"") != std::string::npos);
}

TEST_CASE("revert command accepts rational literals and float mode") {
  RunConfig cfg;
  cfg.command = Command::revert;
  cfg.exact = true;
  cfg.coeffs = "0,0,1/3,0";
  int rc = 1;
  const std::string out = run_to_string(cfg, &rc);
  CHECK(rc == 0);
  CHECK(out.find("\"A4\": \"-1/3\"") != std::string::npos);
  CHECK(out.find("-1/9") != std::string::npos);  // inverse Hankel value detail

  cfg.exact = false;
  const std::string fl = run_to_string(cfg, &rc);
  CHECK(rc == 0);
  CHECK(fl.find("h3_inverse") != std::string::npos);

  cfg.coeffs = "1,2,3";
  CHECK_THROWS_AS(run_to_string(cfg), std::invalid_argument);
}

TEST_CASE("extremal command pins the witness") {
  RunConfig cfg;
  cfg.command = Command::extremal;
  cfg.exact = true;
  int rc = 1;
  const std::string out = run_to_string(cfg, &rc);
  CHECK(rc == 0);
  CHECK(out.find("\"a4\": \"1/3\"") != std::string::npos);
  CHECK(out.find("\"A4\": \"-1/3\"") != std::string::npos);
  CHECK(out.find("\"h3_of_inverse\": \"-1/9\"") != std::string::npos);
}

TEST_CASE("scan command emits a certificate and passes") {
  RunConfig cfg;
  cfg.command = Command::scan;
  cfg.grid_step = 0.05;
  int rc = 1;
  const std::string out = run_to_string(cfg, &rc);
  CHECK(rc == 0);
  CHECK(out.find("\"observed_max\": 1024") != std::string::npos);
  CHECK(out.find("\"sup_m\"") != std::string::npos);
  CHECK(out.find("\"induced_h3_bound\"") != std::string::npos);
}

TEST_CASE("sample command streams csv rows and reports through the exit code") {
  RunConfig cfg;
  cfg.command = Command::sample;
  cfg.samples = 50;
  cfg.seed = 7;
  cfg.atoms = 3;
  cfg.output_format = OutputFormat::csv;
  int rc = 1;
  const std::string out = run_to_string(cfg, &rc);
  CHECK(rc == 0);
  size_t lines = 0;
  for (char ch : out)
    if (ch == '\n') ++lines;
  CHECK(lines == 51);  // header + one row per draw
  CHECK(out.rfind("index,seed,w1,theta1,w2,theta2,w3,theta3,a2,a3,a4,a5", 0) == 0);

  cfg.output_format = OutputFormat::json;
  const std::string js = run_to_string(cfg, &rc);
  CHECK(rc == 0);
  CHECK(js.find("roots_of_unity_h3_direct") != std::string::npos);
  CHECK(js.find("\"direct_violations\": 0") != std::string::npos);
}

TEST_CASE("cases command surfaces the reading disagreements without failing") {
  RunConfig cfg;
  cfg.command = Command::cases;
  int rc = 1;
  const std::string out = run_to_string(cfg, &rc);
  CHECK(rc == 0);
  CHECK(out.find("reading_disagreements") != std::string::npos);
  CHECK(out.find("\"mismatch\": true") != std::string::npos);   // the flagged readings
  CHECK(out.find("\"overall_max\": 1024") != std::string::npos);
}

TEST_CASE("runs are deterministic end to end") {
  RunConfig cfg;
  cfg.command = Command::sample;
  cfg.samples = 25;
  cfg.seed = 13;
  cfg.output_format = OutputFormat::csv;
  const std::string a = run_to_string(cfg);
  const std::string b = run_to_string(cfg);
  CHECK(a == b);

  RunConfig sc;
  sc.command = Command::scan;
  sc.grid_step = 0.05;
  CHECK(run_to_string(sc) == run_to_string(sc));
}
