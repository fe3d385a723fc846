#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "u11/errors.hpp"
#include "u11/runner.hpp"

using namespace u11;
using runner::SessionConfig;

namespace {

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int rc = runner::cli_main(args, out, err);
  if (out_text) *out_text = out.str();
  return rc;
}

}  // namespace

TEST_CASE("cli: reports are byte-identical across repeated runs") {
  std::string a, b;
  REQUIRE(cli({"classify", "--p", "3", "--f", "1"}, &a) == 0);
  REQUIRE(cli({"classify", "--p", "3", "--f", "1"}, &b) == 0);
  CHECK(a == b);
  CHECK(a.find("\"count\": 20") != std::string::npos);

  std::string s1, s2;
  std::vector<std::string> shape_args = {"shape", "--shape", "w",          "--p",    "3",
                                         "--m",   "2",       "--modulus", "6,0,1",  "--seed", "11"};
  REQUIRE(cli(shape_args, &s1) == 0);
  REQUIRE(cli(shape_args, &s2) == 0);
  CHECK(s1 == s2);

  std::string v1, v2;
  std::vector<std::string> verify_args = {"verify", "kisin", "--p", "3", "--samples", "25",
                                          "--output", "text"};
  REQUIRE(cli(verify_args, &v1) == 0);
  REQUIRE(cli(verify_args, &v2) == 0);
  CHECK(v1 == v2);
}

TEST_CASE("cli: frozen correspondence example") {
  // correspond --p 3 --r 2 --k 1: parameter exponent 7, fiber [(0,.,0), (2,.,1)].
  SessionConfig cfg;
  cfg.p = 3;
  cfg.r = 2;
  cfg.k = 1;
  auto rep = runner::run("correspond", cfg);
  CHECK(rep.results["param"]["r"] == 7);
  REQUIRE(rep.results["fiber"].size() == 2);
  CHECK(rep.results["fiber"][0]["r"] == 0);
  CHECK(rep.results["fiber"][0]["k"] == 0);
  CHECK(rep.results["fiber"][1]["r"] == 2);
  CHECK(rep.results["fiber"][1]["k"] == 1);
  CHECK(rep.violations.empty());
}

TEST_CASE("cli: defring payloads") {
  std::string out;
  REQUIRE(cli({"defring", "--shape", "w"}, &out) == 0);
  CHECK(out.find("c11*c22 + p") != std::string::npos);
  REQUIRE(cli({"defring", "--shape", "t'"}, &out) == 0);
  CHECK(out.find("\"relations\": []") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
  std::string out;
  CHECK(cli({"classify", "--p", "5", "--f", "2"}, &out) == 0);
  CHECK(cli({}, &out) == 2);                          // missing subcommand
  CHECK(cli({"bogus"}, &out) == 2);                   // unknown command
  CHECK(cli({"verify", "nope"}, &out) == 2);          // unknown suite
  CHECK(cli({"packet", "--p", "3"}, &out) == 2);      // --r is required
  CHECK(cli({"shape", "--shape", "q"}, &out) == 2);   // bad shape value
  CHECK(cli({"classify", "--p", "4"}, &out) == 3);    // 4 is not prime

  CHECK(cli({"orientation", "--p", "5", "--a", "0", "--b", "0"}, &out) == 3);  // tied readings
  CHECK(out.find("\"type\": \"precondition\"") != std::string::npos);
  CHECK(cli({"generic", "--p", "2", "--r", "0"}, &out) == 3);  // parameter layer wants p odd
  CHECK(cli({"shape", "--shape", "w", "--p", "3", "--m", "2"}, &out) == 3);  // Z/9 unsolvable
  CHECK(out.find("\"type\": \"solvability\"") != std::string::npos);

  runner::Report rep;
  CHECK(runner::exit_code_for(rep) == 0);
  rep.violations.push_back({{"suite", "synthetic"}});
  CHECK(runner::exit_code_for(rep) == 1);
}

TEST_CASE("cli: verify suites are green end to end") {
  CHECK(cli({"verify", "galois", "--p", "5", "--n", "2"}) == 0);
  CHECK(cli({"verify", "correspondence", "--p", "3", "--f", "2"}) == 0);
  CHECK(cli({"verify", "arith", "--p", "3"}) == 0);
  CHECK(cli({"verify", "reps", "--p", "3"}) == 0);
  std::string out;
  REQUIRE(cli({"verify", "all", "--samples", "40"}, &out) == 0);
  CHECK(out.find("\"violations\": []") != std::string::npos);
}

TEST_CASE("cli: lambda entry forms agree") {
  // [1,2] over F_9 has big-endian rank 1*3 + 2 = 5 among the nonzero elements.
  std::string by_coeffs, by_index;
  REQUIRE(cli({"param-equiv", "--p", "3", "--f", "2", "--r", "5", "--lambda", "1,2"},
              &by_coeffs) == 0);
  REQUIRE(cli({"param-equiv", "--p", "3", "--f", "2", "--r", "5", "--lambda-index", "5"},
              &by_index) == 0);
  CHECK(by_coeffs == by_index);

  std::string out;
  CHECK(cli({"packet", "--p", "3", "--r", "1", "--lambda", "0"}, &out) == 3);  // zero lambda
  CHECK(cli({"packet", "--p", "3", "--r", "1", "--lambda", "1", "--lambda-index", "1"}, &out) ==
        2);  // mutually exclusive
  CHECK(cli({"packet", "--p", "3", "--r", "1", "--lambda", "1,,2"}, &out) == 2);
}

TEST_CASE("run: generic witness matches the parameter-layer example") {
  SessionConfig cfg;
  cfg.p = 5;
  cfg.r = 0;
  cfg.n = 1;
  auto rep = runner::run("generic", cfg);
  CHECK(rep.results["witness"]["w"] == "id");
  CHECK(rep.results["witness"]["a"] == -2);
  CHECK(rep.results["witness"]["b"] == -4);
}

TEST_CASE("run: unknown command raises a usage error") {
  SessionConfig cfg;
  CHECK_THROWS_AS(runner::run("sideways", cfg), UsageError);
  CHECK_THROWS_AS(runner::run("verify", cfg), UsageError);
  CHECK_THROWS_AS(runner::verify_suite("sideways", cfg), UsageError);
}

TEST_CASE("report: text mode is a projection of the same payload") {
  SessionConfig cfg;
  cfg.p = 3;
  cfg.a = 2;
  cfg.b = 2;
  auto rep = runner::run("ftsd", cfg);
  auto text = runner::report_text(rep);
  CHECK(text.find("command: ftsd") != std::string::npos);
  CHECK(text.find("ftsd: true") != std::string::npos);
  CHECK(text.find("exponents: [2,2]") != std::string::npos);
  // Same payload serialized as JSON.
  auto payload = runner::report_json(rep);
  CHECK(payload["results"]["ftsd"] == true);
}
