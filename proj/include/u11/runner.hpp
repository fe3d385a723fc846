#pragma once

// Command dispatch shared by the CLI binary and the tests.  A SessionConfig
// carries every flag, run() produces a Report, and cli_main() adds argument
// parsing plus exit-code mapping, so the whole pipeline can be driven through
// in-memory streams.
//
// Exit codes: 0 ok, 1 violations found, 2 usage, 3 domain error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "u11/arith.hpp"
#include "u11/json_io.hpp"

namespace u11::runner {

using arith::i64;

struct SessionConfig {
  i64 p = 3;
  i64 f = 1;
  i64 m = 1;
  std::optional<arith::Coeffs> modulus;  // auto (lex-smallest) when absent
  std::string output = "json";           // "json" | "text"
  std::uint64_t seed = 1;

  // Command arguments; each command reads the ones it documents.
  std::optional<i64> r;
  std::optional<i64> k;
  std::optional<i64> n;
  std::optional<i64> a;
  std::optional<i64> b;
  std::optional<arith::Coeffs> lambda_coeffs;  // little-endian over F_p
  std::optional<i64> lambda_index;             // 1-based nonzero lex index
  std::optional<std::string> shape;            // "t" | "t'" | "w"

  // Verification-suite bounds; empty lists select per-suite defaults.
  std::vector<i64> p_list;
  std::vector<i64> n_list;
  i64 samples = 200;
};

struct Report {
  std::string command;
  jsonio::json config;  // resolved echo, schema-stable across commands
  jsonio::json results;
  jsonio::json violations = jsonio::json::array();
  double elapsed_seconds = 0.0;  // stderr only, never serialized
};

// Serialized payloads exclude timing, so reports are byte-identical across
// repeated runs with the same (config, seed).
jsonio::json report_json(const Report& rep);
std::string report_text(const Report& rep);

// command is one of: classify | packet | correspond | param-equiv | generic |
// orientation | ftsd | shape | polarise | defring | "verify <suite>".
// Unknown commands raise UsageError; precondition failures raise the library's
// typed errors.
Report run(const std::string& command, const SessionConfig& cfg);

// name in {arith, reps, galois, kisin, correspondence, all}; "all" runs the
// five suites on independent threads and merges sections in canonical
// (alphabetical) order.
Report verify_suite(const std::string& name, const SessionConfig& cfg);

// 0 when the report carries no violations, 1 otherwise.
int exit_code_for(const Report& rep);

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace u11::runner
