#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gdwn/game.hpp"

namespace gdwn::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceError = 3,
};

/// Entry point used by main() and by the tests. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0,1" or "(0,1)" tokens.
GameSpec parse_pairs(const std::vector<std::string>& tokens);

struct GeneratedTable {
  std::string name;  // golden file stem
  std::string content;
};

/// Every reference table rendered from the library, in a fixed order.
std::vector<GeneratedTable> generate_tables();

/// Minimal unified diff of two texts; empty when equal.
std::string unified_diff(const std::string& expected, const std::string& actual, const std::string& expected_name,
                         const std::string& actual_name);

/// One verification suite by name; prints PASS/FAIL lines and returns the exit code.
struct VerifyOptions {
  std::string suite;
  std::vector<std::string> pairs;
  Int n = -1;
  Int s = 3;
  Int max_p = 40;
  Int max_pq = 300;
  Int length = 500;
  Int maxlen = 12;
  Int window = 2000;
  bool include_single_pair = false;
};

int run_verify(const VerifyOptions& options, std::ostream& out);

}  // namespace gdwn::cli
