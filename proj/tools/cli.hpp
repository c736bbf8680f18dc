#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "latpack/verify.hpp"

namespace latpack::cli {

enum ExitStatus : int { kPass = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Outcome of one subcommand. Field names are the keys of the JSON report.
struct RunReport {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::size_t matrix_count = 0;
  std::size_t distinct_lines = 0;
  std::size_t expected_lines = 0;
  std::string verdict;  // "pass", "fail" or "unverified"
  double elapsed_ms = 0.0;
  std::map<std::string, bool> checks;
  std::vector<Violation> violations;
  std::vector<SymmetryReport> symmetry;  // classify only
};

std::string to_json(const RunReport& r);
std::string to_text(const RunReport& r);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Corpora written with `--out -` go to `out`, in which case the
/// report goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latpack::cli
