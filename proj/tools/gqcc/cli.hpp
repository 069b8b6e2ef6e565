#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gqcc/report.hpp"

namespace gqcc::cli {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// Fully resolved parameters of one invocation; echoed into every report.
struct RunConfig {
  std::string subcommand;
  std::string graph;
  std::string manifest;
  std::vector<std::string> z;        ///< spectral parameters as given ("p/q" or "p/q,r/s")
  std::vector<std::string> u;        ///< zeta arguments
  bool numeric = false;
  double tol = 1e-8;
  std::uint64_t seed = 1;
  std::string out;
  std::string csv;

  // spectrum
  bool vertex = false;
  // paths
  std::size_t depth = 1;
  std::size_t depth_cap = 6;
  bool count_only = false;
  // tree
  std::string base;
  std::size_t radius = 3;
  std::size_t ball_cap = 100000;
  std::string measure = "uniform";
  std::vector<std::string> checks;
  // qcc-check
  bool all_eigenvalues = false;
  bool formulas = false;
  int algebraic_degree_cap = 12;
  // zeta
  std::size_t random_u = 5;
  // generate
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t cyclomatic = 1;
  std::string corpus_dir;

  Json to_json() const;
};

/// Raised for parameter values that fail validation before any computation.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunResult {
  int exit_code = kExitPass;
  std::optional<Report> report;  ///< absent for subcommands that emit plain text
  std::string text;              ///< plain-text output (generate)
};

/// Executes a validated config. Throws UsageError for invalid parameter values.
RunResult run(const RunConfig& config);

/// Parses argv, runs, writes the report (stdout or --out, plus --csv), and returns
/// the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gqcc::cli
