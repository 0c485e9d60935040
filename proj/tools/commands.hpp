#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace normgeom::app {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kViolation = 2, kInternalError = 3 };

struct RunConfig {
  std::string command;
  // Positional input file.
  std::string input;
  // JSON file or builtin name.
  std::string ball;
  std::string curve;
  int k = 3;
  std::string out_dir;
  bool svg = false;
  std::optional<double> rel_tol;
  std::uint64_t seed = 42;
  int n = 100;
  bool inject_fault = false;
};

// Runs one command. Reports go to `out`, JSON-line diagnostics to `err`.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_decompose(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_lhuilier(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_corpus(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace normgeom::app
