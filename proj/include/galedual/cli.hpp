#pragma once

#include <string>

#include "galedual/desksolver.hpp"

namespace galedual::cli {

enum class Command { Dualize, Bound, Solve, Verify };
enum class Format { Json, Text };

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;
inline constexpr int kDiagnosticFailure = 2;
inline constexpr int kSolverFailure = 3;
inline constexpr int kMismatch = 4;

struct JobConfig {
  Command command = Command::Solve;
  std::string input_path;
  std::string output_path;  // empty: standard output
  Format format = Format::Json;
  SolverConfig solver;
  /// verify: also require every count to equal the Kouchnirenko bound.
  bool generic = false;
};

int cmd_dualize(const JobConfig& cfg);
int cmd_bound(const JobConfig& cfg);
int cmd_solve(const JobConfig& cfg);
int cmd_verify(const JobConfig& cfg);
int run(const JobConfig& cfg);

}  // namespace galedual::cli
