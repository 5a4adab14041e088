#pragma once

#include "ospd/cli/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ospd::cli {

enum ExitCode : int { kOk = 0, kMathFailure = 1, kUsageError = 2 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommandResult {
  json doc;
  int exit_code = kOk;
};

struct VerifyParams {
  std::size_t k = 0, n = 0;
  std::uint64_t seed = 0;
  bool timing = false;
};
CommandResult cmd_verify(const VerifyParams& p);

struct ScreenParams {
  std::size_t m = 0, n = 0;
};
CommandResult cmd_screen(const ScreenParams& p);

struct BuildParams {
  std::string algebra;  // gl, sl, osp, o, sp, example-s, example-k, example-l
  std::size_t m = 0, n = 0, k = 0;
  std::string form = "identity";
};
superalg::Superalgebra build_named(const BuildParams& p);
CommandResult cmd_build(const BuildParams& p);

struct ModulesParams {
  BuildParams algebra;
  std::uint64_t seed = 0;
};
CommandResult cmd_modules(const ModulesParams& p);

struct SweepParams {
  std::size_t k_max = 0, n_max = 0;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  std::optional<std::string> out_dir;  // per-point files and summary.json
  bool timing = false;
};
CommandResult cmd_sweep(const SweepParams& p);

// Seed from OSPDECOMP_SEED, or 0.
std::uint64_t default_seed();

// Parses arguments (args[0] is the program name), runs the command and
// returns the process exit code. JSON goes to `out` with --json, to the --out
// path when given, and a short text summary goes to `out` otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ospd::cli
