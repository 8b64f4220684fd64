#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "hrcap/generators.hpp"

namespace hrcap {

enum class Subcommand { kSolve, kVerify, kGenRandom, kReduceSetCover, kReduceVertexCover };

// Exit codes of every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;  // precondition or verification failure
inline constexpr int kExitInput = 2;      // parse or validation error
inline constexpr int kExitLimit = 3;      // oracle search space too large

struct RunConfig {
  Subcommand subcommand = Subcommand::kSolve;
  // minmax, psum, lp, twocost, oracle-minsum, oracle-minmax
  std::string algorithm = "minmax";
  std::string input;     // instance, set cover or graph file
  std::string solution;  // verify only
  std::string output;    // empty: the out stream
  std::string format = "json";  // json | text
  bool trace = false;
  std::int64_t limit = 10'000'000;
  int workers = 1;
  std::optional<int> k;
  std::string eps = "1/2";
  RandomParams random;
};

// Runs one subcommand. Documents go to config.output or `out`, diagnostics to
// `err`. Returns one of the exit codes above.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int run_solve(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hrcap
