#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ditkin/element.hpp"
#include "ditkin/weights.hpp"

namespace ditkin::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ReproCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Reproduces the dyadic counterexample numbers against the given weights.
std::vector<ReproCheck> repro_checks(const WeightFamily& weights, const EvalOptions& options);

}  // namespace ditkin::cli
