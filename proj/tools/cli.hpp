#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fracvar/grid.hpp"

namespace fracvar::cli {

enum ExitCode : int {
  kOk = 0,
  kThresholdFailed = 1,
  kUsageError = 2,
  kDomainError = 3,
};

enum class Command { kDeriv, kSolveExample, kCheckEquivalence, kConverge };

struct RunConfig {
  Command command = Command::kDeriv;
  double alpha = 0.5;
  double beta = 0.75;
  std::size_t n = 64;
  double a = 0.0;
  double b = 1.0;
  std::string function = "t";
  std::string kind;
  std::vector<std::size_t> n_list;
  std::string trial = "exact";
  std::uint64_t seed = 7;
  double threshold = 1e-2;
  std::optional<std::string> output_path;
};

/// Degree-4 polynomial with coefficients drawn uniformly from [-1, 1].
SampledFn random_polynomial_trial(const Grid& grid, std::uint64_t seed);

/// Runs the command line (without the program name). CSV goes to out unless
/// --out is given; diagnostics go to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_deriv(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_solve_example(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_check_equivalence(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_converge(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fracvar::cli
