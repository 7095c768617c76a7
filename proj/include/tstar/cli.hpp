#ifndef TSTAR_CLI_HPP
#define TSTAR_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tstar::cli {

struct Options {
  std::string command;  // check, tstar, cohomology, isometry, recognize, decompose, example, props
  std::vector<std::string> example;  // example family and argument
  std::optional<std::string> omega;
  std::optional<std::string> phi;
  std::optional<std::string> ideal;
  bool json = true;
  std::uint64_t seed = 0;
  int trials = 20;
  int max_dim = 64;
  bool allow_large = false;
};

struct Outcome {
  int exit_code = 0;
  std::string stdout_text;
  std::optional<std::string> document;  // DSL output, for -o or piping
};

/// Runs one subcommand on the text of the input file. Exit codes: 0 all
/// checks pass, 1 a mathematical check failed, 2 input error.
Outcome run(const Options& opts, const std::string& input);

}  // namespace tstar::cli

#endif  // TSTAR_CLI_HPP
