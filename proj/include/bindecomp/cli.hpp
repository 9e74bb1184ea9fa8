#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bindecomp::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kUnsupported = 3,
  kOverflow = 4,
  kInternal = 5,
};

struct RunConfig {
  std::string command;
  /// Input file; stdin when empty and no inline ideal is given.
  std::string path;
  std::optional<std::string> ring;
  std::optional<std::string> ideal;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool verify = false;
  std::string order = "degrevlex";
  // witness-bench
  std::string family = "chain";
  std::int64_t size = 10000;
  std::int64_t seeds = 21;
  bool exhaustive = true;
};

const std::vector<std::string>& commands();

int run(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Parses argv-style arguments (without the program name) and runs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bindecomp::cli
