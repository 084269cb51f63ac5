/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace exactreal::cli {

enum ExitCode : int { kOk = 0, kNoResult = 1, kUsage = 2 };

/// Flag values are kept as text; run_command parses them so that bad
/// numbers are reported as usage errors.
struct Command {
  std::string name;
  std::optional<std::string> spec_file;
  std::optional<std::string> spec_text;
  std::optional<std::string> x;
  std::optional<std::string> y;
  std::optional<std::string> accuracy;
  std::optional<std::uint64_t> fuel;
  std::optional<std::uint64_t> max_index;
  std::uint64_t seed = 0;
  std::uint64_t n = 1;
  std::string construction = "roundtrip";
  std::optional<std::string> relation;
  std::uint64_t bound = 20;
};

int run_command(const Command& cmd, std::ostream& out, std::ostream& err);

/// Full command line (args[0] is the program name) to exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exactreal::cli
