/* SPDX-License-Identifier: Apache-2.0 */

#include <iostream>
#include <string>
#include <vector>

#include "exactreal/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return exactreal::cli::run_cli(args, std::cout, std::cerr);
}
