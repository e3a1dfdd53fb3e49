#include <iostream>

#include "grt_tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  const auto result = grt::cli::run(args);
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics;
  std::cout << result.output();
  return result.status;
}
