// Runs the verification suite as a standalone binary for the test harness.

#include <cstring>
#include <iostream>
#include <string>

#include "dichroma/selftest.hpp"

int main(int argc, char** argv) {
  dichroma::SelftestOptions options;
  options.keep_files = true;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto next = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << "missing value for " << arg << "\n";
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--cli")
      options.cli_path = next();
    else if (arg == "--work-dir")
      options.work_dir = next();
    else if (arg == "--seed")
      options.seed = std::stoull(next());
    else if (arg == "--jobs")
      options.jobs = std::stoi(next());
    else if (arg == "--criterion")
      options.only = std::stoi(next());
    else {
      std::cerr << "unknown argument " << arg << "\n";
      return 2;
    }
  }
  if (options.work_dir.empty()) options.work_dir = "selftest-work";
  return dichroma::run_selftest(options, std::cout) == 0 ? 0 : 1;
}
