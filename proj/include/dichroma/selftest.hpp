#ifndef DICHROMA_SELFTEST_HPP
#define DICHROMA_SELFTEST_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace dichroma {

/// Configuration for the built-in verification suite.
struct SelftestOptions {
  std::string cli_path;   // binary used by the end-to-end criteria
  std::string work_dir;   // where emitted files go; created if missing
  std::uint64_t seed = 0xD1C40ULL;
  int jobs = 1;
  std::optional<int> only;  // run a single criterion
  bool keep_files = false;
};

/// Runs the verification criteria, printing one pass/fail line each.
/// Returns the number of failed criteria.
int run_selftest(const SelftestOptions& options, std::ostream& out);

}  // namespace dichroma

#endif
