#ifndef MOAPPROX_CLI_HPP
#define MOAPPROX_CLI_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace moapprox {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCertificateFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable overriding the default work budget of every solver.
inline constexpr const char* kBudgetEnv = "MOAPPROX_BUDGET";

/**
 * A run report. `machine` lines are stable key=value pairs (no timings, no
 * paths); `human` rows may contain anything, including wall time.
 */
struct RunReport {
  std::vector<std::pair<std::string, std::string>> machine;
  std::vector<std::pair<std::string, std::string>> human;

  void put(const std::string& key, const std::string& value) { machine.emplace_back(key, value); }
  void note(const std::string& key, const std::string& value) { human.emplace_back(key, value); }
  void print(std::ostream& out) const;
};

/// Runs one CLI invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lines between "[machine]" and "[/machine]" of a printed report.
std::string machine_section(const std::string& report_text);

}  // namespace moapprox

#endif  // MOAPPROX_CLI_HPP
