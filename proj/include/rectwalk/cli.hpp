#ifndef RECTWALK_CLI_HPP
#define RECTWALK_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rectwalk::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string detail;  // summary on success, first counterexample on failure
};

struct SuiteOptions {
    int n = 6;
    int n_max = 14;  // range of the inequality suite
    int threads = 1;
    std::optional<std::string> factor;  // walk text overriding the stock factor patterns
};

/// Suites: roundtrip, distinctness, insertion, inequality, proportion.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);
const std::vector<std::string>& suite_names();

}  // namespace rectwalk::cli

#endif
