#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hurstkit::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kNumericError = 3 };

// Subcommands: fetch, measures, estimate, rolling, synth, bench-table1, report.
// Errors are reported on `err` as one JSON object per line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience for tests: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurstkit::cli
