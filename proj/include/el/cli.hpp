#pragma once

#include <iosfwd>
#include <string>

#include "el/entry_locus.hpp"
#include "el/suite.hpp"

namespace el {

enum ExitCode : int { exit_pass = 0, exit_check_failed = 1, exit_usage = 2, exit_budget = 3 };

/// JSON text of a report; keys sorted, two-space indent. Timing fields are left out when
/// `timings` is false, which makes equal configurations produce byte-identical output.
std::string suite_report_json(const SuiteReport& rep, bool timings = true);
std::string entry_locus_report_json(const EntryLocusReport& rep, bool timings = true);

/// The `el` command line. Results go to `out` (and --out files), diagnostics to `err`.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace el
