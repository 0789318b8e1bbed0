#pragma once

/*
 * Batch command-line interface over the whole pipeline: one subcommand per
 * stage, text output by default, JSON on request (record-shaped, matching
 * the sweep persistence schema).
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace tcone {

// Dispatches one subcommand (args exclude the program name) and writes to
// the given streams.  Returns the process exit code: 0 on success, 1 on
// domain errors (the message starts with the module error code), 2 on
// usage errors (the message names the offending flag or argument).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tcone
