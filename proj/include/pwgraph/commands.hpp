#pragma once

#include <iosfwd>
#include <string>

#include "pwgraph/io.hpp"

namespace pwg {

/// Parses argv into a RunConfig. The special command `replay FILE` loads the
/// config stored in FILE's header. Throws Error(Parse) on bad usage; returns
/// a config with an empty command when only help was requested.
RunConfig parse_command_line(int argc, const char* const* argv, std::ostream& out);

/// Runs one command. Writes the primary artifact to cfg.out (atomically), or
/// to `out` when cfg.out is empty or "-". Human-readable reports go to `out`.
void execute(const RunConfig& cfg, std::ostream& out);

/// Full CLI: returns the process exit code (0 ok, 2 input, 3 precondition,
/// 4 numerical).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pwg
