#pragma once

#include <iosfwd>

namespace phasepotts::cli {

// Entry point of the `phasepotts` tool: gen, solve, oracle, bench, stats.
// Returns the process exit code; 0 on success.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace phasepotts::cli
