#pragma once

namespace wps {

// Subcommand driver. Machine-readable JSON goes to stdout; --verbose summaries
// to stderr. Returns 0 for any completed analysis (Inconclusive included),
// 1 for input errors, 2 for internal assertion failures.
int cli_main(int argc, char** argv);

} // namespace wps
