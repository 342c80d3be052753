#pragma once

namespace isoptica {

/// Command-line entry point (subcommands `render` and `validate`).
/// Returns the process exit status.
int run_cli(int argc, const char* const* argv);

}  // namespace isoptica
