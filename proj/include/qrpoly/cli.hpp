#pragma once

namespace qrpoly {

/// Command-line entry point. Subcommands: polygon, dual, prism, dual-prism,
/// tiling, group-check. Exit codes: 0 success, 1 validation failure, 2 usage
/// error. Diagnostics go to stderr, data to --out or stdout.
int run(int argc, const char* const* argv);

}  // namespace qrpoly
