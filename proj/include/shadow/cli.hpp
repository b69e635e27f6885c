#pragma once

namespace shadow::cli {

// Full batch driver: parse argv, run the requested subcommand, write data
// files. Returns the process exit code: 0 success, 1 malformed input,
// 2 numerical abort, 3 I/O failure.
int run_main(int argc, const char* const* argv);

}  // namespace shadow::cli
