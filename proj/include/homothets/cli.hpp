#pragma once

namespace homothets {

// Full command-line entry point, callable in-process by tests.
// Returns 0 on success, 2 on validation or usage failure, 3 when an exact
// search is requested past its cap.
int run_cli(int argc, const char* const* argv);

}  // namespace homothets
