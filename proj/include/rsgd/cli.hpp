#pragma once

namespace rsgd {

// Entry point of the experiment runner (the `rsgd` binary is a thin
// wrapper). Exit codes: 0 success, 1 runtime failure, 2 usage/config error.
int cli_main(int argc, const char* const* argv);

}  // namespace rsgd
