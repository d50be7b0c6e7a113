#pragma once

#include <ostream>

namespace omplab {

/// Exit codes: 0 pass, 1 verdict failure, 2 usage or I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace omplab
