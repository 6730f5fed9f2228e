#pragma once

#include <ostream>

namespace mhdb {

/// Command-line driver. Exit status: 0 success, 1 blow-up or failed check,
/// 2 configuration or usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mhdb
