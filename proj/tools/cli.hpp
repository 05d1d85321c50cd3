#pragma once

#include <iosfwd>

namespace localconst {

/// Entry point shared by the executable and the tests. Returns the process exit code:
/// 0 pass, 1 verification failure, 2 usage or parse error, 3 precision exhaustion.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace localconst
