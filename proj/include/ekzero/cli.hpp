#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ekzero {

// Full command dispatch. Returns 0 on success, 2 on validation/usage errors,
// 3 on numerical failure. The stream overload exists so tests can capture
// output without spawning processes.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace ekzero
