#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nichols::cli {

// Version tag written into every JSON document.
inline constexpr const char* kSchema = "nichols-cli/1";

// Runs the tool on args (without the program name). Returns the exit code:
// 0 success, 1 negative verdict, 2 usage or input error, 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nichols::cli
