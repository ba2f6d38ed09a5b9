#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cmlab::cli {

// Runs one cmlab command.  `args` excludes the program name.  Returns 0 on
// success, 1 when the library rejects the input, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmlab::cli
