#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlat::cli {

// Exit codes: 0 success, 1 a verified property failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlat::cli
