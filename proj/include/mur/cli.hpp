#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mur::cli {

// Exit codes: 0 success, 1 verification failure, 2 input error, 3 semantic
// error (dimension/arity/complexity violations).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mur::cli
