#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace affbgg {

/// Routes a command line to the module operations. Exit code 0 on success,
/// 2 on input errors (including unknown commands), 3 on verification
/// failures. Output is byte-deterministic for a fixed configuration.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affbgg
