#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace eslab::cli {

/// Runs one CLI invocation. args excludes the program name; "-" as a file
/// argument reads from `in`. Exit codes: 0 success / property holds,
/// 1 property fails (verify, cycles), 2 usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace eslab::cli
