#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsp {

// Runs one `dsp` command. Exit codes: 0 success, 1 negative result, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace dsp
