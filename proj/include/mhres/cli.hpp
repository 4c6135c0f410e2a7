#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mhres {

enum ExitCode : int {
  kOk = 0,
  kInvalidData = 1,
  kNotDeterminantal = 2,
  kInternalFailure = 3,
};

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// strict "3,-1" parsing; throws InvalidData
std::vector<int> parse_int_list(const std::string& text);

}  // namespace mhres
