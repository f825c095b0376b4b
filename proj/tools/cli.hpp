#ifndef ANNCAT_TOOLS_CLI_HPP_
#define ANNCAT_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace anncat::cli {

  enum ExitCode : int {
    kPass             = 0,
    kSuiteFail        = 1,
    kInputError       = 2,
    kTheoremViolation = 3,
  };

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace anncat::cli

#endif  // ANNCAT_TOOLS_CLI_HPP_
