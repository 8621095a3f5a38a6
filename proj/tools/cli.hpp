#ifndef APOLAR_TOOLS_CLI_HPP
#define APOLAR_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace apolar::tools {

enum ExitCode { Success = 0, DomainFailure = 1, UsageFailure = 2 };

/// Runs one command line (without the program name) and writes the report to out.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apolar::tools

#endif
