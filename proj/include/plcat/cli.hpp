#ifndef PLCAT_CLI_HPP
#define PLCAT_CLI_HPP

#include <string>
#include <vector>

namespace plcat::cli {

// Runs one CLI invocation (args without the program name). Machine-readable
// JSON goes to --out (or stdout); human summaries and errors go to stderr.
// Exit codes: 0 positive/ok, 1 negative verdict or invalid certificate,
// 2 input error, 3 gadget contract violation.
int run(const std::vector<std::string>& args);

}  // namespace plcat::cli

#endif
