#ifndef FINCOV_CLI_HPP
#define FINCOV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fincov::cli {

/// Bundled declarations (the example spaces E1..E7 and the two-point
/// non-discrete sober topology "Sierpinski") available to every command.
std::string builtin_document_text();

/// Runs one command line. Exit code 0 on success, 1 when a checked property
/// or suite fails, 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fincov::cli

#endif
