#ifndef FINCOV_SUITES_HPP
#define FINCOV_SUITES_HPP

#include <string>
#include <vector>

#include "fincov/enumeration.hpp"

namespace fincov {

struct SuiteFailure {
  std::string witness;  // offending structure in DSL syntax
  std::string note;
};

/// Outcome of one named verification suite. Failures empty means pass.
/// Reports are deterministic: rerunning a suite yields identical content.
struct SuiteResult {
  std::string name;
  long cases = 0;
  std::vector<SuiteFailure> failures;
  std::vector<std::string> notes;  // coverage list, hypothesis counts, degenerate tags

  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();
SuiteResult verify_suite(const std::string& name);  // throws UnknownSuite

/// One verdict line "SUITE <name> PASS|FAIL <cases> <failures>" followed by
/// notes and serialized witnesses.
std::string format_suite(const SuiteResult& result);

/// Which verified statements each suite covers, for the coverage assertion:
/// every statement appears in exactly one suite.
const std::vector<std::pair<std::string, std::string>>& suite_coverage();

}  // namespace fincov

#endif
