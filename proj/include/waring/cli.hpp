#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace waring::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,       // verification failed or internal error
  kParseError = 2,    // bad command line, polynomial text or JSON
  kPrecondition = 3,  // mathematical precondition does not hold
  kBudget = 4,        // search budget exhausted; heuristic result printed
};

/// Runs the tool on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ExampleOutcome {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Names of the worked-example reproduction cases, sorted.
std::vector<std::string> worked_example_names();

/// Runs every worked example (on up to `jobs` threads); results sorted by name.
std::vector<ExampleOutcome> run_worked_examples(int jobs = 1);

}  // namespace waring::cli
