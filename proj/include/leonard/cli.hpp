#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace leonard::cli {

enum exit_code : int {
  ok = 0,
  malformed_input = 2,
  invalid_array = 3,
  inadmissible = 4,
  consistency_failure = 5,
};

enum class Command { validate, info, realize, ekr, bound, verify, d4 };

const char* to_string(Command c);

struct RunConfig {
  Command command = Command::validate;

  // Exactly one input source.
  std::optional<std::string> input_file;
  std::optional<std::string> family;  ///< dual-hahn | krawtchouk | q-racah
  std::optional<std::string> preset;  ///< johnson | hamming
  /// Family and preset values keyed by flag name without dashes ("s-star",
  /// "v", ...), kept as given on the command line.
  std::map<std::string, std::string> values;

  std::optional<int> t;
  std::optional<std::string> g;
  std::optional<std::string> output;
  std::optional<int> decimal;
};

/// Executes one command, writing JSON to `out` (or the configured file) and
/// diagnostics to `err`. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line into a RunConfig and runs it.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leonard::cli
