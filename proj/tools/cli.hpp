#ifndef SURJTOP_TOOLS_CLI_HPP
#define SURJTOP_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace surjtop::cli {

  enum ExitCode : int {
    exit_ok         = 0,
    exit_usage      = 1,
    exit_invalid    = 2,  // parse or validation error
    exit_hypothesis = 3,  // classify on a presentation outside the hypothesis
    exit_internal   = 4,  // a self-check failed
  };

  enum class Command { parse, h2, systems, classify, family, realize, sweep };
  enum class Format { json, table };

  struct CliConfig {
    Command     command = Command::parse;
    std::string input;  // inline "< ... >" text or a file path
    std::string alpha;
    Format      format   = Format::table;
    bool        paranoid = false;
    std::string out_path;
    std::string family;
    // Family parameters (single values or "lo..hi" ranges for sweep), keyed
    // by name: k l p q j n a b c.
    std::vector<std::pair<std::string, std::string>> params;
  };

  struct Environment {
    bool                       stdout_is_terminal = false;
    std::optional<std::string> format_variable;  // SURJTOP_FORMAT
  };

  // Parses arguments (program name excluded) and runs the command. Rendered
  // output goes to `out` in one piece; diagnostics go to `err`.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err,
          Environment const&              env);

  int run(CliConfig const& config, std::ostream& out, std::ostream& err);

}  // namespace surjtop::cli

#endif  // SURJTOP_TOOLS_CLI_HPP
