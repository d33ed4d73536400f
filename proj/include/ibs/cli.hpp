#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ibs/types.hpp"

namespace ibs::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,     // malformed input, unknown suite or method, route not applicable
  exit_numeric = 2,   // domain violation or numerical failure
  exit_verify = 3,    // at least one verification entry failed
};

/// Parses "a", "a+bi", "a-bi", "bi", "i", "-i". Whitespace is not allowed.
std::optional<cplx> parse_complex(std::string_view text);

/// "a+bi" with 17 significant digits on both parts.
std::string format_complex(cplx z);

/// RFC 4180 quoting: fields containing a comma, quote or line break are
/// quoted, with embedded quotes doubled.
std::string csv_field(std::string_view field);

/// Runs the command line (without the program name). Data goes to out,
/// diagnostics to err; returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ibs::cli
