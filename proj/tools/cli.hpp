#pragma once

#include <string>
#include <vector>

#include "json_io.hpp"

namespace newmac {

/// Outcome of one CLI invocation. status maps directly to the process exit
/// code: 0 ok, 1 violated (--assert with a failed check), 2 input error,
/// 3 hypothesis error.
struct CommandResult {
  int status = 0;
  json payload;
  std::string text;
  bool json_mode = false;
};

/// Dispatches one command line (without the program name). Never throws;
/// errors are folded into status/payload/text.
CommandResult run(const std::vector<std::string>& args);

} // namespace newmac
