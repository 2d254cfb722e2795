#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const newmac::CommandResult result = newmac::run(args);
  std::ostream& out = result.status >= 2 ? std::cerr : std::cout;
  if (result.json_mode)
    out << result.payload.dump(2) << "\n";
  else
    out << result.text << "\n";
  return result.status;
}
