#pragma once

#include <string>
#include <vector>

#include "kf/error.hpp"

namespace kf::cli {

struct RunResult {
  int exit_code = 0;
  std::string out;  // report, text or JSON
  std::string err;  // diagnostics; a JSON {"error": ...} object on failure
};

// args excludes the program name. Exit 0 ok/true, 1 verified-false or declined, 2 invalid input.
RunResult run(const std::vector<std::string>& args);

int exit_code_for(Errc c);

}  // namespace kf::cli
