// Command-line frontend.  Exit codes: 0 success, 1 domain error, 2 usage error.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dzv {

/// `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct GoldenCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Reproduces the published tables and examples.
std::vector<GoldenCheck> run_selftest();

}  // namespace dzv
