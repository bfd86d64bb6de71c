#pragma once

#include <map>
#include <string>
#include <vector>

#include "stringy/rational.hpp"

namespace stringy {

/// Outcome of one exact identity check. The verdict is a pure function of
/// the residual: a check passes iff lhs == rhs.
struct Report {
  std::string name;
  Rat lhs;
  Rat rhs;
  /// Auxiliary exact values worth surfacing (inferred Chern numbers, ...).
  std::map<std::string, Rat> extras;
  std::vector<std::string> notes;

  Rat residual() const { return lhs - rhs; }
  bool passed() const { return lhs == rhs; }
};

Report make_report(std::string name, Rat lhs, Rat rhs);

/// One line: "name: lhs = rhs [pass]" or "... != ... (residual r) [FAIL]".
std::string summary_line(const Report& report);

}  // namespace stringy
