#include "stringy/report.hpp"

#include <utility>

namespace stringy {

Report make_report(std::string name, Rat lhs, Rat rhs) {
  Report r;
  r.name = std::move(name);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

std::string summary_line(const Report& report) {
  if (report.passed()) {
    return report.name + ": " + report.lhs.str() + " = " + report.rhs.str() + " [pass]";
  }
  return report.name + ": " + report.lhs.str() + " != " + report.rhs.str() + " (residual " +
         report.residual().str() + ") [FAIL]";
}

}  // namespace stringy
