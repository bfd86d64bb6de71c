#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stringy/document.hpp"
#include "stringy/invariants.hpp"
#include "stringy/report.hpp"
#include "stringy/resolution.hpp"

namespace stringy {

enum class Status { kPass, kFail, kInvalid, kParseError };

/// Process exit code for a status: 0, 1, 3, 2 respectively.
int exit_code(Status status);
std::string to_string(Status status);

struct AssertionRecord {
  std::string name;
  Rat asserted;
  Rat computed;

  /// computed - asserted
  Rat residual() const { return computed - asserted; }
  bool passed() const { return computed == asserted; }
};

struct ReportDocument {
  std::string source;
  std::string kind;
  std::optional<std::string> name;
  Status status = Status::kPass;
  /// Parse error text for kParseError.
  std::string error;
  std::vector<Violation> violations;

  std::vector<Report> checks;
  /// Checks that did not run, with the reason.
  std::vector<std::string> skipped;
  std::map<std::string, Rat> invariants;
  /// Invariants that could not be computed, with the reason.
  std::map<std::string, std::string> absent;
  std::optional<HodgeTable> stringy_hodge;
  std::vector<AssertionRecord> assertions;
};

/// Runs every applicable computation and check on a parsed document.
ReportDocument compute(const InputDocument& doc, std::string source);

/// Parses then computes; parse and structural errors become kParseError
/// and kInvalid reports instead of exceptions.
ReportDocument compute_text(std::string_view text, std::string source);

std::string report_json(const ReportDocument& report);
std::string report_text(const ReportDocument& report);

}  // namespace stringy
