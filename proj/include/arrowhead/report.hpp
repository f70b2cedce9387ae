#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace arrowhead {

enum class CheckStatus { pass, fail, info, error };

const char* to_string(CheckStatus status) noexcept;

struct ReportEntry {
  std::string section;
  std::string key;
  std::variant<double, std::int64_t, bool, std::string> value;
  std::optional<double> tolerance;
  CheckStatus status = CheckStatus::info;
};

struct ReportSummary {
  int depth = 5;
  std::vector<ReportEntry> entries;
  bool had_error = false;  // a section aborted on a library error

  std::size_t count(CheckStatus status) const;
};

// Runs every check of the reproduction sweep at levels up to depth (>= 4).
// A section that throws records an error entry and the sweep continues.
ReportSummary build_report(int depth = 5);

std::string report_to_json(const ReportSummary& report);
std::string report_to_text(const ReportSummary& report);

}  // namespace arrowhead
