// Serialization of suite reports. Scalars appear exactly as produced by the
// rational-function formatter; keys are emitted in a fixed order.
#pragma once

#include <string>

#include "qaffine/suites.hpp"

namespace qaffine {

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_format(const std::string& s);

/// with_time adds the wall time, which makes output run-dependent.
std::string emit(const SuiteReport& r, ReportFormat f, bool with_time = false);
/// Inverse of emit(.., Json, ..).
SuiteReport parse_json_report(const std::string& text);

}  // namespace qaffine
