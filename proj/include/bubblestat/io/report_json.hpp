#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "bubblestat/detector.hpp"

namespace bubblestat {

inline constexpr int kReportSchemaVersion = 1;

/**
 * @brief Detection report wire format.
 *
 * Dates are ISO-8601 strings; extremum z-scores and p-values carry four
 * decimals (rounded ties-to-even); everything else is a full-precision
 * double. Key order is alphabetical, so serialization is byte-stable.
 */
[[nodiscard]] nlohmann::json report_to_json(const DetectionReport& report);

/// Inverse of report_to_json. Throws ParseError on schema violations.
[[nodiscard]] DetectionReport report_from_json(const nlohmann::json& doc);

/// Pretty-printed document text (two-space indent, trailing newline).
[[nodiscard]] std::string render_json(const nlohmann::json& doc);

}  // namespace bubblestat
