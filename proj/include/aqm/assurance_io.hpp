#pragma once

#include <string>

#include <json.hpp>

#include "aqm/assurance.hpp"
#include "aqm/parse_error.hpp"
#include "aqm/result.hpp"

namespace aqm::io {

/// Strict reader for `.metrics.json`.
[[nodiscard]] Result<qa::MetricReport, ParseError> parse_metric_report(const std::string& text);

/// Canonical form, same rules as serialize_model.
[[nodiscard]] std::string serialize_metric_report(const qa::MetricReport& report);

/// Canonical JSON renderings of the generated QA artifacts, for `--format
/// json` output and scripting.
[[nodiscard]] nlohmann::json to_json(const Diagnostic& diagnostic);
[[nodiscard]] nlohmann::json to_json(const qa::GuidelineSet& set);
[[nodiscard]] nlohmann::json to_json(const qa::ChecklistResult& result);
[[nodiscard]] nlohmann::json to_json(const qa::ConformanceReport& report);
[[nodiscard]] nlohmann::json to_json(const qa::TraceabilityReport& report);

}  // namespace aqm::io
