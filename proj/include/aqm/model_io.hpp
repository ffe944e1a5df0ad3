#pragma once

#include <string>

#include <json.hpp>

#include "aqm/model.hpp"
#include "aqm/parse_error.hpp"
#include "aqm/result.hpp"

namespace aqm::io {

/// Strict reader for `.model.json`: unknown fields and wrong kinds are
/// errors, and the returned model always passes validate_model.
[[nodiscard]] Result<QualityModel, ParseError> parse_model(const std::string& text);

/// Structural read without the validate_model gate, for tools that render
/// the full diagnostic list themselves.
[[nodiscard]] Result<QualityModel, ParseError> parse_model_structure(const std::string& text);

/// Canonical form: keys sorted, arrays in declaration order, two-space
/// indentation, UTF-8, trailing newline. Equal models yield equal bytes.
[[nodiscard]] std::string serialize_model(const QualityModel& model);

/// Fact-by-activity CSV: rows are facts rendered "entity | attribute",
/// columns are leaf activities in pre-order, cells are "+", "-", or empty.
[[nodiscard]] std::string export_matrix(const QualityModel& model);

/// The same matrix as JSON: {"columns": [...], "rows": [{"fact", "cells"}]}.
[[nodiscard]] nlohmann::json matrix_json(const QualityModel& model);

}  // namespace aqm::io
