#pragma once

#include <string>

#include <json.hpp>

#include "aqm/parse_error.hpp"
#include "aqm/requirements.hpp"
#include "aqm/result.hpp"

namespace aqm::io {

/// Strict reader for `.req.json`. Structural only: semantic checks against a
/// model happen in req::validate_document.
[[nodiscard]] Result<req::RequirementsDocument, ParseError> parse_requirements(
    const std::string& text);

/// Canonical form, same rules as serialize_model.
[[nodiscard]] std::string serialize_requirements(const req::RequirementsDocument& doc);

/// Single-entry renderings shared by the document writer and the report
/// formats that embed requirements.
[[nodiscard]] nlohmann::json to_json(const req::RefinedRequirement& entry);
[[nodiscard]] nlohmann::json to_json(const req::QuantifiedRequirement& entry);

}  // namespace aqm::io
