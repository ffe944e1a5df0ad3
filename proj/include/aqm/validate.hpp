#pragma once

#include "aqm/diagnostics.hpp"
#include "aqm/model.hpp"

namespace aqm {

/// Checks every structural invariant of a candidate model and returns all
/// violations found. Pure and idempotent; malformed input yields diagnostics,
/// never a failure. An empty diagnostic list means the model is valid.
///
/// Codes emitted:
///   bad_segment, bad_child_path, duplicate_path,
///   duplicate_attribute, duplicate_metric,
///   dangling_fact_entity, unknown_attribute, duplicate_fact,
///   dangling_impact_entity, dangling_impact_activity, unknown_impact_fact,
///   duplicate_impact
[[nodiscard]] ValidationResult validate_model(const QualityModel& model);

}  // namespace aqm
