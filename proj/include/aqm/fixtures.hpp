#pragma once

#include "aqm/assurance.hpp"
#include "aqm/model.hpp"
#include "aqm/requirements.hpp"

namespace aqm::fixtures {

/// In-vehicle instrument cluster: driver and OEM stakeholders, a TICS
/// hardware/software entity tree, and the three worked impacts.
[[nodiscard]] QualityModel instrument_cluster_model();

/// Matching document skeleton: stakeholders only; ranking and the later
/// pipeline steps are left to the tool.
[[nodiscard]] req::RequirementsDocument instrument_cluster_requirements();

/// Sample tool report with a display-position measurement inside tolerance.
[[nodiscard]] qa::MetricReport display_position_report();

/// Source-code maintainability: developer stakeholder, maintenance activity
/// tree, code and organisation entities.
[[nodiscard]] QualityModel maintainability_model();

[[nodiscard]] req::RequirementsDocument maintainability_requirements();

}  // namespace aqm::fixtures
