#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aqm/diagnostics.hpp"
#include "aqm/model.hpp"
#include "aqm/node_id.hpp"
#include "aqm/result.hpp"

namespace aqm::req {

struct Stakeholder {
  std::string id;
  std::string label;
  std::vector<NodeId> activities;  // tops of the subtrees this stakeholder performs

  bool operator==(const Stakeholder&) const = default;
};

/// Explicit total order over the stakeholders' activities, most important
/// first. Activities at positions >= cutoff default to don't-care.
struct ActivityRanking {
  std::vector<NodeId> ordered;
  std::size_t cutoff = 0;

  bool operator==(const ActivityRanking&) const = default;

  [[nodiscard]] bool contains(const NodeId& activity) const;
  [[nodiscard]] bool default_dont_care(const NodeId& activity) const;
};

/// Either a list of rating strings or the distinguished don't-care value;
/// never both.
struct QualitativeRequirement {
  NodeId activity;
  bool dont_care = false;
  std::vector<std::string> ratings;

  bool operator==(const QualitativeRequirement&) const = default;
};

struct RefinedRequirement {
  NodeId activity;
  NodeId entity;
  std::string attribute;
  ImpactDirection direction = ImpactDirection::positive;
  std::string statement;

  bool operator==(const RefinedRequirement&) const = default;
};

enum class Comparator { le, ge, lt, gt, eq, within_abs };

[[nodiscard]] std::string_view to_string(Comparator c);
[[nodiscard]] std::optional<Comparator> comparator_from_string(std::string_view s);

/// Fact-level (entity + attribute set) or activity-level (activity set) scope.
struct RequirementScope {
  NodeId activity;  // engaged for activity-level scope
  NodeId entity;    // engaged together with attribute for fact-level scope
  std::string attribute;

  [[nodiscard]] bool is_fact_level() const { return !entity.empty(); }
  [[nodiscard]] std::string str() const;

  static RequirementScope fact(NodeId entity, std::string attribute);
  static RequirementScope for_activity(NodeId activity);

  bool operator==(const RequirementScope&) const = default;
};

/// Numeric form: metric + comparator + threshold (+ nominal for within_abs).
/// Prose form: `constraint` text only, for demands that have no numeric
/// decomposition; those evaluate as manual_only.
struct QuantifiedRequirement {
  RequirementScope scope;
  std::optional<std::string> metric;
  std::optional<Comparator> comparator;
  double threshold = 0.0;
  double nominal = 0.0;  // within_abs compares |value - nominal|
  std::string unit;
  std::optional<std::string> constraint;

  [[nodiscard]] bool is_prose() const { return constraint.has_value(); }

  bool operator==(const QuantifiedRequirement&) const = default;
};

/// Accumulates the five pipeline steps' outputs against one named model.
struct RequirementsDocument {
  std::string model_name;
  std::vector<Stakeholder> stakeholders;
  ActivityRanking ranking;
  std::vector<QualitativeRequirement> qualitative;
  std::vector<RefinedRequirement> refined;
  std::vector<QuantifiedRequirement> quantified;

  bool operator==(const RequirementsDocument&) const = default;

  [[nodiscard]] const QualitativeRequirement* qualitative_for(const NodeId& activity) const;
};

/// Step 1: union of the stakeholders' declared activity roots, deduplicated,
/// in first-mention order.
[[nodiscard]] Result<std::vector<NodeId>> derive_activities(
    const QualityModel& model, const std::vector<Stakeholder>& stakeholders);

/// Step 2: validates that `ordering` is a permutation of `activities` and
/// that the cutoff is in range.
[[nodiscard]] Result<ActivityRanking> rank_activities(const std::vector<NodeId>& activities,
                                                      const std::vector<NodeId>& ordering,
                                                      std::size_t cutoff);

struct DontCare {};

/// Step 3: returns a new document with the targeted activity's qualitative
/// entry replaced (or inserted, keeping entries in ranking order); every
/// other entry is untouched.
[[nodiscard]] Result<RequirementsDocument> set_qualitative(const RequirementsDocument& doc,
                                                           const NodeId& activity,
                                                           std::vector<std::string> ratings);
[[nodiscard]] Result<RequirementsDocument> set_qualitative(const RequirementsDocument& doc,
                                                           const NodeId& activity, DontCare);

/// Step 4: follows the impacts backwards. Returns every impact whose target
/// is `activity` or one of its descendants, in model declaration order, each
/// with a generated requirement statement.
[[nodiscard]] Result<std::vector<RefinedRequirement>> refine(const QualityModel& model,
                                                             const NodeId& activity);

/// Step 5: appends one quantified requirement. Fact-level scope requires the
/// fact to exist; the numeric form additionally requires the fact to declare
/// the metric ("fact_not_quantifiable" otherwise) with a matching unit.
[[nodiscard]] Result<RequirementsDocument> quantify(const RequirementsDocument& doc,
                                                    const QualityModel& model,
                                                    const QuantifiedRequirement& requirement);

/// Checks every document invariant against the model. Codes emitted:
///   model_name_mismatch, duplicate_stakeholder, dangling_stakeholder_activity,
///   dangling_ranked_activity, ranking_not_permutation, cutoff_out_of_range,
///   qualitative_not_ranked, qualitative_conflict,
///   unknown_refined_impact, dangling_quantified_fact,
///   dangling_quantified_activity, fact_not_quantifiable, unit_mismatch,
///   quantified_conflict
///
/// An empty ranking (ordered=[], cutoff=0) is a not-yet-ranked document and
/// is legal; the permutation check applies once a ranking exists.
[[nodiscard]] ValidationResult validate_document(const QualityModel& model,
                                                 const RequirementsDocument& doc);

}  // namespace aqm::req
