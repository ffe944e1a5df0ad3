#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aqm/node_id.hpp"
#include "aqm/result.hpp"

namespace aqm {

/// Whether a fact can be checked by a tool, by a tool plus human judgment,
/// or only by a human review.
enum class Assessability { automatic, semi_automatic, manual };

enum class ImpactDirection { positive, negative };

struct ActivityNode {
  NodeId id;  // full path; children extend it by exactly one segment
  std::string label;
  std::vector<ActivityNode> children;

  bool operator==(const ActivityNode&) const = default;
};

struct EntityNode {
  NodeId id;
  std::string label;
  std::vector<std::string> artifact_types;  // sorted, deduplicated on parse
  std::vector<EntityNode> children;

  bool operator==(const EntityNode&) const = default;
};

struct Attribute {
  std::string id;
  std::string description;

  bool operator==(const Attribute&) const = default;
};

struct Metric {
  std::string id;
  std::string unit;  // e.g. "degree", "person_hours", "count"
  std::string description;

  bool operator==(const Metric&) const = default;
};

/// An (entity, attribute) tuple: the unit that carries assessability and,
/// optionally, the metric that measures it.
struct Fact {
  NodeId entity;
  std::string attribute;
  Assessability assessability = Assessability::manual;
  std::optional<Metric> metric;

  bool operator==(const Fact&) const = default;
};

/// Signed relation from a fact to an activity: the fact eases (positive) or
/// hinders (negative) performing the activity.
struct Impact {
  NodeId entity;
  std::string attribute;
  NodeId activity;
  ImpactDirection direction = ImpactDirection::positive;
  std::string justification;

  bool operator==(const Impact&) const = default;
};

/// The two trees plus the attribute vocabulary, facts, and impacts.
/// A validated model is immutable; all operations construct new values.
struct QualityModel {
  std::string name;
  std::vector<ActivityNode> activities;  // forest
  std::vector<EntityNode> entities;      // forest
  std::vector<Attribute> attributes;
  std::vector<Fact> facts;
  std::vector<Impact> impacts;

  bool operator==(const QualityModel&) const = default;
};

[[nodiscard]] std::string_view to_string(Assessability a);
[[nodiscard]] std::string_view to_string(ImpactDirection d);  // "+" or "-"
[[nodiscard]] std::optional<Assessability> assessability_from_string(std::string_view s);
[[nodiscard]] std::optional<ImpactDirection> direction_from_string(std::string_view s);

/// Renders a fact reference the way diagnostics and the matrix export do:
/// "<entity path> | <attribute>".
[[nodiscard]] std::string fact_key(const NodeId& entity, const std::string& attribute);

[[nodiscard]] const ActivityNode* lookup_activity(const QualityModel& model, const NodeId& id);
[[nodiscard]] const EntityNode* lookup_entity(const QualityModel& model, const NodeId& id);
[[nodiscard]] const Fact* lookup_fact(const QualityModel& model, const NodeId& entity,
                                      const std::string& attribute);
[[nodiscard]] const Metric* lookup_metric(const QualityModel& model, const std::string& metric_id);

/// Paths of `id` and everything below it, self first, then pre-order in
/// declaration order. Fails with code "unresolved_activity" /
/// "unresolved_entity" when the id does not resolve.
[[nodiscard]] Result<std::vector<NodeId>> activity_descendants(const QualityModel& model,
                                                               const NodeId& id);
[[nodiscard]] Result<std::vector<NodeId>> entity_descendants(const QualityModel& model,
                                                             const NodeId& id);

/// Leaf activities of the whole forest in pre-order; the matrix export's
/// column order.
[[nodiscard]] std::vector<const ActivityNode*> leaf_activities(const QualityModel& model);

/// Artifact-type tags effective at `entity`: its own plus every ancestor's.
/// Empty when the id does not resolve.
[[nodiscard]] std::vector<std::string> effective_artifact_types(const QualityModel& model,
                                                                const NodeId& entity);

}  // namespace aqm
