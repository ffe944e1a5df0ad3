#include "aqm/model.hpp"

#include <algorithm>

namespace aqm {

namespace {

// Walks a forest by path segments. Nodes store full paths, but navigation
// only compares the last segment at each level.
template <typename Node>
const Node* find_node(const std::vector<Node>& roots, const NodeId& id) {
  const auto& segments = id.segments();
  if (segments.empty()) return nullptr;
  const std::vector<Node>* level = &roots;
  const Node* found = nullptr;
  for (std::size_t depth = 0; depth < segments.size(); ++depth) {
    found = nullptr;
    for (const Node& node : *level) {
      const auto& node_segments = node.id.segments();
      if (node_segments.size() == depth + 1 && node_segments.back() == segments[depth] &&
          node.id.is_prefix_of(id)) {
        found = &node;
        break;
      }
    }
    if (found == nullptr) return nullptr;
    level = &found->children;
  }
  return found;
}

template <typename Node>
void collect_descendants(const Node& node, std::vector<NodeId>& out) {
  out.push_back(node.id);
  for (const Node& child : node.children) {
    collect_descendants(child, out);
  }
}

void collect_leaves(const ActivityNode& node, std::vector<const ActivityNode*>& out) {
  if (node.children.empty()) {
    out.push_back(&node);
    return;
  }
  for (const ActivityNode& child : node.children) {
    collect_leaves(child, out);
  }
}

}  // namespace

std::string_view to_string(Assessability a) {
  switch (a) {
    case Assessability::automatic: return "automatic";
    case Assessability::semi_automatic: return "semi_automatic";
    case Assessability::manual: return "manual";
  }
  return "manual";
}

std::string_view to_string(ImpactDirection d) {
  return d == ImpactDirection::positive ? "+" : "-";
}

std::optional<Assessability> assessability_from_string(std::string_view s) {
  if (s == "automatic") return Assessability::automatic;
  if (s == "semi_automatic") return Assessability::semi_automatic;
  if (s == "manual") return Assessability::manual;
  return std::nullopt;
}

std::optional<ImpactDirection> direction_from_string(std::string_view s) {
  if (s == "+") return ImpactDirection::positive;
  if (s == "-") return ImpactDirection::negative;
  return std::nullopt;
}

std::string fact_key(const NodeId& entity, const std::string& attribute) {
  return entity.str() + " | " + attribute;
}

const ActivityNode* lookup_activity(const QualityModel& model, const NodeId& id) {
  return find_node(model.activities, id);
}

const EntityNode* lookup_entity(const QualityModel& model, const NodeId& id) {
  return find_node(model.entities, id);
}

const Fact* lookup_fact(const QualityModel& model, const NodeId& entity,
                        const std::string& attribute) {
  for (const Fact& fact : model.facts) {
    if (fact.entity == entity && fact.attribute == attribute) return &fact;
  }
  return nullptr;
}

const Metric* lookup_metric(const QualityModel& model, const std::string& metric_id) {
  for (const Fact& fact : model.facts) {
    if (fact.metric && fact.metric->id == metric_id) return &*fact.metric;
  }
  return nullptr;
}

Result<std::vector<NodeId>> activity_descendants(const QualityModel& model, const NodeId& id) {
  const ActivityNode* node = lookup_activity(model, id);
  if (node == nullptr) {
    return Result<std::vector<NodeId>>::failure(
        "unresolved_activity", "no activity with path '" + id.str() + "'");
  }
  std::vector<NodeId> out;
  collect_descendants(*node, out);
  return out;
}

Result<std::vector<NodeId>> entity_descendants(const QualityModel& model, const NodeId& id) {
  const EntityNode* node = lookup_entity(model, id);
  if (node == nullptr) {
    return Result<std::vector<NodeId>>::failure(
        "unresolved_entity", "no entity with path '" + id.str() + "'");
  }
  std::vector<NodeId> out;
  collect_descendants(*node, out);
  return out;
}

std::vector<const ActivityNode*> leaf_activities(const QualityModel& model) {
  std::vector<const ActivityNode*> out;
  for (const ActivityNode& root : model.activities) {
    collect_leaves(root, out);
  }
  return out;
}

std::vector<std::string> effective_artifact_types(const QualityModel& model,
                                                  const NodeId& entity) {
  std::vector<std::string> tags;
  const auto& segments = entity.segments();
  const std::vector<EntityNode>* level = &model.entities;
  for (std::size_t depth = 0; depth < segments.size(); ++depth) {
    const EntityNode* found = nullptr;
    for (const EntityNode& node : *level) {
      const auto& node_segments = node.id.segments();
      if (node_segments.size() == depth + 1 && node_segments.back() == segments[depth] &&
          node.id.is_prefix_of(entity)) {
        found = &node;
        break;
      }
    }
    if (found == nullptr) return {};
    tags.insert(tags.end(), found->artifact_types.begin(), found->artifact_types.end());
    level = &found->children;
  }
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  return tags;
}

}  // namespace aqm
