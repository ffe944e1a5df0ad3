#include "aqm/validate.hpp"

#include <set>
#include <string>
#include <utility>

namespace aqm {

namespace {

void add(ValidationResult& result, std::string code, std::string path, std::string message) {
  result.diagnostics.push_back({std::move(code), std::move(path), std::move(message)});
}

template <typename Node>
void check_tree(const std::vector<Node>& level, const NodeId& parent_path,
                std::set<std::string>& seen_paths, ValidationResult& result) {
  for (const Node& node : level) {
    const std::string path = node.id.str();
    const auto& segments = node.id.segments();

    if (segments.empty()) {
      add(result, "bad_segment", path, "node has an empty id");
    } else if (!is_valid_segment(segments.back())) {
      add(result, "bad_segment", path,
          "segment '" + segments.back() + "' does not match [a-z0-9_]+");
    }

    // Child ids must extend the parent's path by exactly one segment.
    const bool extends_parent = segments.size() == parent_path.segments().size() + 1 &&
                                parent_path.is_prefix_of(node.id);
    if (!segments.empty() && !extends_parent) {
      add(result, "bad_child_path", path,
          "id does not extend parent path '" + parent_path.str() + "' by one segment");
    }

    if (!seen_paths.insert(path).second) {
      add(result, "duplicate_path", path, "two nodes share the path '" + path + "'");
    }

    check_tree(node.children, node.id, seen_paths, result);
  }
}

}  // namespace

ValidationResult validate_model(const QualityModel& model) {
  ValidationResult result;

  std::set<std::string> activity_paths;
  std::set<std::string> entity_paths;
  check_tree(model.activities, NodeId(), activity_paths, result);
  check_tree(model.entities, NodeId(), entity_paths, result);

  std::set<std::string> attribute_ids;
  for (const Attribute& attribute : model.attributes) {
    if (!is_valid_segment(attribute.id)) {
      add(result, "bad_segment", attribute.id,
          "attribute id '" + attribute.id + "' does not match [a-z0-9_]+");
    }
    if (!attribute_ids.insert(attribute.id).second) {
      add(result, "duplicate_attribute", attribute.id,
          "attribute '" + attribute.id + "' is declared twice");
    }
  }

  std::set<std::string> metric_ids;
  std::set<std::pair<std::string, std::string>> fact_keys;
  for (const Fact& fact : model.facts) {
    const std::string key = fact_key(fact.entity, fact.attribute);
    if (lookup_entity(model, fact.entity) == nullptr) {
      add(result, "dangling_fact_entity", key,
          "fact entity '" + fact.entity.str() + "' is not in the entity tree");
    }
    if (attribute_ids.find(fact.attribute) == attribute_ids.end()) {
      add(result, "unknown_attribute", key,
          "attribute '" + fact.attribute + "' is not declared");
    }
    if (!fact_keys.insert({fact.entity.str(), fact.attribute}).second) {
      add(result, "duplicate_fact", key, "fact '" + key + "' is declared twice");
    }
    if (fact.metric) {
      if (!is_valid_segment(fact.metric->id)) {
        add(result, "bad_segment", fact.metric->id,
            "metric id '" + fact.metric->id + "' does not match [a-z0-9_]+");
      }
      if (!metric_ids.insert(fact.metric->id).second) {
        add(result, "duplicate_metric", fact.metric->id,
            "metric '" + fact.metric->id + "' is declared twice");
      }
    }
  }

  std::set<std::pair<std::string, std::string>> impact_keys;
  for (const Impact& impact : model.impacts) {
    const std::string key =
        fact_key(impact.entity, impact.attribute) + " -> " + impact.activity.str();
    bool resolvable = true;
    if (lookup_entity(model, impact.entity) == nullptr) {
      add(result, "dangling_impact_entity", key,
          "impact entity '" + impact.entity.str() + "' is not in the entity tree");
      resolvable = false;
    }
    if (lookup_activity(model, impact.activity) == nullptr) {
      add(result, "dangling_impact_activity", key,
          "impact activity '" + impact.activity.str() + "' is not in the activity tree");
    }
    if (resolvable &&
        fact_keys.find({impact.entity.str(), impact.attribute}) == fact_keys.end()) {
      add(result, "unknown_impact_fact", key,
          "impact references fact '" + fact_key(impact.entity, impact.attribute) +
              "', which is not declared");
    }
    if (!impact_keys.insert({fact_key(impact.entity, impact.attribute), impact.activity.str()})
             .second) {
      add(result, "duplicate_impact", key, "impact '" + key + "' is declared twice");
    }
  }

  return result;
}

}  // namespace aqm
