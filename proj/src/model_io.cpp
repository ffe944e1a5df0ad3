#include "aqm/model_io.hpp"

#include <algorithm>

#include "aqm/validate.hpp"
#include "io_util.hpp"

namespace aqm::io {

namespace {

using detail::json;

ActivityNode parse_activity_node(const json& value, const std::string& path,
                                 const NodeId& parent) {
  detail::expect_object(value, path);
  detail::check_keys(value, path, {"id", "label", "children"});
  ActivityNode node;
  const std::string segment = detail::require_string(value, path, "id");
  node.id = parent.child(segment);
  node.label = detail::string_or(value, path, "label", segment);
  if (value.contains("children")) {
    const json& children = detail::expect_array(value.at("children"), path + ".children");
    for (std::size_t i = 0; i < children.size(); ++i) {
      node.children.push_back(parse_activity_node(
          children[i], path + ".children[" + std::to_string(i) + "]", node.id));
    }
  }
  return node;
}

EntityNode parse_entity_node(const json& value, const std::string& path,
                             const NodeId& parent) {
  detail::expect_object(value, path);
  detail::check_keys(value, path, {"id", "label", "artifact_types", "children"});
  EntityNode node;
  const std::string segment = detail::require_string(value, path, "id");
  node.id = parent.child(segment);
  node.label = detail::string_or(value, path, "label", segment);
  if (value.contains("artifact_types")) {
    node.artifact_types =
        detail::string_array(value.at("artifact_types"), path + ".artifact_types");
    std::sort(node.artifact_types.begin(), node.artifact_types.end());
    node.artifact_types.erase(
        std::unique(node.artifact_types.begin(), node.artifact_types.end()),
        node.artifact_types.end());
  }
  if (value.contains("children")) {
    const json& children = detail::expect_array(value.at("children"), path + ".children");
    for (std::size_t i = 0; i < children.size(); ++i) {
      node.children.push_back(parse_entity_node(
          children[i], path + ".children[" + std::to_string(i) + "]", node.id));
    }
  }
  return node;
}

Attribute parse_attribute(const json& value, const std::string& path) {
  detail::expect_object(value, path);
  detail::check_keys(value, path, {"id", "description"});
  Attribute attribute;
  attribute.id = detail::require_string(value, path, "id");
  attribute.description = detail::string_or(value, path, "description", "");
  return attribute;
}

Metric parse_metric(const json& value, const std::string& path) {
  detail::expect_object(value, path);
  detail::check_keys(value, path, {"id", "unit", "description"});
  Metric metric;
  metric.id = detail::require_string(value, path, "id");
  metric.unit = detail::require_string(value, path, "unit");
  metric.description = detail::string_or(value, path, "description", "");
  return metric;
}

Fact parse_fact(const json& value, const std::string& path) {
  detail::expect_object(value, path);
  detail::check_keys(value, path, {"entity", "attribute", "assessability", "metric"});
  Fact fact;
  fact.entity = detail::require_path(value, path, "entity");
  fact.attribute = detail::require_string(value, path, "attribute");
  const std::string assessability = detail::require_string(value, path, "assessability");
  const auto parsed = assessability_from_string(assessability);
  if (!parsed) {
    detail::fail("bad_value", path + ".assessability: '" + assessability +
                                  "' is not one of automatic, semi_automatic, manual");
  }
  fact.assessability = *parsed;
  if (value.contains("metric")) {
    fact.metric = parse_metric(value.at("metric"), path + ".metric");
  }
  return fact;
}

Impact parse_impact(const json& value, const std::string& path) {
  detail::expect_object(value, path);
  detail::check_keys(value, path,
                     {"entity", "attribute", "activity", "direction", "justification"});
  Impact impact;
  impact.entity = detail::require_path(value, path, "entity");
  impact.attribute = detail::require_string(value, path, "attribute");
  impact.activity = detail::require_path(value, path, "activity");
  const std::string direction = detail::require_string(value, path, "direction");
  const auto parsed = direction_from_string(direction);
  if (!parsed) {
    detail::fail("bad_value",
                 path + ".direction: '" + direction + "' is not one of \"+\", \"-\"");
  }
  impact.direction = *parsed;
  impact.justification = detail::string_or(value, path, "justification", "");
  return impact;
}

QualityModel parse_model_json(const json& document) {
  detail::expect_object(document, "document");
  detail::check_keys(document, "document",
                     {"name", "activities", "entities", "attributes", "facts", "impacts"});
  QualityModel model;
  model.name = detail::require_string(document, "document", "name");
  if (document.contains("activities")) {
    const json& nodes = detail::expect_array(document.at("activities"), "activities");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      model.activities.push_back(
          parse_activity_node(nodes[i], "activities[" + std::to_string(i) + "]", NodeId()));
    }
  }
  if (document.contains("entities")) {
    const json& nodes = detail::expect_array(document.at("entities"), "entities");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      model.entities.push_back(
          parse_entity_node(nodes[i], "entities[" + std::to_string(i) + "]", NodeId()));
    }
  }
  if (document.contains("attributes")) {
    const json& nodes = detail::expect_array(document.at("attributes"), "attributes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      model.attributes.push_back(
          parse_attribute(nodes[i], "attributes[" + std::to_string(i) + "]"));
    }
  }
  if (document.contains("facts")) {
    const json& nodes = detail::expect_array(document.at("facts"), "facts");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      model.facts.push_back(parse_fact(nodes[i], "facts[" + std::to_string(i) + "]"));
    }
  }
  if (document.contains("impacts")) {
    const json& nodes = detail::expect_array(document.at("impacts"), "impacts");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      model.impacts.push_back(parse_impact(nodes[i], "impacts[" + std::to_string(i) + "]"));
    }
  }
  return model;
}

json activity_to_json(const ActivityNode& node) {
  json out;
  out["id"] = node.id.empty() ? std::string() : node.id.segments().back();
  out["label"] = node.label;
  if (!node.children.empty()) {
    json children = json::array();
    for (const ActivityNode& child : node.children) children.push_back(activity_to_json(child));
    out["children"] = std::move(children);
  }
  return out;
}

json entity_to_json(const EntityNode& node) {
  json out;
  out["id"] = node.id.empty() ? std::string() : node.id.segments().back();
  out["label"] = node.label;
  if (!node.artifact_types.empty()) out["artifact_types"] = node.artifact_types;
  if (!node.children.empty()) {
    json children = json::array();
    for (const EntityNode& child : node.children) children.push_back(entity_to_json(child));
    out["children"] = std::move(children);
  }
  return out;
}

json metric_to_json(const Metric& metric) {
  json out;
  out["id"] = metric.id;
  out["unit"] = metric.unit;
  if (!metric.description.empty()) out["description"] = metric.description;
  return out;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Result<QualityModel, ParseError> parse_model_structure(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& error) {
    return ParseError{"syntax_error", error.what(), {}};
  }
  try {
    return parse_model_json(document);
  } catch (const detail::parse_failure& failure) {
    return ParseError{failure.code, failure.message, {}};
  }
}

Result<QualityModel, ParseError> parse_model(const std::string& text) {
  auto structural = parse_model_structure(text);
  if (!structural.ok()) return structural;
  const ValidationResult validation = validate_model(structural.value());
  if (!validation.ok()) {
    ParseError error;
    error.code = validation.diagnostics.front().code;
    error.diagnostics = validation.diagnostics;
    error.message = "model is invalid:";
    for (const Diagnostic& diagnostic : validation.diagnostics) {
      error.message += " [" + diagnostic.code + " at '" + diagnostic.path + "'] " +
                       diagnostic.message + ";";
    }
    error.message.pop_back();
    return error;
  }
  return std::move(structural).value();
}

std::string serialize_model(const QualityModel& model) {
  json document;
  document["name"] = model.name;

  json activities = json::array();
  for (const ActivityNode& node : model.activities) activities.push_back(activity_to_json(node));
  document["activities"] = std::move(activities);

  json entities = json::array();
  for (const EntityNode& node : model.entities) entities.push_back(entity_to_json(node));
  document["entities"] = std::move(entities);

  json attributes = json::array();
  for (const Attribute& attribute : model.attributes) {
    json out;
    out["id"] = attribute.id;
    if (!attribute.description.empty()) out["description"] = attribute.description;
    attributes.push_back(std::move(out));
  }
  document["attributes"] = std::move(attributes);

  json facts = json::array();
  for (const Fact& fact : model.facts) {
    json out;
    out["entity"] = fact.entity.str();
    out["attribute"] = fact.attribute;
    out["assessability"] = std::string(to_string(fact.assessability));
    if (fact.metric) out["metric"] = metric_to_json(*fact.metric);
    facts.push_back(std::move(out));
  }
  document["facts"] = std::move(facts);

  json impacts = json::array();
  for (const Impact& impact : model.impacts) {
    json out;
    out["entity"] = impact.entity.str();
    out["attribute"] = impact.attribute;
    out["activity"] = impact.activity.str();
    out["direction"] = std::string(to_string(impact.direction));
    if (!impact.justification.empty()) out["justification"] = impact.justification;
    impacts.push_back(std::move(out));
  }
  document["impacts"] = std::move(impacts);

  return detail::dump_canonical(document);
}

namespace {

std::string matrix_cell(const QualityModel& model, const Fact& fact, const NodeId& activity) {
  std::string cell;
  for (const Impact& impact : model.impacts) {
    if (impact.entity == fact.entity && impact.attribute == fact.attribute &&
        impact.activity == activity) {
      cell = to_string(impact.direction);
    }
  }
  return cell;
}

}  // namespace

std::string export_matrix(const QualityModel& model) {
  const std::vector<const ActivityNode*> leaves = leaf_activities(model);

  std::string out = "fact";
  for (const ActivityNode* leaf : leaves) out += "," + csv_field(leaf->id.str());
  out += '\n';

  for (const Fact& fact : model.facts) {
    out += csv_field(fact_key(fact.entity, fact.attribute));
    for (const ActivityNode* leaf : leaves) {
      out += "," + matrix_cell(model, fact, leaf->id);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json matrix_json(const QualityModel& model) {
  const std::vector<const ActivityNode*> leaves = leaf_activities(model);
  json document;
  json columns = json::array();
  for (const ActivityNode* leaf : leaves) columns.push_back(leaf->id.str());
  document["columns"] = std::move(columns);
  json rows = json::array();
  for (const Fact& fact : model.facts) {
    json row;
    row["fact"] = fact_key(fact.entity, fact.attribute);
    json cells = json::array();
    for (const ActivityNode* leaf : leaves) cells.push_back(matrix_cell(model, fact, leaf->id));
    row["cells"] = std::move(cells);
    rows.push_back(std::move(row));
  }
  document["rows"] = std::move(rows);
  return document;
}

}  // namespace aqm::io
