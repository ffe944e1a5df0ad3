#include "aqm/requirements_io.hpp"

#include "io_util.hpp"

namespace aqm::io {

namespace {

using detail::json;

req::Stakeholder parse_stakeholder(const json& value, const std::string& path) {
  detail::expect_object(value, path);
  detail::check_keys(value, path, {"id", "label", "activities"});
  req::Stakeholder stakeholder;
  stakeholder.id = detail::require_string(value, path, "id");
  stakeholder.label = detail::string_or(value, path, "label", stakeholder.id);
  if (value.contains("activities")) {
    stakeholder.activities = detail::path_array(value.at("activities"), path + ".activities");
  }
  return stakeholder;
}

req::ActivityRanking parse_ranking(const json& value, const std::string& path) {
  detail::expect_object(value, path);
  detail::check_keys(value, path, {"ordered", "cutoff"});
  req::ActivityRanking ranking;
  if (value.contains("ordered")) {
    ranking.ordered = detail::path_array(value.at("ordered"), path + ".ordered");
  }
  // Absent cutoff means nothing defaults to don't-care.
  ranking.cutoff = value.contains("cutoff")
                       ? detail::expect_index(value.at("cutoff"), path + ".cutoff")
                       : ranking.ordered.size();
  return ranking;
}

req::QualitativeRequirement parse_qualitative(const json& value, const std::string& path) {
  detail::expect_object(value, path);
  detail::check_keys(value, path, {"activity", "ratings", "dont_care"});
  req::QualitativeRequirement entry;
  entry.activity = detail::require_path(value, path, "activity");
  if (value.contains("dont_care")) {
    entry.dont_care = detail::expect_bool(value.at("dont_care"), path + ".dont_care");
  }
  if (value.contains("ratings")) {
    entry.ratings = detail::string_array(value.at("ratings"), path + ".ratings");
  }
  if (entry.dont_care && !entry.ratings.empty()) {
    detail::fail("bad_value", path + ": dont_care excludes ratings");
  }
  return entry;
}

req::RefinedRequirement parse_refined(const json& value, const std::string& path) {
  detail::expect_object(value, path);
  detail::check_keys(value, path, {"activity", "entity", "attribute", "direction", "statement"});
  req::RefinedRequirement entry;
  entry.activity = detail::require_path(value, path, "activity");
  entry.entity = detail::require_path(value, path, "entity");
  entry.attribute = detail::require_string(value, path, "attribute");
  const std::string direction = detail::require_string(value, path, "direction");
  const auto parsed = direction_from_string(direction);
  if (!parsed) {
    detail::fail("bad_value",
                 path + ".direction: '" + direction + "' is not one of \"+\", \"-\"");
  }
  entry.direction = *parsed;
  entry.statement = detail::string_or(value, path, "statement", "");
  return entry;
}

req::QuantifiedRequirement parse_quantified(const json& value, const std::string& path) {
  detail::expect_object(value, path);
  detail::check_keys(value, path, {"entity", "attribute", "activity", "metric", "comparator",
                                   "threshold", "nominal", "unit", "constraint"});
  req::QuantifiedRequirement entry;

  const bool has_entity = value.contains("entity");
  const bool has_attribute = value.contains("attribute");
  const bool has_activity = value.contains("activity");
  if (has_entity != has_attribute) {
    detail::fail("missing_field", path + ": entity and attribute go together");
  }
  if (has_activity == has_entity) {
    detail::fail("bad_value", path + ": scope is either activity or entity plus attribute");
  }
  if (has_entity) {
    entry.scope = req::RequirementScope::fact(detail::require_path(value, path, "entity"),
                                              detail::require_string(value, path, "attribute"));
  } else {
    entry.scope = req::RequirementScope::for_activity(detail::require_path(value, path, "activity"));
  }

  if (value.contains("metric")) {
    entry.metric = detail::expect_string(value.at("metric"), path + ".metric");
  }
  if (value.contains("comparator")) {
    const std::string comparator =
        detail::expect_string(value.at("comparator"), path + ".comparator");
    const auto parsed = req::comparator_from_string(comparator);
    if (!parsed) {
      detail::fail("bad_value", path + ".comparator: '" + comparator +
                                    "' is not one of le, ge, lt, gt, eq, within_abs");
    }
    entry.comparator = *parsed;
  }
  if (entry.comparator) {
    entry.threshold = detail::expect_number(detail::require(value, path, "threshold"),
                                            path + ".threshold");
  } else if (value.contains("threshold")) {
    detail::fail("bad_value", path + ": threshold requires a comparator");
  }
  if (value.contains("nominal")) {
    if (entry.comparator != req::Comparator::within_abs) {
      detail::fail("bad_value", path + ": nominal requires comparator within_abs");
    }
    entry.nominal = detail::expect_number(value.at("nominal"), path + ".nominal");
  }
  entry.unit = detail::string_or(value, path, "unit", "");
  if (value.contains("constraint")) {
    entry.constraint = detail::expect_string(value.at("constraint"), path + ".constraint");
  }
  return entry;
}

req::RequirementsDocument parse_requirements_json(const json& document) {
  detail::expect_object(document, "document");
  detail::check_keys(document, "document",
                     {"model", "stakeholders", "ranking", "qualitative", "refined", "quantified"});
  req::RequirementsDocument doc;
  doc.model_name = detail::require_string(document, "document", "model");
  if (document.contains("stakeholders")) {
    const json& nodes = detail::expect_array(document.at("stakeholders"), "stakeholders");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      doc.stakeholders.push_back(
          parse_stakeholder(nodes[i], "stakeholders[" + std::to_string(i) + "]"));
    }
  }
  if (document.contains("ranking")) {
    doc.ranking = parse_ranking(document.at("ranking"), "ranking");
  }
  if (document.contains("qualitative")) {
    const json& nodes = detail::expect_array(document.at("qualitative"), "qualitative");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      doc.qualitative.push_back(
          parse_qualitative(nodes[i], "qualitative[" + std::to_string(i) + "]"));
    }
  }
  if (document.contains("refined")) {
    const json& nodes = detail::expect_array(document.at("refined"), "refined");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      doc.refined.push_back(parse_refined(nodes[i], "refined[" + std::to_string(i) + "]"));
    }
  }
  if (document.contains("quantified")) {
    const json& nodes = detail::expect_array(document.at("quantified"), "quantified");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      doc.quantified.push_back(
          parse_quantified(nodes[i], "quantified[" + std::to_string(i) + "]"));
    }
  }
  return doc;
}

}  // namespace

Result<req::RequirementsDocument, ParseError> parse_requirements(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& error) {
    return ParseError{"syntax_error", error.what(), {}};
  }
  try {
    return parse_requirements_json(document);
  } catch (const detail::parse_failure& failure) {
    return ParseError{failure.code, failure.message, {}};
  }
}

std::string serialize_requirements(const req::RequirementsDocument& doc) {
  json document;
  document["model"] = doc.model_name;

  json stakeholders = json::array();
  for (const req::Stakeholder& stakeholder : doc.stakeholders) {
    json out;
    out["id"] = stakeholder.id;
    out["label"] = stakeholder.label;
    json activities = json::array();
    for (const NodeId& activity : stakeholder.activities) activities.push_back(activity.str());
    out["activities"] = std::move(activities);
    stakeholders.push_back(std::move(out));
  }
  document["stakeholders"] = std::move(stakeholders);

  json ranking;
  json ordered = json::array();
  for (const NodeId& activity : doc.ranking.ordered) ordered.push_back(activity.str());
  ranking["ordered"] = std::move(ordered);
  ranking["cutoff"] = doc.ranking.cutoff;
  document["ranking"] = std::move(ranking);

  json qualitative = json::array();
  for (const req::QualitativeRequirement& entry : doc.qualitative) {
    json out;
    out["activity"] = entry.activity.str();
    if (entry.dont_care) {
      out["dont_care"] = true;
    } else {
      out["ratings"] = entry.ratings;
    }
    qualitative.push_back(std::move(out));
  }
  document["qualitative"] = std::move(qualitative);

  json refined = json::array();
  for (const req::RefinedRequirement& entry : doc.refined) refined.push_back(to_json(entry));
  document["refined"] = std::move(refined);

  json quantified = json::array();
  for (const req::QuantifiedRequirement& entry : doc.quantified) {
    quantified.push_back(to_json(entry));
  }
  document["quantified"] = std::move(quantified);

  return detail::dump_canonical(document);
}

nlohmann::json to_json(const req::RefinedRequirement& entry) {
  json out;
  out["activity"] = entry.activity.str();
  out["entity"] = entry.entity.str();
  out["attribute"] = entry.attribute;
  out["direction"] = std::string(to_string(entry.direction));
  if (!entry.statement.empty()) out["statement"] = entry.statement;
  return out;
}

nlohmann::json to_json(const req::QuantifiedRequirement& entry) {
  json out;
  if (entry.scope.is_fact_level()) {
    out["entity"] = entry.scope.entity.str();
    out["attribute"] = entry.scope.attribute;
  } else {
    out["activity"] = entry.scope.activity.str();
  }
  if (entry.metric) out["metric"] = *entry.metric;
  if (entry.comparator) {
    out["comparator"] = std::string(req::to_string(*entry.comparator));
    out["threshold"] = entry.threshold;
    if (*entry.comparator == req::Comparator::within_abs) out["nominal"] = entry.nominal;
  }
  if (!entry.unit.empty()) out["unit"] = entry.unit;
  if (entry.constraint) out["constraint"] = *entry.constraint;
  return out;
}

}  // namespace aqm::io
