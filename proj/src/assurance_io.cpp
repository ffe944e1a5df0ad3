#include "aqm/assurance_io.hpp"

#include "aqm/requirements_io.hpp"
#include "io_util.hpp"

namespace aqm::io {

namespace {

using detail::json;

qa::MetricResult parse_metric_result(const json& value, const std::string& path) {
  detail::expect_object(value, path);
  detail::check_keys(value, path, {"metric", "entity", "value"});
  qa::MetricResult result;
  result.metric = detail::require_string(value, path, "metric");
  result.entity = detail::require_path(value, path, "entity");
  result.value = detail::expect_number(detail::require(value, path, "value"), path + ".value");
  return result;
}

qa::MetricReport parse_metric_report_json(const json& document) {
  detail::expect_object(document, "document");
  detail::check_keys(document, "document", {"tool", "results"});
  qa::MetricReport report;
  report.tool = detail::require_string(document, "document", "tool");
  if (document.contains("results")) {
    const json& nodes = detail::expect_array(document.at("results"), "results");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      report.results.push_back(
          parse_metric_result(nodes[i], "results[" + std::to_string(i) + "]"));
    }
  }
  return report;
}

}  // namespace

Result<qa::MetricReport, ParseError> parse_metric_report(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& error) {
    return ParseError{"syntax_error", error.what(), {}};
  }
  try {
    return parse_metric_report_json(document);
  } catch (const detail::parse_failure& failure) {
    return ParseError{failure.code, failure.message, {}};
  }
}

std::string serialize_metric_report(const qa::MetricReport& report) {
  json document;
  document["tool"] = report.tool;
  json results = json::array();
  for (const qa::MetricResult& result : report.results) {
    json out;
    out["metric"] = result.metric;
    out["entity"] = result.entity.str();
    out["value"] = result.value;
    results.push_back(std::move(out));
  }
  document["results"] = std::move(results);
  return detail::dump_canonical(document);
}

nlohmann::json to_json(const Diagnostic& diagnostic) {
  json out;
  out["code"] = diagnostic.code;
  out["path"] = diagnostic.path;
  out["message"] = diagnostic.message;
  return out;
}

nlohmann::json to_json(const qa::GuidelineSet& set) {
  json document;
  document["model"] = set.model_name;
  json items = json::array();
  for (const qa::Guideline& item : set.items) {
    json out;
    out["kind"] = item.kind == qa::GuidelineKind::do_item ? "do" : "dont";
    out["text"] = item.text;
    out["entity"] = item.entity.str();
    out["attribute"] = item.attribute;
    out["activity"] = item.activity.str();
    out["direction"] = std::string(to_string(item.direction));
    items.push_back(std::move(out));
  }
  document["items"] = std::move(items);
  return document;
}

nlohmann::json to_json(const qa::ChecklistResult& result) {
  json document;
  document["model"] = result.checklist.model_name;
  document["artifact_type"] = result.checklist.artifact_type;
  json items = json::array();
  for (const qa::ChecklistItem& item : result.checklist.items) {
    json out;
    out["question"] = item.question;
    out["entity"] = item.entity.str();
    out["attribute"] = item.attribute;
    json impacted = json::array();
    for (const NodeId& activity : item.impacted_activities) impacted.push_back(activity.str());
    out["impacted_activities"] = std::move(impacted);
    items.push_back(std::move(out));
  }
  document["items"] = std::move(items);
  json diagnostics = json::array();
  for (const Diagnostic& diagnostic : result.diagnostics) diagnostics.push_back(to_json(diagnostic));
  document["diagnostics"] = std::move(diagnostics);
  return document;
}

nlohmann::json to_json(const qa::ConformanceReport& report) {
  json document;
  document["tool"] = report.tool;
  json evaluations = json::array();
  for (const qa::Evaluation& evaluation : report.evaluations) {
    json out;
    out["requirement"] = to_json(evaluation.requirement);
    out["verdict"] = std::string(to_string(evaluation.verdict));
    if (evaluation.observed) out["observed"] = *evaluation.observed;
    json details = json::array();
    for (const qa::EvaluationDetail& detail : evaluation.details) {
      json row;
      row["entity"] = detail.entity.str();
      row["value"] = detail.value;
      row["satisfied"] = detail.satisfied;
      details.push_back(std::move(row));
    }
    out["details"] = std::move(details);
    evaluations.push_back(std::move(out));
  }
  document["evaluations"] = std::move(evaluations);
  json diagnostics = json::array();
  for (const Diagnostic& diagnostic : report.diagnostics) diagnostics.push_back(to_json(diagnostic));
  document["diagnostics"] = std::move(diagnostics);
  return document;
}

nlohmann::json to_json(const qa::TraceabilityReport& report) {
  json document;
  document["model"] = report.model_name;
  json rows = json::array();
  for (const qa::TraceRow& row : report.rows) {
    json out;
    out["activity"] = row.activity.str();
    out["label"] = row.label;
    out["dont_care"] = row.dont_care;
    out["default_dont_care"] = row.default_dont_care;
    out["ratings"] = row.ratings;
    json refined = json::array();
    for (const req::RefinedRequirement& entry : row.refined) refined.push_back(to_json(entry));
    out["refined"] = std::move(refined);
    json quantified = json::array();
    for (std::size_t i = 0; i < row.quantified.size(); ++i) {
      json entry;
      entry["requirement"] = to_json(row.quantified[i]);
      if (i < row.verdicts.size() && row.verdicts[i]) {
        entry["verdict"] = std::string(to_string(*row.verdicts[i]));
      }
      quantified.push_back(std::move(entry));
    }
    out["quantified"] = std::move(quantified);
    rows.push_back(std::move(out));
  }
  document["rows"] = std::move(rows);
  return document;
}

}  // namespace aqm::io
