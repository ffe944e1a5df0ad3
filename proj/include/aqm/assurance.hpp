#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aqm/diagnostics.hpp"
#include "aqm/model.hpp"
#include "aqm/requirements.hpp"

namespace aqm::qa {

enum class GuidelineKind { do_item, dont_item };

/// One developer guideline derived from one impact; kind is `do` exactly for
/// positive impacts.
struct Guideline {
  GuidelineKind kind = GuidelineKind::do_item;
  std::string text;
  NodeId entity;
  std::string attribute;
  NodeId activity;
  ImpactDirection direction = ImpactDirection::positive;

  bool operator==(const Guideline&) const = default;
};

struct GuidelineSet {
  std::string model_name;
  std::vector<Guideline> items;

  bool operator==(const GuidelineSet&) const = default;
};

/// One review question for a manually assessable fact, with every activity
/// that fact impacts.
struct ChecklistItem {
  std::string question;
  NodeId entity;
  std::string attribute;
  std::vector<NodeId> impacted_activities;

  bool operator==(const ChecklistItem&) const = default;
};

struct Checklist {
  std::string model_name;
  std::string artifact_type;
  std::vector<ChecklistItem> items;

  bool operator==(const Checklist&) const = default;
};

struct ChecklistResult {
  Checklist checklist;
  std::vector<Diagnostic> diagnostics;  // warning when no entity carries the tag
};

/// One tool measurement keyed by an entity path.
struct MetricResult {
  std::string metric;
  NodeId entity;
  double value = 0.0;

  bool operator==(const MetricResult&) const = default;
};

struct MetricReport {
  std::string tool;
  std::vector<MetricResult> results;

  bool operator==(const MetricReport&) const = default;
};

enum class Verdict { pass, fail, no_data, manual_only };

[[nodiscard]] std::string_view to_string(Verdict v);

/// Per-result detail for one requirement evaluation.
struct EvaluationDetail {
  NodeId entity;
  double value = 0.0;
  bool satisfied = false;

  bool operator==(const EvaluationDetail&) const = default;
};

struct Evaluation {
  req::QuantifiedRequirement requirement;
  std::optional<double> observed;  // worst matching result's value
  Verdict verdict = Verdict::no_data;
  std::vector<EvaluationDetail> details;

  bool operator==(const Evaluation&) const = default;
};

struct ConformanceReport {
  std::string tool;
  std::vector<Evaluation> evaluations;  // one per quantified requirement, in order
  std::vector<Diagnostic> diagnostics;

  [[nodiscard]] bool any_fail() const;

  bool operator==(const ConformanceReport&) const = default;
};

/// One row per ranked activity: its ratings, the requirements refined from
/// its subtree's impacts, its quantified requirements, and (when available)
/// their latest verdicts.
struct TraceRow {
  NodeId activity;
  std::string label;
  bool dont_care = false;          // explicit don't-care entry
  bool default_dont_care = false;  // at or below the ranking cutoff, no entry
  std::vector<std::string> ratings;
  std::vector<req::RefinedRequirement> refined;
  std::vector<req::QuantifiedRequirement> quantified;
  std::vector<std::optional<Verdict>> verdicts;  // parallel to `quantified`

  bool operator==(const TraceRow&) const = default;
};

struct TraceabilityReport {
  std::string model_name;
  std::vector<TraceRow> rows;

  bool operator==(const TraceabilityReport&) const = default;
};

/// One guideline per impact, in impact declaration order.
[[nodiscard]] GuidelineSet generate_guidelines(const QualityModel& model);

/// Items for exactly the manual-assessability facts whose entity carries
/// `artifact_type` (directly or inherited), ordered by entity path then
/// attribute id. A tag no entity carries yields an empty checklist plus an
/// `unknown_artifact_type` warning.
[[nodiscard]] ChecklistResult generate_checklist(const QualityModel& model,
                                                 const std::string& artifact_type);

/// Evaluates every quantified requirement in `doc` against `report`.
/// Matching is by metric id, plus exact entity path for fact-level scope;
/// multiple matches all evaluate and the worst verdict wins. Results that do
/// not resolve or that no requirement consumes become `unmapped_result`
/// diagnostics.
[[nodiscard]] ConformanceReport evaluate(const QualityModel& model,
                                         const req::RequirementsDocument& doc,
                                         const MetricReport& report);

[[nodiscard]] TraceabilityReport trace(const QualityModel& model,
                                       const req::RequirementsDocument& doc,
                                       const ConformanceReport* latest = nullptr);

}  // namespace aqm::qa
