#include "aqm/assurance.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace aqm::qa {

namespace {

std::string label_or_path(const ActivityNode* node, const NodeId& id) {
  return node != nullptr ? node->label : id.str();
}

std::string guideline_text(const QualityModel& model, const Impact& impact) {
  const EntityNode* entity = lookup_entity(model, impact.entity);
  const ActivityNode* activity = lookup_activity(model, impact.activity);
  const std::string entity_label = entity != nullptr ? entity->label : impact.entity.str();
  const std::string activity_label = label_or_path(activity, impact.activity);
  if (impact.direction == ImpactDirection::positive) {
    return "Keep " + entity_label + " " + impact.attribute + " — supports " +
           activity_label + ".";
  }
  return "Avoid " + impact.attribute + " in " + entity_label + " — hinders " +
         activity_label + ".";
}

std::string checklist_question(const QualityModel& model, const Fact& fact,
                               const std::vector<NodeId>& impacted) {
  const EntityNode* entity = lookup_entity(model, fact.entity);
  const std::string entity_label = entity != nullptr ? entity->label : fact.entity.str();
  std::string affects;
  for (std::size_t i = 0; i < impacted.size(); ++i) {
    if (i > 0) affects += ", ";
    affects += label_or_path(lookup_activity(model, impacted[i]), impacted[i]);
  }
  if (affects.empty()) affects = "none";
  return "Is " + entity_label + " " + fact.attribute + "? (affects: " + affects + ")";
}

bool comparator_satisfied(req::Comparator cmp, double value, double threshold,
                          double nominal) {
  switch (cmp) {
    case req::Comparator::le: return value <= threshold;
    case req::Comparator::ge: return value >= threshold;
    case req::Comparator::lt: return value < threshold;
    case req::Comparator::gt: return value > threshold;
    case req::Comparator::eq: return value == threshold;
    case req::Comparator::within_abs: return std::abs(value - nominal) <= threshold;
  }
  return false;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::no_data: return "no_data";
    case Verdict::manual_only: return "manual_only";
  }
  return "no_data";
}

bool ConformanceReport::any_fail() const {
  return std::any_of(evaluations.begin(), evaluations.end(),
                     [](const Evaluation& e) { return e.verdict == Verdict::fail; });
}

GuidelineSet generate_guidelines(const QualityModel& model) {
  GuidelineSet set;
  set.model_name = model.name;
  for (const Impact& impact : model.impacts) {
    Guideline item;
    item.kind = impact.direction == ImpactDirection::positive ? GuidelineKind::do_item
                                                              : GuidelineKind::dont_item;
    item.text = guideline_text(model, impact);
    item.entity = impact.entity;
    item.attribute = impact.attribute;
    item.activity = impact.activity;
    item.direction = impact.direction;
    set.items.push_back(std::move(item));
  }
  return set;
}

ChecklistResult generate_checklist(const QualityModel& model,
                                   const std::string& artifact_type) {
  ChecklistResult result;
  result.checklist.model_name = model.name;
  result.checklist.artifact_type = artifact_type;

  std::vector<const Fact*> selected;
  for (const Fact& fact : model.facts) {
    if (fact.assessability != Assessability::manual) continue;
    const auto tags = effective_artifact_types(model, fact.entity);
    if (std::find(tags.begin(), tags.end(), artifact_type) != tags.end()) {
      selected.push_back(&fact);
    }
  }
  std::sort(selected.begin(), selected.end(), [](const Fact* a, const Fact* b) {
    if (a->entity != b->entity) return a->entity < b->entity;
    return a->attribute < b->attribute;
  });

  for (const Fact* fact : selected) {
    ChecklistItem item;
    item.entity = fact->entity;
    item.attribute = fact->attribute;
    for (const Impact& impact : model.impacts) {
      if (impact.entity == fact->entity && impact.attribute == fact->attribute &&
          std::find(item.impacted_activities.begin(), item.impacted_activities.end(),
                    impact.activity) == item.impacted_activities.end()) {
        item.impacted_activities.push_back(impact.activity);
      }
    }
    item.question = checklist_question(model, *fact, item.impacted_activities);
    result.checklist.items.push_back(std::move(item));
  }

  if (result.checklist.items.empty()) {
    bool tag_exists = false;
    std::vector<const EntityNode*> stack;
    for (const EntityNode& root : model.entities) stack.push_back(&root);
    while (!stack.empty() && !tag_exists) {
      const EntityNode* node = stack.back();
      stack.pop_back();
      tag_exists = std::find(node->artifact_types.begin(), node->artifact_types.end(),
                             artifact_type) != node->artifact_types.end();
      for (const EntityNode& child : node->children) stack.push_back(&child);
    }
    if (!tag_exists) {
      result.diagnostics.push_back(
          {"unknown_artifact_type", artifact_type,
           "no entity carries artifact type '" + artifact_type + "'"});
    }
  }

  return result;
}

ConformanceReport evaluate(const QualityModel& model, const req::RequirementsDocument& doc,
                           const MetricReport& report) {
  ConformanceReport out;
  out.tool = report.tool;

  // Results with unresolvable entity paths are diagnosed and never matched,
  // so they cannot shift any verdict.
  std::vector<bool> usable(report.results.size(), true);
  std::vector<bool> consumed(report.results.size(), false);
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    const MetricResult& result = report.results[i];
    if (lookup_entity(model, result.entity) == nullptr) {
      usable[i] = false;
      out.diagnostics.push_back(
          {"unmapped_result", "results[" + std::to_string(i) + "]",
           "entity '" + result.entity.str() + "' is not in the model"});
    }
  }

  for (const req::QuantifiedRequirement& requirement : doc.quantified) {
    Evaluation evaluation;
    evaluation.requirement = requirement;

    if (requirement.is_prose() || !requirement.comparator) {
      evaluation.verdict = Verdict::manual_only;
      out.evaluations.push_back(std::move(evaluation));
      continue;
    }

    for (std::size_t i = 0; i < report.results.size(); ++i) {
      if (!usable[i]) continue;
      const MetricResult& result = report.results[i];
      if (!requirement.metric || result.metric != *requirement.metric) continue;
      if (requirement.scope.is_fact_level() && result.entity != requirement.scope.entity) {
        continue;
      }
      consumed[i] = true;
      EvaluationDetail detail;
      detail.entity = result.entity;
      detail.value = result.value;
      detail.satisfied = comparator_satisfied(*requirement.comparator, result.value,
                                              requirement.threshold, requirement.nominal);
      evaluation.details.push_back(detail);
    }

    if (evaluation.details.empty()) {
      evaluation.verdict = Verdict::no_data;
    } else {
      // fail dominates pass; observed is the worst result's value
      evaluation.verdict = Verdict::pass;
      evaluation.observed = evaluation.details.front().value;
      for (const EvaluationDetail& detail : evaluation.details) {
        if (!detail.satisfied) {
          evaluation.verdict = Verdict::fail;
          evaluation.observed = detail.value;
          break;
        }
      }
    }
    out.evaluations.push_back(std::move(evaluation));
  }

  for (std::size_t i = 0; i < report.results.size(); ++i) {
    if (usable[i] && !consumed[i]) {
      out.diagnostics.push_back(
          {"unmapped_result", "results[" + std::to_string(i) + "]",
           "no quantified requirement consumes metric '" + report.results[i].metric +
               "' at '" + report.results[i].entity.str() + "'"});
    }
  }

  return out;
}

TraceabilityReport trace(const QualityModel& model, const req::RequirementsDocument& doc,
                         const ConformanceReport* latest) {
  TraceabilityReport out;
  out.model_name = model.name;

  for (const NodeId& activity : doc.ranking.ordered) {
    TraceRow row;
    row.activity = activity;
    row.label = label_or_path(lookup_activity(model, activity), activity);

    if (const req::QualitativeRequirement* entry = doc.qualitative_for(activity)) {
      row.dont_care = entry->dont_care;
      row.ratings = entry->ratings;
    } else if (doc.ranking.default_dont_care(activity)) {
      row.default_dont_care = true;
    }

    if (auto refined = req::refine(model, activity); refined.ok()) {
      row.refined = std::move(refined.value());
    }

    std::set<NodeId> subtree;
    if (auto descendants = activity_descendants(model, activity); descendants.ok()) {
      subtree.insert(descendants.value().begin(), descendants.value().end());
    }

    for (std::size_t i = 0; i < doc.quantified.size(); ++i) {
      const req::QuantifiedRequirement& requirement = doc.quantified[i];
      bool belongs = false;
      if (requirement.scope.is_fact_level()) {
        // A fact-level requirement traces to every activity whose subtree
        // the fact impacts.
        for (const Impact& impact : model.impacts) {
          if (impact.entity == requirement.scope.entity &&
              impact.attribute == requirement.scope.attribute &&
              subtree.find(impact.activity) != subtree.end()) {
            belongs = true;
            break;
          }
        }
      } else {
        belongs = subtree.find(requirement.scope.activity) != subtree.end();
      }
      if (!belongs) continue;
      row.quantified.push_back(requirement);
      std::optional<Verdict> verdict;
      if (latest != nullptr && i < latest->evaluations.size() &&
          latest->evaluations[i].requirement == requirement) {
        verdict = latest->evaluations[i].verdict;
      }
      row.verdicts.push_back(verdict);
    }

    out.rows.push_back(std::move(row));
  }

  return out;
}

}  // namespace aqm::qa
