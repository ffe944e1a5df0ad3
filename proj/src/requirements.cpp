#include "aqm/requirements.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace aqm::req {

namespace {

void add(ValidationResult& result, std::string code, std::string path, std::string message) {
  result.diagnostics.push_back({std::move(code), std::move(path), std::move(message)});
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string make_statement(const QualityModel& model, const Impact& impact) {
  const EntityNode* entity = lookup_entity(model, impact.entity);
  const ActivityNode* activity = lookup_activity(model, impact.activity);
  const std::string entity_label = entity != nullptr ? entity->label : impact.entity.str();
  const std::string activity_label =
      activity != nullptr ? activity->label : impact.activity.str();
  if (impact.direction == ImpactDirection::positive) {
    return entity_label + " should be " + impact.attribute + " (supports " + activity_label +
           ")";
  }
  return entity_label + " should not exhibit " + impact.attribute + " (hinders " +
         activity_label + ")";
}

// Ranking position for ordering qualitative entries; entries for unranked
// activities (a document defect) sort last, in insertion order.
std::size_t rank_position(const ActivityRanking& ranking, const NodeId& activity) {
  for (std::size_t i = 0; i < ranking.ordered.size(); ++i) {
    if (ranking.ordered[i] == activity) return i;
  }
  return ranking.ordered.size();
}

Result<RequirementsDocument> set_qualitative_entry(const RequirementsDocument& doc,
                                                   QualitativeRequirement entry) {
  if (!doc.ranking.contains(entry.activity)) {
    return Result<RequirementsDocument>::failure(
        "activity_not_ranked",
        "activity '" + entry.activity.str() + "' does not appear in the ranking");
  }
  RequirementsDocument out = doc;
  for (QualitativeRequirement& existing : out.qualitative) {
    if (existing.activity == entry.activity) {
      existing = std::move(entry);
      return out;
    }
  }
  const std::size_t position = rank_position(out.ranking, entry.activity);
  auto insert_at = out.qualitative.begin();
  while (insert_at != out.qualitative.end() &&
         rank_position(out.ranking, insert_at->activity) <= position) {
    ++insert_at;
  }
  out.qualitative.insert(insert_at, std::move(entry));
  return out;
}

}  // namespace

bool ActivityRanking::contains(const NodeId& activity) const {
  return std::find(ordered.begin(), ordered.end(), activity) != ordered.end();
}

bool ActivityRanking::default_dont_care(const NodeId& activity) const {
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (ordered[i] == activity) return i >= cutoff;
  }
  return false;
}

std::string_view to_string(Comparator c) {
  switch (c) {
    case Comparator::le: return "le";
    case Comparator::ge: return "ge";
    case Comparator::lt: return "lt";
    case Comparator::gt: return "gt";
    case Comparator::eq: return "eq";
    case Comparator::within_abs: return "within_abs";
  }
  return "le";
}

std::optional<Comparator> comparator_from_string(std::string_view s) {
  if (s == "le") return Comparator::le;
  if (s == "ge") return Comparator::ge;
  if (s == "lt") return Comparator::lt;
  if (s == "gt") return Comparator::gt;
  if (s == "eq") return Comparator::eq;
  if (s == "within_abs") return Comparator::within_abs;
  return std::nullopt;
}

RequirementScope RequirementScope::fact(NodeId entity, std::string attribute) {
  RequirementScope scope;
  scope.entity = std::move(entity);
  scope.attribute = std::move(attribute);
  return scope;
}

RequirementScope RequirementScope::for_activity(NodeId activity) {
  RequirementScope scope;
  scope.activity = std::move(activity);
  return scope;
}

std::string RequirementScope::str() const {
  if (is_fact_level()) return "fact " + fact_key(entity, attribute);
  return "activity " + activity.str();
}

const QualitativeRequirement* RequirementsDocument::qualitative_for(
    const NodeId& activity) const {
  for (const QualitativeRequirement& entry : qualitative) {
    if (entry.activity == activity) return &entry;
  }
  return nullptr;
}

Result<std::vector<NodeId>> derive_activities(const QualityModel& model,
                                              const std::vector<Stakeholder>& stakeholders) {
  std::vector<NodeId> out;
  for (const Stakeholder& stakeholder : stakeholders) {
    for (const NodeId& activity : stakeholder.activities) {
      if (lookup_activity(model, activity) == nullptr) {
        return Result<std::vector<NodeId>>::failure(
            "unresolved_stakeholder_activity",
            "stakeholder '" + stakeholder.id + "' names activity '" + activity.str() +
                "', which is not in the model");
      }
      if (std::find(out.begin(), out.end(), activity) == out.end()) {
        out.push_back(activity);
      }
    }
  }
  return out;
}

Result<ActivityRanking> rank_activities(const std::vector<NodeId>& activities,
                                        const std::vector<NodeId>& ordering,
                                        std::size_t cutoff) {
  std::map<std::string, int> balance;
  for (const NodeId& activity : activities) balance[activity.str()] += 1;
  for (const NodeId& activity : ordering) balance[activity.str()] -= 1;

  std::vector<std::string> missing;
  std::vector<std::string> extra;
  for (const auto& [path, count] : balance) {
    for (int i = 0; i < count; ++i) missing.push_back(path);
    for (int i = 0; i < -count; ++i) extra.push_back(path);
  }
  if (!missing.empty() || !extra.empty()) {
    std::string message = "ordering is not a permutation of the activity list";
    if (!missing.empty()) message += "; missing: " + join(missing, ", ");
    if (!extra.empty()) message += "; extra or duplicate: " + join(extra, ", ");
    return Result<ActivityRanking>::failure("ranking_not_permutation", message);
  }
  if (cutoff > ordering.size()) {
    return Result<ActivityRanking>::failure(
        "cutoff_out_of_range", "cutoff " + std::to_string(cutoff) + " exceeds list length " +
                                   std::to_string(ordering.size()));
  }
  return ActivityRanking{ordering, cutoff};
}

Result<RequirementsDocument> set_qualitative(const RequirementsDocument& doc,
                                             const NodeId& activity,
                                             std::vector<std::string> ratings) {
  QualitativeRequirement entry;
  entry.activity = activity;
  entry.ratings = std::move(ratings);
  return set_qualitative_entry(doc, std::move(entry));
}

Result<RequirementsDocument> set_qualitative(const RequirementsDocument& doc,
                                             const NodeId& activity, DontCare) {
  QualitativeRequirement entry;
  entry.activity = activity;
  entry.dont_care = true;
  return set_qualitative_entry(doc, std::move(entry));
}

Result<std::vector<RefinedRequirement>> refine(const QualityModel& model,
                                               const NodeId& activity) {
  auto subtree = activity_descendants(model, activity);
  if (!subtree.ok()) {
    return Result<std::vector<RefinedRequirement>>(subtree.error());
  }
  std::set<NodeId> targets(subtree.value().begin(), subtree.value().end());

  std::vector<RefinedRequirement> out;
  for (const Impact& impact : model.impacts) {
    if (targets.find(impact.activity) == targets.end()) continue;
    RefinedRequirement requirement;
    requirement.activity = impact.activity;
    requirement.entity = impact.entity;
    requirement.attribute = impact.attribute;
    requirement.direction = impact.direction;
    requirement.statement = make_statement(model, impact);
    out.push_back(std::move(requirement));
  }
  return out;
}

Result<RequirementsDocument> quantify(const RequirementsDocument& doc,
                                      const QualityModel& model,
                                      const QuantifiedRequirement& requirement) {
  using R = Result<RequirementsDocument>;
  const RequirementScope& scope = requirement.scope;

  if (requirement.constraint.has_value() == requirement.comparator.has_value()) {
    return R::failure("quantified_conflict",
                      "a requirement carries either a comparator or a prose constraint");
  }
  if (requirement.comparator && !requirement.metric) {
    return R::failure("quantified_conflict", "a numeric requirement needs a metric id");
  }
  if (scope.is_fact_level()) {
    const Fact* fact = lookup_fact(model, scope.entity, scope.attribute);
    if (fact == nullptr) {
      return R::failure("dangling_quantified_fact",
                        "no fact '" + fact_key(scope.entity, scope.attribute) +
                            "' in model '" + model.name + "'");
    }
    if (requirement.comparator) {
      if (!fact->metric || fact->metric->id != *requirement.metric) {
        return R::failure("fact_not_quantifiable",
                          "fact '" + fact_key(scope.entity, scope.attribute) +
                              "' is not quantifiable with metric '" + *requirement.metric +
                              "' - extend the model");
      }
      if (requirement.unit != fact->metric->unit) {
        return R::failure("unit_mismatch", "unit '" + requirement.unit +
                                               "' does not match metric unit '" +
                                               fact->metric->unit + "'");
      }
    }
  } else {
    if (lookup_activity(model, scope.activity) == nullptr) {
      return R::failure("dangling_quantified_activity",
                        "no activity with path '" + scope.activity.str() + "'");
    }
  }

  RequirementsDocument out = doc;
  out.quantified.push_back(requirement);
  return out;
}

ValidationResult validate_document(const QualityModel& model, const RequirementsDocument& doc) {
  ValidationResult result;

  if (doc.model_name != model.name) {
    add(result, "model_name_mismatch", "model_name",
        "document targets model '" + doc.model_name + "' but '" + model.name +
            "' was supplied");
  }

  std::set<std::string> stakeholder_ids;
  for (const Stakeholder& stakeholder : doc.stakeholders) {
    if (!stakeholder_ids.insert(stakeholder.id).second) {
      add(result, "duplicate_stakeholder", stakeholder.id,
          "stakeholder '" + stakeholder.id + "' is declared twice");
    }
    for (const NodeId& activity : stakeholder.activities) {
      if (lookup_activity(model, activity) == nullptr) {
        add(result, "dangling_stakeholder_activity",
            "stakeholders[" + stakeholder.id + "]",
            "activity '" + activity.str() + "' is not in the model");
      }
    }
  }

  for (const NodeId& activity : doc.ranking.ordered) {
    if (lookup_activity(model, activity) == nullptr) {
      add(result, "dangling_ranked_activity", activity.str(),
          "ranked activity '" + activity.str() + "' is not in the model");
    }
  }
  if (doc.ranking.cutoff > doc.ranking.ordered.size()) {
    add(result, "cutoff_out_of_range", "ranking.cutoff",
        "cutoff " + std::to_string(doc.ranking.cutoff) + " exceeds list length " +
            std::to_string(doc.ranking.ordered.size()));
  }
  // An empty ranking means steps 2-5 have not happened yet; only check the
  // permutation once one exists and the stakeholder references resolve.
  if (!doc.ranking.ordered.empty()) {
    auto derived = derive_activities(model, doc.stakeholders);
    if (derived.ok()) {
      auto ranked = rank_activities(derived.value(), doc.ranking.ordered,
                                    std::min(doc.ranking.cutoff, doc.ranking.ordered.size()));
      if (!ranked.ok() && ranked.error().code == "ranking_not_permutation") {
        add(result, "ranking_not_permutation", "ranking.ordered", ranked.error().message);
      }
    }
  }

  std::set<NodeId> qualitative_seen;
  for (std::size_t i = 0; i < doc.qualitative.size(); ++i) {
    const QualitativeRequirement& entry = doc.qualitative[i];
    const std::string path = "qualitative[" + std::to_string(i) + "]";
    if (entry.dont_care && !entry.ratings.empty()) {
      add(result, "qualitative_conflict", path,
          "entry for '" + entry.activity.str() + "' is both don't-care and rated");
    }
    if (!doc.ranking.contains(entry.activity)) {
      add(result, "qualitative_not_ranked", path,
          "activity '" + entry.activity.str() + "' does not appear in the ranking");
    }
    if (!qualitative_seen.insert(entry.activity).second) {
      add(result, "duplicate_qualitative", path,
          "two qualitative entries target '" + entry.activity.str() + "'");
    }
  }

  for (std::size_t i = 0; i < doc.refined.size(); ++i) {
    const RefinedRequirement& entry = doc.refined[i];
    const std::string path = "refined[" + std::to_string(i) + "]";
    bool matched = false;
    for (const Impact& impact : model.impacts) {
      if (impact.entity == entry.entity && impact.attribute == entry.attribute &&
          impact.direction == entry.direction && entry.activity == impact.activity) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      add(result, "unknown_refined_impact", path,
          "no impact '" + fact_key(entry.entity, entry.attribute) + " -> " +
              entry.activity.str() + "' in the model");
    }
  }

  for (std::size_t i = 0; i < doc.quantified.size(); ++i) {
    const QuantifiedRequirement& entry = doc.quantified[i];
    const std::string path = "quantified[" + std::to_string(i) + "]";
    if (entry.constraint.has_value() == entry.comparator.has_value() ||
        (entry.comparator && !entry.metric)) {
      add(result, "quantified_conflict", path,
          "a requirement carries either a comparator plus metric or a prose constraint");
      continue;
    }
    if (entry.scope.is_fact_level()) {
      const Fact* fact = lookup_fact(model, entry.scope.entity, entry.scope.attribute);
      if (fact == nullptr) {
        add(result, "dangling_quantified_fact", path,
            "no fact '" + fact_key(entry.scope.entity, entry.scope.attribute) + "' in model");
        continue;
      }
      if (entry.comparator) {
        if (!fact->metric || fact->metric->id != *entry.metric) {
          add(result, "fact_not_quantifiable", path,
              "fact '" + fact_key(entry.scope.entity, entry.scope.attribute) +
                  "' does not declare metric '" + entry.metric.value_or("") + "'");
        } else if (entry.unit != fact->metric->unit) {
          add(result, "unit_mismatch", path,
              "unit '" + entry.unit + "' does not match metric unit '" + fact->metric->unit +
                  "'");
        }
      }
    } else if (lookup_activity(model, entry.scope.activity) == nullptr) {
      add(result, "dangling_quantified_activity", path,
          "no activity with path '" + entry.scope.activity.str() + "'");
    }
  }

  return result;
}

}  // namespace aqm::req
