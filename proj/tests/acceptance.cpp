// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails. Run through ctest or directly.

#include <cstddef>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aqm/assurance.hpp"
#include "aqm/fixtures.hpp"
#include "aqm/model.hpp"
#include "aqm/model_io.hpp"
#include "aqm/requirements.hpp"
#include "aqm/requirements_io.hpp"
#include "aqm/assurance_io.hpp"
#include "aqm/validate.hpp"
#include "support/cli_runner.hpp"
#include "support/random_models.hpp"

using namespace aqm;
using req::Comparator;

namespace {

/// Collects failure details; empty means the criterion passed.
class Failures {
 public:
  void add(const std::string& detail) {
    ++count_;
    if (count_ <= 5) {
      if (!text_.empty()) text_ += "; ";
      text_ += detail;
    } else if (count_ == 6) {
      text_ += "; ...";
    }
  }
  void require(bool ok, const std::string& detail) {
    if (!ok) add(detail);
  }
  [[nodiscard]] bool any() const { return count_ > 0; }
  [[nodiscard]] std::string text() const { return text_; }

 private:
  std::string text_;
  std::size_t count_ = 0;
};

std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(AQM_FIXTURE_DIR) / name;
}

bool path_within(const std::string& candidate, const std::string& root) {
  return candidate == root || candidate.rfind(root + ".", 0) == 0;
}

Result<QualityModel, io::ParseError> load_fixture_model(const std::string& name) {
  return io::parse_model(testing::slurp(fixture_path(name)));
}

std::string criterion_case_study() {
  Failures f;
  const auto loaded = load_fixture_model("instrument_cluster.model.json");
  if (!loaded.ok()) {
    return "cannot load shipped fixture: " + loaded.error().message;
  }
  const QualityModel& model = loaded.value();
  req::RequirementsDocument doc = fixtures::instrument_cluster_requirements();
  f.require(doc.model_name == model.name, "document names a different model");

  // steps 1 and 2: derive, then rank most important first
  const auto derived = req::derive_activities(model, doc.stakeholders);
  if (!derived.ok()) return "derive failed: " + derived.error().message;
  std::vector<std::string> derived_paths;
  for (const auto& id : derived.value()) derived_paths.push_back(id.str());
  f.require(derived_paths == std::vector<std::string>{"driving", "tics_dialog",
                                                      "system_integration",
                                                      "defect_correction"},
            "derived activities differ from the case study");

  const std::vector<NodeId> order = {
      NodeId::parse("driving"), NodeId::parse("tics_dialog"),
      NodeId::parse("defect_correction"), NodeId::parse("system_integration")};
  const auto ranking = req::rank_activities(derived.value(), order, 4);
  if (!ranking.ok()) return "rank failed: " + ranking.error().message;
  doc.ranking = ranking.value();

  // step 3: the published rating strings, verbatim
  const std::vector<std::pair<std::string, std::vector<std::string>>> table = {
      {"driving", {"comfortable", "safe", "not distracted"}},
      {"tics_dialog",
       {"informative", "attractive", "correct", "current", "agile", "dynamic", "safe",
        "reliable", "traditional", "accurate", "authentic", "intuitive", "improved"}},
      {"defect_correction", {"minimal"}},
      {"system_integration",
       {"minimal hardware requirements", "using existing hardware components",
        "interoperable with different hardware"}},
  };
  for (const auto& [activity, ratings] : table) {
    auto next = req::set_qualitative(doc, NodeId::parse(activity), ratings);
    if (!next.ok()) return "set_qualitative failed for " + activity;
    doc = next.value();
  }
  for (const auto& [activity, ratings] : table) {
    const auto* entry = doc.qualitative_for(NodeId::parse(activity));
    if (entry == nullptr || entry->dont_care || entry->ratings != ratings) {
      f.add("ratings for " + activity + " do not match Table 1");
    }
  }

  // step 4: the three refined requirements
  const auto direct = req::refine(model, NodeId::parse("driving"));
  if (!direct.ok()) return "refine(driving) failed";
  f.require(direct.value().size() == 1, "refine(driving) should yield one requirement");
  if (direct.value().size() == 1) {
    const auto& entry = direct.value().front();
    f.require(entry.entity.str() == "vehicle.tics.hardware.display.position" &&
                  entry.attribute == "appropriateness" &&
                  entry.direction == ImpactDirection::positive &&
                  entry.activity.str() == "driving",
              "refine(driving) tuple differs");
  }
  const auto dialog = req::refine(model, NodeId::parse("tics_dialog"));
  if (!dialog.ok()) return "refine(tics_dialog) failed";
  f.require(dialog.value().size() == 2, "refine(tics_dialog) should yield two requirements");
  if (dialog.value().size() == 2) {
    const auto& first = dialog.value()[0];
    const auto& second = dialog.value()[1];
    f.require(first.entity.str() == "vehicle.tics.software.output_data.representation" &&
                  first.attribute == "unambiguousness" &&
                  first.direction == ImpactDirection::positive &&
                  first.activity.str() == "tics_dialog.processing",
              "first tics_dialog refinement differs");
    f.require(second.entity.str() == "vehicle.tics.software.output_data.representation" &&
                  second.attribute == "adaptability" &&
                  second.direction == ImpactDirection::positive &&
                  second.activity.str() == "tics_dialog.perception",
              "second tics_dialog refinement differs");
    doc.refined = direct.value();
    doc.refined.push_back(first);
    doc.refined.push_back(second);
  }

  // step 5: the display tolerance, exactly 1.5 degrees around the nominal position
  req::QuantifiedRequirement tolerance;
  tolerance.scope = req::RequirementScope::fact(
      NodeId::parse("vehicle.tics.hardware.display.position"), "appropriateness");
  tolerance.metric = "display_tolerance_deg";
  tolerance.comparator = Comparator::within_abs;
  tolerance.threshold = 1.5;
  tolerance.unit = "degree";
  const auto quantified = req::quantify(doc, model, tolerance);
  if (!quantified.ok()) return "quantify failed: " + quantified.error().message;
  doc = quantified.value();
  f.require(doc.quantified.size() == 1 && doc.quantified.front() == tolerance &&
                doc.quantified.front().threshold == 1.5,
            "stored quantified requirement differs");
  f.require(req::validate_document(model, doc).ok(), "final document fails validation");
  return f.text();
}

std::string criterion_maintainability() {
  Failures f;
  const auto loaded = load_fixture_model("maintainability.model.json");
  if (!loaded.ok()) {
    return "cannot load shipped fixture: " + loaded.error().message;
  }
  const qa::GuidelineSet set = qa::generate_guidelines(loaded.value());

  bool found_do = false;
  bool found_dont = false;
  for (const auto& item : set.items) {
    if (item.entity.str() == "source_code.identifiers" && item.attribute == "conciseness" &&
        item.activity.str() == "maintenance.concept_location") {
      found_do = item.kind == qa::GuidelineKind::do_item &&
                 item.direction == ImpactDirection::positive;
    }
    if (item.entity.str() == "source_code.variables" &&
        item.attribute == "superfluousness" &&
        item.activity.str() == "maintenance.modification") {
      found_dont = item.kind == qa::GuidelineKind::dont_item &&
                   item.direction == ImpactDirection::negative;
    }
  }
  f.require(found_do, "missing do-item for identifiers/conciseness -> concept_location");
  f.require(found_dont, "missing dont-item for variables/superfluousness -> modification");
  f.require(set.items.size() == loaded.value().impacts.size(),
            "guideline count differs from impact count");
  return f.text();
}

std::string criterion_oracle_equivalence() {
  Failures f;
  testing::Rng rng(424242);
  const std::vector<std::string> tags = {"code", "documentation", "hardware", "organisation",
                                         "zz_unknown"};
  std::size_t checked_refines = 0;
  std::size_t checked_checklists = 0;
  for (int round = 0; round < 500; ++round) {
    const QualityModel model = testing::random_model(rng);
    const auto entities = testing::all_entities(model);

    for (const auto* node : testing::all_activities(model)) {
      const auto refined = req::refine(model, node->id);
      if (!refined.ok()) {
        f.add("refine failed on a valid model");
        continue;
      }
      std::vector<std::tuple<std::string, std::string, std::string, ImpactDirection>> expected;
      for (const auto& impact : model.impacts) {
        if (path_within(impact.activity.str(), node->id.str())) {
          expected.emplace_back(impact.entity.str(), impact.attribute,
                                impact.activity.str(), impact.direction);
        }
      }
      std::vector<std::tuple<std::string, std::string, std::string, ImpactDirection>> actual;
      for (const auto& entry : refined.value()) {
        actual.emplace_back(entry.entity.str(), entry.attribute, entry.activity.str(),
                            entry.direction);
      }
      if (actual != expected) {
        f.add("refine mismatch at " + node->id.str() + " in round " +
              std::to_string(round));
      }
      ++checked_refines;
    }

    for (const auto& tag : tags) {
      const qa::ChecklistResult result = qa::generate_checklist(model, tag);
      std::set<std::pair<std::string, std::string>> expected;
      for (const auto& fact : model.facts) {
        if (fact.assessability != Assessability::manual) continue;
        bool tagged = false;
        for (const auto* entity : entities) {
          if (!path_within(fact.entity.str(), entity->id.str())) continue;
          for (const auto& candidate : entity->artifact_types) {
            tagged = tagged || candidate == tag;
          }
        }
        if (tagged) expected.insert({fact.entity.str(), fact.attribute});
      }
      std::set<std::pair<std::string, std::string>> actual;
      for (const auto& item : result.checklist.items) {
        actual.insert({item.entity.str(), item.attribute});
      }
      if (actual != expected) {
        f.add("checklist mismatch for tag " + tag + " in round " + std::to_string(round));
      }
      ++checked_checklists;
    }
  }
  f.require(checked_refines > 0 && checked_checklists > 0, "no comparisons ran");
  return f.text();
}

std::string criterion_round_trip() {
  Failures f;
  testing::Rng rng(515151);
  for (int round = 0; round < 1000; ++round) {
    const QualityModel model = testing::random_model(rng);
    const std::string first = io::serialize_model(model);
    const std::string second = io::serialize_model(model);
    if (first != second) {
      f.add("serialization not deterministic in round " + std::to_string(round));
      continue;
    }
    const auto parsed = io::parse_model(first);
    if (!parsed.ok()) {
      f.add("round " + std::to_string(round) + " failed to parse: " +
            parsed.error().message);
      continue;
    }
    if (!(parsed.value() == model)) {
      f.add("round " + std::to_string(round) + " did not round-trip");
      continue;
    }
    if (io::serialize_model(parsed.value()) != first) {
      f.add("round " + std::to_string(round) + " reserialized differently");
    }
  }
  return f.text();
}

std::string criterion_single_defect() {
  Failures f;
  testing::Rng rng(616161);
  using ModelInjector = std::string (*)(testing::Rng&, QualityModel&);
  const std::vector<ModelInjector> model_injectors = {
      &testing::inject_dangling_impact_entity, &testing::inject_dangling_impact_activity,
      &testing::inject_duplicate_fact,         &testing::inject_duplicate_impact,
      &testing::inject_unknown_attribute,      &testing::inject_bad_segment,
  };
  for (const auto injector : model_injectors) {
    for (int round = 0; round < 30; ++round) {
      QualityModel model = testing::random_model(rng);
      const std::string code = injector(rng, model);
      if (!validate_model(model).has(code)) {
        f.add("missed model defect " + code + " in round " + std::to_string(round));
      }
    }
  }
  using DocInjector = std::string (*)(testing::Rng&, req::RequirementsDocument&);
  const std::vector<DocInjector> doc_injectors = {
      &testing::inject_cutoff_out_of_range,
      &testing::inject_ranking_not_permutation,
  };
  for (const auto injector : doc_injectors) {
    for (int round = 0; round < 30; ++round) {
      const QualityModel model = testing::random_model(rng);
      req::RequirementsDocument doc = testing::random_document(rng, model);
      const std::string code = injector(rng, doc);
      if (!req::validate_document(model, doc).has(code)) {
        f.add("missed document defect " + code + " in round " + std::to_string(round));
      }
    }
  }
  return f.text();
}

std::string criterion_conformance_arithmetic() {
  Failures f;
  const auto loaded = load_fixture_model("instrument_cluster.model.json");
  if (!loaded.ok()) return "cannot load shipped fixture";
  const QualityModel& model = loaded.value();

  req::RequirementsDocument doc = fixtures::instrument_cluster_requirements();
  const auto derived = req::derive_activities(model, doc.stakeholders);
  if (!derived.ok()) return "derive failed";
  const auto ranking = req::rank_activities(
      derived.value(),
      {NodeId::parse("driving"), NodeId::parse("tics_dialog"),
       NodeId::parse("defect_correction"), NodeId::parse("system_integration")},
      4);
  if (!ranking.ok()) return "rank failed";
  doc.ranking = ranking.value();
  req::QuantifiedRequirement tolerance;
  tolerance.scope = req::RequirementScope::fact(
      NodeId::parse("vehicle.tics.hardware.display.position"), "appropriateness");
  tolerance.metric = "display_tolerance_deg";
  tolerance.comparator = Comparator::within_abs;
  tolerance.threshold = 1.5;
  tolerance.unit = "degree";
  const auto quantified = req::quantify(doc, model, tolerance);
  if (!quantified.ok()) return "quantify failed";
  doc = quantified.value();

  const auto report_for = [](double value) {
    qa::MetricReport report = fixtures::display_position_report();
    report.results.front().value = value;
    return report;
  };
  for (double value : {0.0, 1.5, -1.5}) {
    const qa::ConformanceReport result = qa::evaluate(model, doc, report_for(value));
    if (result.evaluations.size() != 1 ||
        result.evaluations.front().verdict != qa::Verdict::pass) {
      f.add("expected pass for observed " + std::to_string(value));
    }
  }
  for (double value : {1.5000001, -2.0}) {
    const qa::ConformanceReport result = qa::evaluate(model, doc, report_for(value));
    if (result.evaluations.size() != 1 ||
        result.evaluations.front().verdict != qa::Verdict::fail) {
      f.add("expected fail for observed " + std::to_string(value));
    }
  }
  qa::MetricReport absent;
  absent.tool = "mount_gauge";
  const qa::ConformanceReport undecided = qa::evaluate(model, doc, absent);
  f.require(undecided.evaluations.size() == 1 &&
                undecided.evaluations.front().verdict == qa::Verdict::no_data,
            "expected no_data when the metric is absent");

  // the CLI agrees through its exit codes
  testing::TempDir dir("acceptance_cli");
  if (testing::run_cli("init --template instrument-cluster", dir.path()).exit_code != 0) {
    f.add("cli init failed");
    return f.text();
  }
  if (testing::run_cli(
          "rank instrument_cluster.model.json --req instrument_cluster.req.json "
          "--order driving,tics_dialog,defect_correction,system_integration",
          dir.path())
          .exit_code != 0) {
    f.add("cli rank failed");
    return f.text();
  }
  if (testing::run_cli(
          "quantify instrument_cluster.model.json --req instrument_cluster.req.json "
          "--scope fact:vehicle.tics.hardware.display.position:appropriateness "
          "--metric display_tolerance_deg --cmp within_abs --threshold 1.5 --unit degree",
          dir.path())
          .exit_code != 0) {
    f.add("cli quantify failed");
    return f.text();
  }
  const auto cli_verdict = [&](const qa::MetricReport& report) {
    testing::spit(dir.file("observed.metrics.json"), io::serialize_metric_report(report));
    return testing::run_cli(
               "evaluate instrument_cluster.model.json --req instrument_cluster.req.json "
               "--report observed.metrics.json",
               dir.path())
        .exit_code;
  };
  for (double value : {0.0, 1.5, -1.5}) {
    if (cli_verdict(report_for(value)) != 0) {
      f.add("cli expected exit 0 for observed " + std::to_string(value));
    }
  }
  for (double value : {1.5000001, -2.0}) {
    if (cli_verdict(report_for(value)) != 1) {
      f.add("cli expected exit 1 for observed " + std::to_string(value));
    }
  }
  f.require(cli_verdict(absent) == 0, "cli expected exit 0 when the metric is absent");
  return f.text();
}

std::string criterion_matrix_export() {
  Failures f;
  const auto loaded = load_fixture_model("instrument_cluster.model.json");
  if (!loaded.ok()) return "cannot load shipped fixture";
  const QualityModel& model = loaded.value();
  const std::string csv = io::export_matrix(model);

  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream fields_in(line);
    while (std::getline(fields_in, field, ',')) fields.push_back(field);
    rows.push_back(fields);
  }
  if (rows.empty()) return "matrix is empty";

  std::set<std::string> leaves;
  for (const auto* leaf : leaf_activities(model)) leaves.insert(leaf->id.str());
  std::size_t expected = 0;
  for (const auto& impact : model.impacts) {
    if (leaves.count(impact.activity.str()) > 0) ++expected;
  }
  std::size_t filled = 0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    for (std::size_t c = 1; c < rows[r].size(); ++c) {
      if (rows[r][c] == "+" || rows[r][c] == "-") ++filled;
    }
  }
  f.require(filled == expected,
            "non-empty cell count " + std::to_string(filled) + " differs from " +
                std::to_string(expected));

  std::size_t driving_column = 0;
  for (std::size_t c = 1; c < rows[0].size(); ++c) {
    if (rows[0][c] == "driving") driving_column = c;
  }
  f.require(driving_column > 0, "no driving column");
  bool found = false;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r][0] == "vehicle.tics.hardware.display.position | appropriateness") {
      found = true;
      if (driving_column >= rows[r].size() || rows[r][driving_column] != "+") {
        f.add("the display position cell under driving is not +");
      }
    }
  }
  f.require(found, "no display position row");
  return f.text();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::string (*)()>> criteria = {
      {"case-study reproduction", &criterion_case_study},
      {"maintainability guidelines", &criterion_maintainability},
      {"oracle equivalence on 500 random models", &criterion_oracle_equivalence},
      {"round-trip on 1000 random models", &criterion_round_trip},
      {"single-defect detection across 8 classes", &criterion_single_defect},
      {"conformance arithmetic and exit codes", &criterion_conformance_arithmetic},
      {"matrix export cell accounting", &criterion_matrix_export},
  };
  bool all_passed = true;
  for (const auto& [name, run] : criteria) {
    const std::string detail = run();
    if (detail.empty()) {
      std::cout << "PASS: " << name << "\n";
    } else {
      std::cout << "FAIL: " << name << " (" << detail << ")\n";
      all_passed = false;
    }
  }
  std::cout << (all_passed ? "acceptance: all criteria passed"
                           : "acceptance: criteria failed")
            << "\n";
  return all_passed ? 0 : 1;
}
