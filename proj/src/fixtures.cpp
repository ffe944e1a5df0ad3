#include "aqm/fixtures.hpp"

namespace aqm::fixtures {

namespace {

ActivityNode activity(const char* path, std::string label,
                      std::vector<ActivityNode> children = {}) {
  ActivityNode node;
  node.id = NodeId::parse(path);
  node.label = std::move(label);
  node.children = std::move(children);
  return node;
}

EntityNode entity(const char* path, std::string label, std::vector<std::string> artifact_types,
                  std::vector<EntityNode> children = {}) {
  EntityNode node;
  node.id = NodeId::parse(path);
  node.label = std::move(label);
  node.artifact_types = std::move(artifact_types);
  node.children = std::move(children);
  return node;
}

Fact fact(const char* entity_path, std::string attribute, Assessability assessability,
          std::optional<Metric> metric = std::nullopt) {
  Fact out;
  out.entity = NodeId::parse(entity_path);
  out.attribute = std::move(attribute);
  out.assessability = assessability;
  out.metric = std::move(metric);
  return out;
}

Impact impact(const char* entity_path, std::string attribute, const char* activity_path,
              ImpactDirection direction, std::string justification) {
  Impact out;
  out.entity = NodeId::parse(entity_path);
  out.attribute = std::move(attribute);
  out.activity = NodeId::parse(activity_path);
  out.direction = direction;
  out.justification = std::move(justification);
  return out;
}

}  // namespace

QualityModel instrument_cluster_model() {
  QualityModel model;
  model.name = "instrument_cluster";

  model.activities = {
      activity("driving", "Driving"),
      activity("tics_dialog", "TICS Dialog",
               {
                   activity("tics_dialog.view", "View"),
                   activity("tics_dialog.perception", "Perception"),
                   activity("tics_dialog.processing", "Processing"),
                   activity("tics_dialog.input", "Input"),
               }),
      activity("defect_correction", "Defect correction"),
      activity("system_integration", "System integration"),
  };

  model.entities = {
      entity("vehicle", "Vehicle", {},
             {
                 entity("vehicle.driver", "Driver", {}),
                 entity("vehicle.tics", "TICS", {},
                        {
                            entity("vehicle.tics.hardware", "Hardware", {"hardware"},
                                   {
                                       entity("vehicle.tics.hardware.operating_devices",
                                              "Operating Devices", {}),
                                       entity("vehicle.tics.hardware.display",
                                              "Indicators / Display", {},
                                              {
                                                  entity("vehicle.tics.hardware.display."
                                                         "position",
                                                         "Position", {}),
                                              }),
                                       entity("vehicle.tics.hardware.tics_unit", "TICS Unit",
                                              {}),
                                   }),
                            entity("vehicle.tics.software", "Software", {"code"},
                                   {
                                       entity("vehicle.tics.software.output_data",
                                              "Output Data", {},
                                              {
                                                  entity("vehicle.tics.software.output_data."
                                                         "representation",
                                                         "Representation", {}),
                                              }),
                                   }),
                        }),
             }),
  };

  model.attributes = {
      {"appropriateness", "suits its purpose in the given context"},
      {"unambiguousness", "leaves only one reasonable interpretation"},
      {"adaptability", "adjusts to changing conditions"},
  };

  model.facts = {
      fact("vehicle.tics.hardware.display.position", "appropriateness", Assessability::manual,
           Metric{"display_tolerance_deg", "degree",
                  "angular deviation of the mounted display from its specified position"}),
      fact("vehicle.tics.software.output_data.representation", "unambiguousness",
           Assessability::manual),
      fact("vehicle.tics.software.output_data.representation", "adaptability",
           Assessability::semi_automatic),
  };

  model.impacts = {
      impact("vehicle.tics.hardware.display.position", "appropriateness", "driving",
             ImpactDirection::positive,
             "a display placed close to the line of sight lets the driver check information "
             "without looking away from the road"),
      impact("vehicle.tics.software.output_data.representation", "unambiguousness",
             "tics_dialog.processing", ImpactDirection::positive,
             "an unambiguous representation lets the driver judge the priority of the "
             "information at once"),
      impact("vehicle.tics.software.output_data.representation", "adaptability",
             "tics_dialog.perception", ImpactDirection::positive,
             "a representation that adapts to the driving situation keeps the time needed to "
             "perceive the output short"),
  };

  return model;
}

req::RequirementsDocument instrument_cluster_requirements() {
  req::RequirementsDocument doc;
  doc.model_name = "instrument_cluster";
  doc.stakeholders = {
      {"driver", "Driver", {NodeId::parse("driving"), NodeId::parse("tics_dialog")}},
      {"oem", "OEM",
       {NodeId::parse("system_integration"), NodeId::parse("defect_correction")}},
  };
  return doc;
}

qa::MetricReport display_position_report() {
  qa::MetricReport report;
  report.tool = "mount_gauge";
  report.results = {
      {"display_tolerance_deg", NodeId::parse("vehicle.tics.hardware.display.position"), 1.2},
  };
  return report;
}

QualityModel maintainability_model() {
  QualityModel model;
  model.name = "maintainability";

  model.activities = {
      activity("maintenance", "Maintenance",
               {
                   activity("maintenance.concept_location", "Concept Location"),
                   activity("maintenance.impact_analysis", "Impact Analysis"),
                   activity("maintenance.coding", "Coding"),
                   activity("maintenance.modification", "Modification"),
               }),
  };

  model.entities = {
      entity("source_code", "Source Code", {"code"},
             {
                 entity("source_code.identifiers", "Identifiers", {}),
                 entity("source_code.variables", "Variables", {}),
             }),
      entity("organisation", "Organisation", {"organisation"},
             {
                 entity("organisation.infrastructure", "Infrastructure", {},
                        {
                            entity("organisation.infrastructure.debugger", "Debugger", {}),
                        }),
             }),
  };

  model.attributes = {
      {"consistency", "follows one rule throughout"},
      {"completeness", "covers everything it is supposed to cover"},
      {"conciseness", "expresses its purpose without excess"},
      {"redundancy", "repeats information already present elsewhere"},
      {"superfluousness", "serves no purpose at all"},
      {"existence", "is present in the project at all"},
  };

  model.facts = {
      fact("source_code.identifiers", "conciseness", Assessability::semi_automatic),
      fact("source_code.variables", "superfluousness", Assessability::automatic,
           Metric{"needless_variables", "count", "number of declared variables never read"}),
      fact("organisation.infrastructure.debugger", "existence", Assessability::manual),
  };

  model.impacts = {
      impact("source_code.identifiers", "conciseness", "maintenance.concept_location",
             ImpactDirection::positive,
             "concise identifier names make it quicker to locate the concept behind a piece "
             "of code"),
      impact("source_code.variables", "superfluousness", "maintenance.modification",
             ImpactDirection::negative,
             "variables that serve no purpose obscure which state a modification must "
             "preserve"),
      impact("organisation.infrastructure.debugger", "existence", "maintenance.coding",
             ImpactDirection::positive,
             "having a debugger available shortens the feedback loop while coding"),
  };

  return model;
}

req::RequirementsDocument maintainability_requirements() {
  req::RequirementsDocument doc;
  doc.model_name = "maintainability";
  doc.stakeholders = {
      {"developer", "Developer", {NodeId::parse("maintenance")}},
  };
  return doc;
}

}  // namespace aqm::fixtures
