#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aqm/assurance.hpp"
#include "aqm/assurance_io.hpp"
#include "aqm/fixtures.hpp"
#include "aqm/model_io.hpp"
#include "aqm/requirements.hpp"
#include "aqm/requirements_io.hpp"
#include "aqm/validate.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailures = 1;  // validation or conformance failures found
constexpr int kUsage = 2;     // usage or I/O error

bool use_color() {
  return ::isatty(STDOUT_FILENO) != 0 && std::getenv("AQM_NO_COLOR") == nullptr;
}

std::string paint(const std::string& text, const char* sgr) {
  if (!use_color()) return text;
  return std::string("\033[") + sgr + "m" + text + "\033[0m";
}

std::string verdict_text(aqm::qa::Verdict verdict) {
  const std::string name(aqm::qa::to_string(verdict));
  switch (verdict) {
    case aqm::qa::Verdict::pass: return paint(name, "32");
    case aqm::qa::Verdict::fail: return paint(name, "31");
    case aqm::qa::Verdict::no_data: return paint(name, "33");
    case aqm::qa::Verdict::manual_only: return paint(name, "36");
  }
  return name;
}

/// Shortest round-tripping decimal rendering, e.g. 1.5 -> "1.5".
std::string num(double value) { return json(value).dump(); }

std::string dump_json(const json& document) { return document.dump(2) + "\n"; }

int fail_io(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kUsage;
}

int fail_domain(const std::string& code, const std::string& message) {
  std::cerr << "error [" << code << "]: " << message << "\n";
  return kFailures;
}

void print_diagnostics(const std::vector<aqm::Diagnostic>& diagnostics, std::ostream& os) {
  for (const aqm::Diagnostic& diagnostic : diagnostics) {
    os << paint(diagnostic.code, "31") << " at '" << diagnostic.path
       << "': " << diagnostic.message << "\n";
  }
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buffer.str();
}

/// Writes via a temporary in the same directory plus rename, so readers never
/// observe a half-written document.
int write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp(target);
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) return fail_io("cannot write '" + temp.string() + "'");
    out << content;
    out.flush();
    if (!out) return fail_io("cannot write '" + temp.string() + "'");
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    return fail_io("cannot replace '" + path + "'");
  }
  return kOk;
}

int load_model(const std::string& path, aqm::QualityModel& out) {
  const auto text = read_file(path);
  if (!text) return fail_io("cannot read '" + path + "'");
  auto parsed = aqm::io::parse_model(*text);
  if (!parsed.ok()) {
    if (!parsed.error().diagnostics.empty()) {
      std::cerr << "model '" << path << "' is invalid:\n";
      print_diagnostics(parsed.error().diagnostics, std::cerr);
      return kFailures;
    }
    return fail_domain(parsed.error().code, parsed.error().message);
  }
  out = std::move(parsed).value();
  return kOk;
}

/// Loads a requirements document and checks it against the model; every
/// command that takes --req wants both.
int load_document(const std::string& path, const aqm::QualityModel& model,
                  aqm::req::RequirementsDocument& out) {
  const auto text = read_file(path);
  if (!text) return fail_io("cannot read '" + path + "'");
  auto parsed = aqm::io::parse_requirements(*text);
  if (!parsed.ok()) return fail_domain(parsed.error().code, parsed.error().message);
  const aqm::ValidationResult validation = aqm::req::validate_document(model, parsed.value());
  if (!validation.ok()) {
    std::cerr << "document '" << path << "' is inconsistent with the model:\n";
    print_diagnostics(validation.diagnostics, std::cerr);
    return kFailures;
  }
  out = std::move(parsed).value();
  return kOk;
}

int load_report(const std::string& path, aqm::qa::MetricReport& out) {
  const auto text = read_file(path);
  if (!text) return fail_io("cannot read '" + path + "'");
  auto parsed = aqm::io::parse_metric_report(*text);
  if (!parsed.ok()) return fail_domain(parsed.error().code, parsed.error().message);
  out = std::move(parsed).value();
  return kOk;
}

/// Report-style commands print to stdout unless --out is given.
int emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return kOk;
  }
  return write_file_atomic(out_path, content);
}

std::string requirement_text(const aqm::req::QuantifiedRequirement& requirement) {
  std::string out = requirement.scope.str() + ": ";
  if (requirement.is_prose()) {
    return out + "constraint \"" + *requirement.constraint + "\"";
  }
  out += requirement.metric.value_or("?");
  if (requirement.comparator) {
    out += " " + std::string(aqm::req::to_string(*requirement.comparator)) + " " +
           num(requirement.threshold);
    if (*requirement.comparator == aqm::req::Comparator::within_abs &&
        requirement.nominal != 0.0) {
      out += " around " + num(requirement.nominal);
    }
  }
  if (!requirement.unit.empty()) out += " " + requirement.unit;
  return out;
}

std::string refined_text(const aqm::req::RefinedRequirement& entry) {
  return std::string(aqm::to_string(entry.direction)) + " " +
         aqm::fact_key(entry.entity, entry.attribute) + " -> " + entry.activity.str() + ": " +
         entry.statement;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

// ---- subcommand runners ----

struct Options {
  std::string model_path;
  std::string req_path;
  std::string report_path;
  std::string out_path;
  std::string format = "text";
  std::string activity;
  std::string artifact_type;
  std::string order;
  std::size_t cutoff = 0;
  bool cutoff_given = false;
  std::string scope;
  std::string metric;
  std::string cmp;
  double threshold = 0.0;
  double nominal = 0.0;
  bool nominal_given = false;
  std::string unit;
  std::string constraint;
  bool constraint_given = false;
  std::string template_name;
  std::string dir = ".";
};

int run_validate(const Options& options) {
  const auto text = read_file(options.model_path);
  if (!text) return fail_io("cannot read '" + options.model_path + "'");
  auto parsed = aqm::io::parse_model_structure(*text);
  if (!parsed.ok()) {
    if (options.format == "json") {
      json out;
      out["ok"] = false;
      json diagnostics = json::array();
      json entry;
      entry["code"] = parsed.error().code;
      entry["path"] = "";
      entry["message"] = parsed.error().message;
      diagnostics.push_back(std::move(entry));
      out["diagnostics"] = std::move(diagnostics);
      std::cout << dump_json(out);
    } else {
      std::cout << parsed.error().code << ": " << parsed.error().message << "\n";
    }
    return kFailures;
  }
  const aqm::ValidationResult validation = aqm::validate_model(parsed.value());
  if (options.format == "json") {
    json out;
    out["ok"] = validation.ok();
    json diagnostics = json::array();
    for (const aqm::Diagnostic& diagnostic : validation.diagnostics) {
      diagnostics.push_back(aqm::io::to_json(diagnostic));
    }
    out["diagnostics"] = std::move(diagnostics);
    std::cout << dump_json(out);
    return validation.ok() ? kOk : kFailures;
  }
  if (validation.ok()) {
    std::cout << paint("OK", "32") << "\n";
    return kOk;
  }
  print_diagnostics(validation.diagnostics, std::cout);
  return kFailures;
}

int run_rank(const Options& options) {
  aqm::QualityModel model;
  if (const int code = load_model(options.model_path, model); code != kOk) return code;
  aqm::req::RequirementsDocument doc;
  if (const int code = load_document(options.req_path, model, doc); code != kOk) return code;

  auto derived = aqm::req::derive_activities(model, doc.stakeholders);
  if (!derived.ok()) return fail_domain(derived.error().code, derived.error().message);

  std::vector<aqm::NodeId> ordering;
  std::stringstream stream(options.order);
  std::string part;
  while (std::getline(stream, part, ',')) ordering.push_back(aqm::NodeId::parse(part));

  const std::size_t cutoff = options.cutoff_given ? options.cutoff : ordering.size();
  auto ranking = aqm::req::rank_activities(derived.value(), ordering, cutoff);
  if (!ranking.ok()) return fail_domain(ranking.error().code, ranking.error().message);

  doc.ranking = std::move(ranking).value();
  const std::string serialized = aqm::io::serialize_requirements(doc);
  if (const int code = write_file_atomic(options.req_path, serialized); code != kOk) return code;
  if (options.format == "json") {
    std::cout << serialized;
  } else {
    std::cout << "ranked " << doc.ranking.ordered.size() << " activities (cutoff "
              << doc.ranking.cutoff << ")\nwrote " << options.req_path << "\n";
  }
  return kOk;
}

int run_refine(const Options& options) {
  aqm::QualityModel model;
  if (const int code = load_model(options.model_path, model); code != kOk) return code;

  auto refined = aqm::req::refine(model, aqm::NodeId::parse(options.activity));
  if (!refined.ok()) return fail_domain(refined.error().code, refined.error().message);

  if (options.format == "json") {
    json out;
    json entries = json::array();
    for (const auto& entry : refined.value()) entries.push_back(aqm::io::to_json(entry));
    out["refined"] = std::move(entries);
    std::cout << dump_json(out);
  } else {
    for (const auto& entry : refined.value()) std::cout << refined_text(entry) << "\n";
  }

  if (!options.req_path.empty()) {
    aqm::req::RequirementsDocument doc;
    if (const int code = load_document(options.req_path, model, doc); code != kOk) return code;
    std::size_t appended = 0;
    for (const auto& entry : refined.value()) {
      if (std::find(doc.refined.begin(), doc.refined.end(), entry) == doc.refined.end()) {
        doc.refined.push_back(entry);
        ++appended;
      }
    }
    const int code = write_file_atomic(options.req_path, aqm::io::serialize_requirements(doc));
    if (code != kOk) return code;
    if (options.format != "json") {
      std::cout << "appended " << appended << " requirements\nwrote " << options.req_path
                << "\n";
    }
  }
  return kOk;
}

int run_quantify(const Options& options) {
  aqm::QualityModel model;
  if (const int code = load_model(options.model_path, model); code != kOk) return code;
  aqm::req::RequirementsDocument doc;
  if (const int code = load_document(options.req_path, model, doc); code != kOk) return code;

  aqm::req::QuantifiedRequirement requirement;
  if (options.scope.rfind("fact:", 0) == 0) {
    const std::string rest = options.scope.substr(5);
    const std::size_t colon = rest.rfind(':');
    if (colon == std::string::npos) {
      return fail_io("--scope fact form is fact:<entity path>:<attribute>");
    }
    requirement.scope = aqm::req::RequirementScope::fact(
        aqm::NodeId::parse(rest.substr(0, colon)), rest.substr(colon + 1));
  } else if (options.scope.rfind("activity:", 0) == 0) {
    requirement.scope =
        aqm::req::RequirementScope::for_activity(aqm::NodeId::parse(options.scope.substr(9)));
  } else {
    return fail_io("--scope is fact:<entity path>:<attribute> or activity:<path>");
  }

  if (!options.metric.empty()) requirement.metric = options.metric;
  if (!options.cmp.empty()) {
    const auto comparator = aqm::req::comparator_from_string(options.cmp);
    if (!comparator) {
      return fail_io("--cmp must be one of le, ge, lt, gt, eq, within_abs");
    }
    requirement.comparator = *comparator;
    requirement.threshold = options.threshold;
    requirement.nominal = options.nominal;
  } else if (options.nominal_given) {
    return fail_io("--nominal requires --cmp within_abs");
  }
  if (options.nominal_given && requirement.comparator != aqm::req::Comparator::within_abs) {
    return fail_io("--nominal requires --cmp within_abs");
  }
  requirement.unit = options.unit;
  if (options.constraint_given) requirement.constraint = options.constraint;

  auto updated = aqm::req::quantify(doc, model, requirement);
  if (!updated.ok()) return fail_domain(updated.error().code, updated.error().message);

  const std::string serialized = aqm::io::serialize_requirements(updated.value());
  if (const int code = write_file_atomic(options.req_path, serialized); code != kOk) return code;
  if (options.format == "json") {
    std::cout << serialized;
  } else {
    std::cout << "added " << requirement_text(requirement) << "\nwrote " << options.req_path
              << "\n";
  }
  return kOk;
}

int run_checklist(const Options& options) {
  aqm::QualityModel model;
  if (const int code = load_model(options.model_path, model); code != kOk) return code;
  const aqm::qa::ChecklistResult result =
      aqm::qa::generate_checklist(model, options.artifact_type);
  for (const aqm::Diagnostic& diagnostic : result.diagnostics) {
    std::cerr << "warning [" << diagnostic.code << "]: " << diagnostic.message << "\n";
  }
  if (options.format == "json") {
    return emit(dump_json(aqm::io::to_json(result)), options.out_path);
  }
  std::string text = "# Review checklist: " + result.checklist.artifact_type + " (model " +
                     result.checklist.model_name + ")\n\n";
  if (result.checklist.items.empty()) {
    text += "(no items)\n";
  } else {
    for (const aqm::qa::ChecklistItem& item : result.checklist.items) {
      text += "- [ ] " + item.question + "\n      fact: " +
              aqm::fact_key(item.entity, item.attribute) + "\n";
    }
  }
  return emit(text, options.out_path);
}

int run_guidelines(const Options& options) {
  aqm::QualityModel model;
  if (const int code = load_model(options.model_path, model); code != kOk) return code;
  const aqm::qa::GuidelineSet set = aqm::qa::generate_guidelines(model);
  if (options.format == "json") {
    return emit(dump_json(aqm::io::to_json(set)), options.out_path);
  }
  std::string text = "# Quality guidelines (model " + set.model_name + ")\n\n";
  if (set.items.empty()) text += "(no guidelines)\n";
  for (const aqm::qa::Guideline& item : set.items) {
    text += std::string(item.kind == aqm::qa::GuidelineKind::do_item ? "- [do] " : "- [dont] ") +
            item.text + "\n";
  }
  return emit(text, options.out_path);
}

int run_matrix(const Options& options) {
  aqm::QualityModel model;
  if (const int code = load_model(options.model_path, model); code != kOk) return code;
  if (options.format == "json") {
    return emit(dump_json(aqm::io::matrix_json(model)), options.out_path);
  }
  return emit(aqm::io::export_matrix(model), options.out_path);
}

int run_evaluate(const Options& options) {
  aqm::QualityModel model;
  if (const int code = load_model(options.model_path, model); code != kOk) return code;
  aqm::req::RequirementsDocument doc;
  if (const int code = load_document(options.req_path, model, doc); code != kOk) return code;
  aqm::qa::MetricReport report;
  if (const int code = load_report(options.report_path, report); code != kOk) return code;

  const aqm::qa::ConformanceReport conformance = aqm::qa::evaluate(model, doc, report);
  if (options.format == "json") {
    std::cout << dump_json(aqm::io::to_json(conformance));
  } else {
    std::cout << "# Conformance (tool " << conformance.tool << ")\n\n";
    std::size_t failures = 0;
    for (const aqm::qa::Evaluation& evaluation : conformance.evaluations) {
      if (evaluation.verdict == aqm::qa::Verdict::fail) ++failures;
      std::cout << verdict_text(evaluation.verdict) << "  "
                << requirement_text(evaluation.requirement);
      if (evaluation.observed) std::cout << "  observed " << num(*evaluation.observed);
      std::cout << "\n";
    }
    for (const aqm::Diagnostic& diagnostic : conformance.diagnostics) {
      std::cout << "warning [" << diagnostic.code << "] at '" << diagnostic.path
                << "': " << diagnostic.message << "\n";
    }
    std::cout << "failures: " << failures << "\n";
  }
  return conformance.any_fail() ? kFailures : kOk;
}

int run_trace(const Options& options) {
  aqm::QualityModel model;
  if (const int code = load_model(options.model_path, model); code != kOk) return code;
  aqm::req::RequirementsDocument doc;
  if (const int code = load_document(options.req_path, model, doc); code != kOk) return code;

  aqm::qa::ConformanceReport conformance;
  const aqm::qa::ConformanceReport* latest = nullptr;
  if (!options.report_path.empty()) {
    aqm::qa::MetricReport report;
    if (const int code = load_report(options.report_path, report); code != kOk) return code;
    conformance = aqm::qa::evaluate(model, doc, report);
    latest = &conformance;
  }

  const aqm::qa::TraceabilityReport trace = aqm::qa::trace(model, doc, latest);
  if (options.format == "json") {
    std::cout << dump_json(aqm::io::to_json(trace));
    return kOk;
  }
  std::cout << "# Traceability (model " << trace.model_name << ")\n";
  for (std::size_t i = 0; i < trace.rows.size(); ++i) {
    const aqm::qa::TraceRow& row = trace.rows[i];
    std::cout << "\n" << (i + 1) << ". " << row.label << " (" << row.activity.str() << ")\n";
    if (row.dont_care) std::cout << "   don't care\n";
    if (row.default_dont_care) std::cout << "   don't care (by cutoff)\n";
    if (!row.ratings.empty()) std::cout << "   ratings: " << join(row.ratings, ", ") << "\n";
    for (const auto& entry : row.refined) std::cout << "   " << refined_text(entry) << "\n";
    for (std::size_t k = 0; k < row.quantified.size(); ++k) {
      std::cout << "   " << requirement_text(row.quantified[k]);
      if (k < row.verdicts.size() && row.verdicts[k]) {
        std::cout << "  [" << verdict_text(*row.verdicts[k]) << "]";
      }
      std::cout << "\n";
    }
  }
  return kOk;
}

int run_init(const Options& options) {
  aqm::QualityModel model;
  aqm::req::RequirementsDocument doc;
  std::string prefix;
  if (options.template_name == "instrument-cluster") {
    model = aqm::fixtures::instrument_cluster_model();
    doc = aqm::fixtures::instrument_cluster_requirements();
    prefix = "instrument_cluster";
  } else if (options.template_name == "maintainability") {
    model = aqm::fixtures::maintainability_model();
    doc = aqm::fixtures::maintainability_requirements();
    prefix = "maintainability";
  } else {
    return fail_io("--template is instrument-cluster or maintainability");
  }

  std::error_code ec;
  std::filesystem::create_directories(options.dir, ec);
  if (ec) return fail_io("cannot create directory '" + options.dir + "'");

  const std::string model_path =
      (std::filesystem::path(options.dir) / (prefix + ".model.json")).string();
  const std::string req_path =
      (std::filesystem::path(options.dir) / (prefix + ".req.json")).string();
  if (const int code = write_file_atomic(model_path, aqm::io::serialize_model(model));
      code != kOk) {
    return code;
  }
  if (const int code = write_file_atomic(req_path, aqm::io::serialize_requirements(doc));
      code != kOk) {
    return code;
  }
  if (options.format == "json") {
    json out;
    out["wrote"] = json::array({model_path, req_path});
    std::cout << dump_json(out);
  } else {
    std::cout << "wrote " << model_path << "\nwrote " << req_path << "\n";
  }
  return kOk;
}

void add_format(CLI::App* cmd, Options& options) {
  cmd->add_option("--format", options.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"activity-based quality models: requirements pipeline and QA toolkit"};
  app.require_subcommand(1);
  Options options;

  CLI::App* validate = app.add_subcommand("validate", "check a model file");
  validate->add_option("model", options.model_path, "model file")->required();
  add_format(validate, options);

  CLI::App* rank = app.add_subcommand("rank", "store the activity ranking in a document");
  rank->add_option("model", options.model_path, "model file")->required();
  rank->add_option("--req", options.req_path, "requirements document to update")->required();
  rank->add_option("--order", options.order, "comma-separated activity paths, most important first")
      ->required();
  rank->add_option("--cutoff", options.cutoff, "positions at or past this index default to don't-care")
      ->each([&options](const std::string&) { options.cutoff_given = true; });
  add_format(rank, options);

  CLI::App* refine = app.add_subcommand("refine", "list requirements refined from an activity");
  refine->add_option("model", options.model_path, "model file")->required();
  refine->add_option("--activity", options.activity, "activity path")->required();
  refine->add_option("--req", options.req_path, "document to append the results to");
  add_format(refine, options);

  CLI::App* quantify = app.add_subcommand("quantify", "append a quantified requirement");
  quantify->add_option("model", options.model_path, "model file")->required();
  quantify->add_option("--req", options.req_path, "requirements document to update")->required();
  quantify
      ->add_option("--scope", options.scope,
                   "fact:<entity path>:<attribute> or activity:<path>")
      ->required();
  quantify->add_option("--metric", options.metric, "metric id");
  quantify->add_option("--cmp", options.cmp, "le, ge, lt, gt, eq, within_abs");
  quantify->add_option("--threshold", options.threshold, "comparison threshold");
  quantify->add_option("--nominal", options.nominal, "within_abs center value")
      ->each([&options](const std::string&) { options.nominal_given = true; });
  quantify->add_option("--unit", options.unit, "unit, must match the metric's unit");
  quantify->add_option("--constraint", options.constraint, "prose constraint (manual only)")
      ->each([&options](const std::string&) { options.constraint_given = true; });
  add_format(quantify, options);

  CLI::App* checklist = app.add_subcommand("checklist", "generate a manual review checklist");
  checklist->add_option("model", options.model_path, "model file")->required();
  checklist->add_option("--artifact-type", options.artifact_type, "artifact type tag")
      ->required();
  checklist->add_option("--out", options.out_path, "write here instead of stdout");
  add_format(checklist, options);

  CLI::App* guidelines = app.add_subcommand("guidelines", "generate quality guidelines");
  guidelines->add_option("model", options.model_path, "model file")->required();
  guidelines->add_option("--out", options.out_path, "write here instead of stdout");
  add_format(guidelines, options);

  CLI::App* matrix = app.add_subcommand("matrix", "export the fact-by-activity impact matrix");
  matrix->add_option("model", options.model_path, "model file")->required();
  matrix->add_option("--out", options.out_path, "write here instead of stdout");
  add_format(matrix, options);

  CLI::App* evaluate = app.add_subcommand("evaluate", "evaluate a tool report against the requirements");
  evaluate->add_option("model", options.model_path, "model file")->required();
  evaluate->add_option("--req", options.req_path, "requirements document")->required();
  evaluate->add_option("--report", options.report_path, "metric report file")->required();
  add_format(evaluate, options);

  CLI::App* trace = app.add_subcommand("trace", "traceability from activities to requirements");
  trace->add_option("model", options.model_path, "model file")->required();
  trace->add_option("--req", options.req_path, "requirements document")->required();
  trace->add_option("--report", options.report_path, "metric report for verdict columns");
  add_format(trace, options);

  CLI::App* init = app.add_subcommand("init", "write a template model and document skeleton");
  init->add_option("--template", options.template_name, "instrument-cluster or maintainability")
      ->required();
  init->add_option("--dir", options.dir, "target directory");
  add_format(init, options);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*validate) return run_validate(options);
  if (*rank) return run_rank(options);
  if (*refine) return run_refine(options);
  if (*quantify) return run_quantify(options);
  if (*checklist) return run_checklist(options);
  if (*guidelines) return run_guidelines(options);
  if (*matrix) return run_matrix(options);
  if (*evaluate) return run_evaluate(options);
  if (*trace) return run_trace(options);
  if (*init) return run_init(options);
  return kUsage;
}
