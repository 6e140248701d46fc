#include "adtrace/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "adtrace/emit.hpp"
#include "adtrace/trace.hpp"
#include "adtrace/workspace.hpp"

namespace adtrace {

namespace {

struct Options {
  std::vector<std::string> files;
  std::string format = "text";
  std::string output;
  std::string ontology;
  std::string profile_name;
  std::string rules_file;
  std::string map_file;
  std::string diagram;
  std::string id;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Payload goes to `-o` when given, stdout otherwise.
void deliver(const Options& opt, const std::string& payload, std::ostream& out) {
  if (opt.output.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(opt.output, std::ios::binary | std::ios::trunc);
  if (!f || !(f << payload) || !f.flush()) throw IoError("cannot write " + opt.output);
}

void print_findings(const std::vector<Finding>& findings, std::ostream& err) {
  err << emit_report(findings, ReportFormat::Text);
}

int findings_exit(const std::vector<Finding>& findings) {
  return has_errors(findings) ? kExitFindings : kExitOk;
}

Finding graph_error_finding(const TraceGraphError& e) {
  return make_finding(e.code(), Severity::Error, e.subject(), e.what(), e.position());
}

int cmd_validate(const Options& opt, std::ostream& out) {
  Workspace ws = load_workspace(opt.files);
  auto findings = validate_workspace(ws);
  out << emit_report(findings, *report_format_from_string(opt.format));
  return findings_exit(findings);
}

int cmd_profile_gen(const Options& opt, std::ostream& out, std::ostream& err) {
  Workspace ws = load_workspace(opt.files);
  if (!ws.ontology.namespaces.count(opt.ontology))
    throw UsageError("ontology namespace " + opt.ontology + " is not declared");
  auto findings = validate_ontology(ws.ontology);
  if (has_errors(findings)) {
    print_findings(findings, err);
    return kExitFindings;
  }
  std::string name = opt.profile_name.empty() ? opt.ontology + "p" : opt.profile_name;
  try {
    Profile p = generate_profile(ws.ontology, GenerationRules::defaults(), name, opt.ontology);
    deliver(opt, serialize_profile(p), out);
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFindings;
  }
  return kExitOk;
}

int cmd_trace_check(const Options& opt, std::ostream& out) {
  Workspace ws = load_workspace(opt.files);
  RuleSet rules = RuleSet::defaults();
  if (!opt.rules_file.empty())
    rules = parse_rule_set(read_text_file(opt.rules_file), opt.rules_file);

  std::vector<Finding> findings;
  try {
    TraceGraph g = build_trace_graph(ws.models);
    findings = check_trace_completeness(g, rules);
    if (rules.orphans) {
      auto orphans = orphan_findings(g);
      findings.insert(findings.end(), orphans.begin(), orphans.end());
    }
  } catch (const TraceGraphError& e) {
    findings.push_back(graph_error_finding(e));
  }
  sort_findings(findings);
  out << emit_report(findings, *report_format_from_string(opt.format));
  return findings_exit(findings);
}

int cmd_coverage(const Options& opt, std::ostream& out, std::ostream& err) {
  Workspace ws = load_workspace(opt.files);
  StandardsMap map = StandardsMap::defaults();
  if (!opt.map_file.empty())
    map = parse_standards_map(read_text_file(opt.map_file), opt.map_file);
  try {
    TraceGraph g = build_trace_graph(ws.models);
    out << emit_report(process_coverage(g, map), *report_format_from_string(opt.format));
  } catch (const TraceGraphError& e) {
    print_findings({graph_error_finding(e)}, err);
    return kExitFindings;
  }
  return kExitOk;
}

int cmd_emit(const Options& opt, std::ostream& out, std::ostream& err) {
  Workspace ws = load_workspace(opt.files);
  auto owns = [&](const Model& m) {
    if (opt.diagram == "context") return m.scenario(opt.id) != nullptr;
    if (opt.diagram == "usecase") return m.use_case(opt.id) != nullptr;
    return m.interaction(opt.id) != nullptr;
  };
  auto it = std::find_if(ws.models.begin(), ws.models.end(), owns);
  if (it == ws.models.end())
    throw UsageError("no model declares " + opt.diagram + " target " + opt.id);
  const Model& m = *it;

  if (opt.diagram == "sequence") {
    deliver(opt, emit_sequence_text(m, opt.id), out);
    return kExitOk;
  }
  const Profile* p = ws.find_profile(m.profile_ref);
  if (!p) {
    print_findings({make_finding("MOD001", Severity::Error, m.id,
                                 "model " + m.id + " uses undeclared profile " +
                                     m.profile_ref,
                                 m.pos)},
                   err);
    return kExitFindings;
  }
  ModelView view(m, *p, ws.ontology);
  deliver(opt,
          opt.diagram == "context" ? emit_context_dot(view, opt.id)
                                   : emit_usecase_dot(view, opt.id),
          out);
  return kExitOk;
}

void add_files(CLI::App* sub, Options& opt) {
  sub->add_option("files", opt.files, ".adt source files")->required()->check(
      CLI::ExistingFile);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Ontology-driven traceability checks for automated driving models",
               "adtrace"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Check ontology, profiles and models");
  add_files(validate, opt);
  validate->add_option("--format", opt.format, "json, markdown or text")
      ->check(CLI::IsMember({"json", "markdown", "text"}));

  auto* profile_gen = app.add_subcommand("profile-gen", "Generate a profile from an ontology");
  add_files(profile_gen, opt);
  profile_gen->add_option("--ontology", opt.ontology, "Namespace the profile uses")
      ->required();
  profile_gen->add_option("--name", opt.profile_name,
                          "Profile name (default: namespace followed by 'p')");
  profile_gen->add_option("-o,--output", opt.output, "Write the profile here");

  auto* trace_check = app.add_subcommand("trace-check", "Check assurance trace completeness");
  add_files(trace_check, opt);
  trace_check->add_option("--rules", opt.rules_file, "Rule toggle file");
  trace_check->add_option("--format", opt.format, "json, markdown or text")
      ->check(CLI::IsMember({"json", "markdown", "text"}));

  auto* coverage = app.add_subcommand("coverage", "Report ISO 15288 process coverage");
  add_files(coverage, opt);
  coverage->add_option("--map", opt.map_file, "Artifact kind to process overrides");
  coverage->add_option("--format", opt.format, "json, markdown or text")
      ->check(CLI::IsMember({"json", "markdown", "text"}));

  auto* emit = app.add_subcommand("emit", "Render a diagram");
  add_files(emit, opt);
  emit->add_option("--diagram", opt.diagram, "usecase, context or sequence")
      ->required()
      ->check(CLI::IsMember({"usecase", "context", "sequence"}));
  emit->add_option("--id", opt.id, "Use case, scenario or interaction id")->required();
  emit->add_option("-o,--output", opt.output, "Write the diagram here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt, out);
    if (profile_gen->parsed()) return cmd_profile_gen(opt, out, err);
    if (trace_check->parsed()) return cmd_trace_check(opt, out);
    if (coverage->parsed()) return cmd_coverage(opt, out, err);
    return cmd_emit(opt, out, err);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace adtrace
