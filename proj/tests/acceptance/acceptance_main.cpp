// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "adtrace/cli.hpp"
#include "adtrace/trace.hpp"
#include "adtrace/workspace.hpp"
#include "corpus.hpp"
#include "dot_grammar.hpp"
#include "generators.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace adtrace;
using json = nlohmann::ordered_json;
namespace t = adtrace::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args, const std::vector<std::string>& files) {
  args.insert(args.end(), files.begin(), files.end());
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::set<std::string> json_codes(const std::string& text) {
  std::set<std::string> out;
  json doc = json::parse(text);
  for (const auto& item : doc["items"]) out.insert(item["code"].get<std::string>());
  return out;
}

Outcome corpus_clean_and_fast() {
  Outcome r;
  auto start = std::chrono::steady_clock::now();
  auto files = t::corpus_paths();
  auto v = invoke({"validate", "--format", "json"}, files);
  auto tc = invoke({"trace-check", "--format", "json"}, files);
  Workspace ws = load_workspace(files);
  std::size_t scn = 0;
  for (const auto& m : ws.models) {
    ModelView view(m, *ws.find_profile(m.profile_ref), ws.ontology);
    for (const auto& s : m.scenarios) scn += check_scenario_wellformed(view, s.id).size();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (v.code != 0 || !json_codes(v.out).empty()) r.fail("validate: " + v.out + v.err);
  if (tc.code != 0 || !json_codes(tc.out).empty()) r.fail("trace-check: " + tc.out + tc.err);
  if (scn != 0) r.fail(std::to_string(scn) + " scenario findings");
  if (secs >= 1.0) r.fail("took " + std::to_string(secs) + " s");
  if (r.pass) r.detail = "0 findings in " + std::to_string(static_cast<int>(secs * 1000)) + " ms";
  return r;
}

Outcome generated_profiles_check() {
  Outcome r;
  std::mt19937 rng(2);
  for (int i = 0; i < 200; ++i) {
    Ontology o = t::random_ontology(rng, 12, 10);
    try {
      Profile p = generate_profile(o, GenerationRules::defaults(), "gen", "ad");
      auto fs = check_profile(p, o);
      if (has_errors(fs)) r.fail("ontology " + std::to_string(i) + ": " + fs.front().code);
    } catch (const GenerationError& e) {
      r.fail("ontology " + std::to_string(i) + ": " + e.what());
    }
  }
  if (r.pass) r.detail = "200 ontologies, 0 errors";
  return r;
}

Outcome oracle_equivalence() {
  Outcome r;
  std::mt19937 rng(3);
  std::size_t anc = 0, lic = 0, ctx = 0, trc = 0;

  for (int i = 0; i < 500; ++i) {
    Ontology o = t::random_ontology(rng);
    for (const auto& c : o.concepts) {
      auto got = ancestors(o, c.ref);
      if (std::set<ConceptRef>(got.begin(), got.end()) != t::oracle_ancestors(o, c.ref))
        r.fail("ancestors of " + c.ref.str());
      ++anc;
    }
    if (o.concepts.empty()) continue;
    for (int q = 0; q < 4; ++q) {
      auto pick = [&] {
        return o.concepts[static_cast<std::size_t>(t::uniform(rng, 0, int(o.concepts.size()) - 1))].ref;
      };
      RelationKind k = kAllRelationKinds[static_cast<std::size_t>(
          t::uniform(rng, 0, int(std::size(kAllRelationKinds)) - 1))];
      auto a = pick(), b = pick();
      if (!(relation_licensed(o, k, a, b) == t::oracle_licensed(o, k, a, b)))
        r.fail("relation_licensed " + a.str() + " " + b.str());
      ++lic;
    }
  }

  Workspace ws = t::corpus_workspace();
  const Profile& p = ws.profiles[0];
  while (ctx < 500) {
    Model m = t::random_model(rng, p);
    ModelView view(m, p, ws.ontology);
    for (const auto& s : m.scenarios) {
      if (derive_system_context(view, s.id) != t::oracle_context(m, p, ws.ontology, s.id))
        r.fail("context of " + s.id);
      ++ctx;
    }
  }

  for (int i = 0; i < 500; ++i) {
    TraceGraph g = t::random_trace_graph(rng);
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& f : check_trace_completeness(g)) got.insert({f.code, f.subject});
    if (got != t::oracle_trace_findings(g, RuleSet::defaults())) r.fail("trace graph " + std::to_string(i));
    ++trc;
  }

  if (anc < 500 || lic < 500) r.fail("too few ontology instances");
  if (r.pass)
    r.detail = std::to_string(anc) + " ancestors, " + std::to_string(lic) + " licensing, " +
               std::to_string(ctx) + " context, " + std::to_string(trc) + " trace instances";
  return r;
}

Outcome mutations() {
  Outcome r;
  const t::CorpusText base = t::corpus_text();
  struct Mutation {
    std::string name;
    std::string command;
    std::string code;
    std::function<void(t::CorpusText&)> apply;
  };
  const std::string last_rel = "rel ParkingDivider2";
  const std::vector<Mutation> table = {
      {"cycle", "validate", "ONT001",
       [](auto& c) { c.ontology = t::replace_once(c.ontology, "concept SceneEntity\n", "concept SceneEntity : Road\n"); }},
      {"dangling trace", "validate", "PRF001",
       [](auto& c) { c.profile = t::replace_once(c.profile, "traces Divider", "traces Fence"); }},
      {"unlicensed relation", "validate", "MOD002",
       [&](auto& c) {
         c.model = t::insert_after_line(c.model, last_rel,
                                        "  rel Bad : EntityInContext Pedestrian1 -> ParkedVehicle1");
       }},
      {"missing ego", "validate", "SCN002",
       [](auto& c) { c.model = t::replace_once(c.model, "scene 1 { Ego, ", "scene 1 { "); }},
      {"out-of-context endpoint", "validate", "MOD005",
       [](auto& c) {
         c.model = t::insert_after_line(c.model, "msg 4 Ego",
                                        "    msg 5 Ego -> GeneralPublic : \"warn\"");
       }},
      {"removed use case to need trace", "trace-check", "TRC004",
       [](auto& c) { c.model = t::remove_line(c.model, "trace t1 "); }},
      {"removed safety requirement to hazard trace", "trace-check", "TRC001",
       [](auto& c) { c.model = t::remove_line(c.model, "trace t4 "); }},
      {"orphan artifact", "trace-check", "TRC006",
       [](auto& c) {
         c.model = t::insert_after_line(c.model, "artifact SR1", "  artifact PT9 : PerformanceTarget");
       }},
  };
  for (const auto& mut : table) {
    t::CorpusText text = base;
    mut.apply(text);
    t::TempDir dir;
    auto res = invoke({mut.command, "--format", "json"}, dir.write_corpus(text));
    std::set<std::string> codes;
    try {
      codes = json_codes(res.out);
    } catch (const std::exception&) {
      r.fail(mut.name + ": unparseable output " + res.err);
      continue;
    }
    if (res.code != kExitFindings || codes != std::set<std::string>{mut.code}) {
      std::string got;
      for (const auto& c : codes) got += c + " ";
      r.fail(mut.name + ": exit " + std::to_string(res.code) + ", codes " + got);
    }
  }
  if (r.pass) r.detail = "8 mutations";
  return r;
}

// Default artifact kind to process table, written out independently.
const std::map<std::string, std::set<std::string>>& expected_table() {
  static const std::map<std::string, std::set<std::string>> table = {
      {"BusinessMissionAnalysis", {}},
      {"StakeholderNeedsAndRequirements",
       {"StakeholderNeed", "NormativeStakeholderRequirement", "UseCase", "OperationalScenario",
        "ODDStatement", "VehicleBehaviorAssumption", "ItemInterface"}},
      {"SystemRequirementsDefinition",
       {"ActuatorPotential", "PerformanceTarget", "PreliminaryFunctionalRequirement"}},
      {"SystemArchitectureDefinition", {"FunctionalArchitecture", "TechnicalArchitecture"}},
      {"SystemDesignDefinition", {"FunctionalDesign", "TechnicalDesign"}},
      {"RiskManagement",
       {"Hazard", "RiskAcceptanceCriterion", "SafetyGoal", "SafetyRequirement"}},
  };
  return table;
}

void compare_coverage(const json& doc, const std::set<std::string>& present_kinds, Outcome& r) {
  if (doc["items"].size() != expected_table().size()) r.fail("wrong process count");
  for (const auto& item : doc["items"]) {
    const std::string proc = item["process"];
    auto it = expected_table().find(proc);
    if (it == expected_table().end()) {
      r.fail("unexpected process " + proc);
      continue;
    }
    std::set<std::string> absent;
    std::size_t hits = 0;
    for (const auto& k : it->second) {
      if (present_kinds.count(k))
        ++hits;
      else
        absent.insert(k);
    }
    std::string status = it->second.empty() || hits == 0 ? "empty"
                         : absent.empty()                 ? "covered"
                                                          : "partial";
    std::set<std::string> got_absent;
    for (const auto& k : item["absent"]) got_absent.insert(k.get<std::string>());
    if (item["status"] != status || got_absent != absent) r.fail(proc + " mismatch");
    if (item["mapped"].get<bool>() == it->second.empty()) r.fail(proc + " mapped flag");
  }
}

Outcome coverage() {
  Outcome r;
  auto res = invoke({"coverage", "--format", "json"}, t::corpus_paths());
  if (res.code != 0) {
    r.fail("coverage exit " + std::to_string(res.code));
    return r;
  }
  json doc = json::parse(res.out);
  const std::set<std::string> corpus_kinds = {
      "StakeholderNeed", "UseCase", "OperationalScenario", "ODDStatement",
      "PreliminaryFunctionalRequirement", "Hazard", "SafetyGoal", "SafetyRequirement"};
  compare_coverage(doc, corpus_kinds, r);
  for (const auto& item : doc["items"]) {
    std::set<std::string> absent;
    for (const auto& k : item["absent"]) absent.insert(k.get<std::string>());
    if (item["process"] == "StakeholderNeedsAndRequirements" &&
        (item["status"] != "partial" ||
         absent != std::set<std::string>{"ItemInterface", "VehicleBehaviorAssumption",
                                          "NormativeStakeholderRequirement"}))
      r.fail("StakeholderNeedsAndRequirements");
    if (item["process"] == "RiskManagement" &&
        (item["status"] != "partial" || absent != std::set<std::string>{"RiskAcceptanceCriterion"}))
      r.fail("RiskManagement");
  }

  t::CorpusText text = t::corpus_text();
  std::string extra;
  std::set<std::string> all_kinds;
  for (const auto& [proc, kinds] : expected_table())
    for (const auto& k : kinds) {
      extra += "  artifact X" + k + " : " + k + "\n";
      all_kinds.insert(k);
    }
  extra.pop_back();
  text.model = t::insert_after_line(text.model, "artifact SR1", extra);
  t::TempDir dir;
  auto full = invoke({"coverage", "--format", "json"}, dir.write_corpus(text));
  json full_doc = json::parse(full.out);
  compare_coverage(full_doc, all_kinds, r);
  for (const auto& item : full_doc["items"])
    if (item["mapped"].get<bool>() && item["status"] != "covered")
      r.fail(item["process"].get<std::string>() + " not covered");
  if (r.pass) r.detail = "corpus partial as expected; full set covers every mapped process";
  return r;
}

Outcome determinism() {
  Outcome r;
  t::TempDir dir;
  auto files = t::corpus_paths();
  auto out = [&](const std::string& name) { return (dir.path() / name).string(); };
  struct Cmd {
    std::vector<std::string> args;
    std::string output;  // -o file, if any
    bool dot = false;
  };
  std::vector<Cmd> cmds;
  for (std::string fmt : {"json", "markdown", "text"}) {
    cmds.push_back({{"validate", "--format", fmt}, "", false});
    cmds.push_back({{"trace-check", "--format", fmt}, "", false});
    cmds.push_back({{"coverage", "--format", fmt}, "", false});
  }
  cmds.push_back({{"profile-gen", "--ontology", "ad"}, "", false});
  cmds.push_back({{"profile-gen", "--ontology", "ad", "-o", out("p.adt")}, out("p.adt"), false});
  cmds.push_back({{"emit", "--diagram", "context", "--id", "S1"}, "", true});
  cmds.push_back({{"emit", "--diagram", "context", "--id", "S1", "-o", out("c.dot")}, out("c.dot"), true});
  cmds.push_back({{"emit", "--diagram", "usecase", "--id", "PassingParkedVehicles"}, "", true});
  cmds.push_back({{"emit", "--diagram", "usecase", "--id", "PassingParkedVehicles", "-o", out("u.dot")},
                  out("u.dot"), true});
  cmds.push_back({{"emit", "--diagram", "sequence", "--id", "I1"}, "", false});
  cmds.push_back({{"emit", "--diagram", "sequence", "--id", "I1", "-o", out("s.txt")}, out("s.txt"), false});

  std::size_t dots = 0;
  for (const auto& c : cmds) {
    std::string label = c.args[0] + (c.output.empty() ? "" : " -o");
    auto first = invoke(c.args, files);
    std::string first_file = c.output.empty() ? "" : t::read_file(c.output);
    auto second = invoke(c.args, files);
    std::string second_file = c.output.empty() ? "" : t::read_file(c.output);
    if (first.code != 0) r.fail(label + " exit " + std::to_string(first.code));
    if (first.out != second.out || first_file != second_file) r.fail(label + " differs");
    if (c.dot) {
      try {
        t::parse_dot(c.output.empty() ? first.out : first_file);
        ++dots;
      } catch (const t::DotSyntaxError& e) {
        r.fail(label + ": " + e.what());
      }
    }
  }
  if (r.pass)
    r.detail = std::to_string(cmds.size()) + " invocations, " + std::to_string(dots) + " DOT documents";
  return r;
}

Outcome round_trip() {
  Outcome r;
  for (const auto& path : t::corpus_paths()) {
    Document d = parse_document(t::read_file(path), path);
    Document again = parse_document(serialize_document(d));
    if (!(again.ontology == d.ontology && again.profiles == d.profiles && again.models == d.models))
      r.fail(path);
  }
  Workspace ws = t::corpus_workspace();
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Model m = t::random_model(rng, ws.profiles[0]);
    if (!(parse_model(serialize_model(m)) == m)) r.fail("random model " + std::to_string(i));
  }
  if (r.pass) r.detail = "corpus and 200 random models";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"corpus validates, trace-checks and is well-formed under 1 s", corpus_clean_and_fast},
      {"generated profiles pass check_profile", generated_profiles_check},
      {"oracle equivalence", oracle_equivalence},
      {"mutations yield the expected finding codes", mutations},
      {"process coverage", coverage},
      {"deterministic output and valid DOT", determinism},
      {"parse/serialize round trip", round_trip},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
