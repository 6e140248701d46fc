#include "adtrace/trace.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "adtrace/lexer.hpp"

namespace adtrace {

StandardsMap StandardsMap::defaults() {
  using K = ArtifactKind;
  using P = Process15288;
  StandardsMap m;
  for (K k : {K::NormativeStakeholderRequirement, K::UseCase, K::OperationalScenario,
              K::ODDStatement, K::VehicleBehaviorAssumption, K::ItemInterface,
              K::StakeholderNeed})
    m.set(k, P::StakeholderNeedsAndRequirements);
  for (K k : {K::ActuatorPotential, K::PerformanceTarget,
              K::PreliminaryFunctionalRequirement})
    m.set(k, P::SystemRequirementsDefinition);
  for (K k : {K::FunctionalArchitecture, K::TechnicalArchitecture})
    m.set(k, P::SystemArchitectureDefinition);
  for (K k : {K::FunctionalDesign, K::TechnicalDesign})
    m.set(k, P::SystemDesignDefinition);
  for (K k : {K::Hazard, K::RiskAcceptanceCriterion, K::SafetyGoal,
              K::SafetyRequirement})
    m.set(k, P::RiskManagement);
  return m;
}

std::vector<ArtifactKind> StandardsMap::kinds_for(Process15288 p) const {
  std::vector<ArtifactKind> out;
  for (ArtifactKind k : kAllArtifactKinds)
    if (at(k) == p) out.push_back(k);
  return out;
}

StandardsMap parse_standards_map(std::string_view source, const std::string& file) {
  StandardsMap m = StandardsMap::defaults();
  TokenCursor cur(tokenize(source, file));
  while (!cur.at_end()) {
    Token kind_tok = cur.expect_ident("artifact kind");
    auto kind = artifact_kind_from_string(kind_tok.text);
    if (!kind) throw ParseError(kind_tok.pos, "artifact kind", kind_tok.describe());
    cur.expect_punct("->");
    Token proc_tok = cur.expect_ident("process name");
    auto proc = process_from_string(proc_tok.text);
    if (!proc) throw ParseError(proc_tok.pos, "process name", proc_tok.describe());
    m.set(*kind, *proc);
  }
  return m;
}

std::string_view to_string(NodeCategory c) {
  return c == NodeCategory::Element ? "element" : "interaction";
}

const TraceNode* TraceGraph::find(std::string_view id) const {
  int i = index_of(id);
  return i < 0 ? nullptr : &nodes[static_cast<std::size_t>(i)];
}

int TraceGraph::index_of(std::string_view id) const {
  auto it = std::lower_bound(
      nodes.begin(), nodes.end(), id,
      [](const TraceNode& n, std::string_view key) { return n.id < key; });
  if (it == nodes.end() || it->id != id) return -1;
  return static_cast<int>(it - nodes.begin());
}

TraceGraph build_trace_graph(std::span<const Model> models) {
  TraceGraph g;
  for (const auto& m : models) {
    auto add = [&](const std::string& id, NodeKind kind, const SourcePos& pos) {
      g.nodes.push_back(TraceNode{id, kind, m.id, pos});
    };
    for (const auto& e : m.elements) add(e.id, NodeCategory::Element, e.pos);
    for (const auto& u : m.use_cases) add(u.id, ArtifactKind::UseCase, u.pos);
    for (const auto& s : m.scenarios) add(s.id, ArtifactKind::OperationalScenario, s.pos);
    for (const auto& in : m.interactions) add(in.id, NodeCategory::Interaction, in.pos);
    for (const auto& a : m.artifacts) add(a.id, a.kind, a.pos);
  }
  std::stable_sort(g.nodes.begin(), g.nodes.end(),
                   [](const TraceNode& a, const TraceNode& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < g.nodes.size(); ++i) {
    if (g.nodes[i].id == g.nodes[i - 1].id)
      throw TraceGraphError("TRC007", g.nodes[i].id,
                            "id " + g.nodes[i].id + " declared in model " +
                                g.nodes[i - 1].model + " and model " + g.nodes[i].model,
                            g.nodes[i].pos);
  }

  std::set<std::pair<std::string, std::string>> seen;
  auto add_edge = [&](TraceLink link) {
    if (seen.insert({link.source, link.target}).second) g.edges.push_back(std::move(link));
  };

  for (const auto& m : models) {
    for (const auto& t : m.traces) {
      for (const auto* end : {&t.source, &t.target})
        if (g.index_of(*end) < 0)
          throw TraceGraphError("TRC008", t.id,
                                "trace " + t.id + " references unknown id " + *end, t.pos);
      if (t.source == t.target)
        throw TraceGraphError("TRC008", t.id, "trace " + t.id + " is a self-loop", t.pos);
      add_edge(TraceLink{t.id, t.source, t.target, t.kind, false, t.pos});
    }
  }

  for (const auto& m : models) {
    auto structural = [&](std::string id, const std::string& from, const std::string& to,
                          TraceKind kind, const SourcePos& pos) {
      if (from == to || g.index_of(from) < 0 || g.index_of(to) < 0) return;
      add_edge(TraceLink{std::move(id), from, to, kind, true, pos});
    };
    for (const auto& u : m.use_cases)
      for (const auto& s : u.scenarios)
        structural(s + "/usecase/" + u.id, s, u.id, TraceKind::Refines, u.pos);
    for (const auto& s : m.scenarios) {
      structural(s.id + "/ego/" + s.ego, s.id, s.ego, TraceKind::TracedTo, s.pos);
      for (const auto& scene : s.scenes)
        for (const auto& e : scene.entities)
          structural(s.id + "/scene/" + e, s.id, e, TraceKind::TracedTo, scene.pos);
      for (const auto& b : s.behaviors) {
        structural(s.id + "/agent/" + b.agent, s.id, b.agent, TraceKind::TracedTo, b.pos);
        structural(s.id + "/behavior/" + b.behavior, s.id, b.behavior,
                   TraceKind::TracedTo, b.pos);
      }
    }
    for (const auto& in : m.interactions)
      structural(in.id + "/scenario/" + in.scenario, in.id, in.scenario,
                 TraceKind::Refines, in.pos);
    for (const auto& r : m.rels)
      structural(r.id, r.source, r.target, TraceKind::TracedTo, r.pos);
  }
  return g;
}

RuleSet parse_rule_set(std::string_view source, const std::string& file) {
  RuleSet rules;
  const std::map<std::string, bool RuleSet::*> fields = {
      {"TRC001", &RuleSet::safety_requirement_to_hazard},
      {"TRC002", &RuleSet::hazard_to_scenario},
      {"TRC003", &RuleSet::scenario_to_use_case},
      {"TRC004", &RuleSet::use_case_to_stakeholder_need},
      {"TRC005", &RuleSet::acceptance_criterion_to_need},
      {"TRC006", &RuleSet::orphans},
  };
  TokenCursor cur(tokenize(source, file));
  while (!cur.at_end()) {
    Token code = cur.expect_ident("rule code");
    auto it = fields.find(code.text);
    if (it == fields.end())
      throw ParseError(code.pos, "rule code TRC001..TRC006", code.describe());
    Token value = cur.expect_ident("'on' or 'off'");
    if (value.text != "on" && value.text != "off")
      throw ParseError(value.pos, "'on' or 'off'", value.describe());
    rules.*(it->second) = value.text == "on";
  }
  return rules;
}

std::vector<Finding> check_trace_completeness(const TraceGraph& g,
                                              const RuleSet& rules) {
  const std::size_t n = g.nodes.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : g.edges) {
    int s = g.index_of(e.source);
    int t = g.index_of(e.target);
    if (s >= 0 && t >= 0) adj[static_cast<std::size_t>(s)].push_back(static_cast<std::size_t>(t));
  }

  auto reaches = [&](std::size_t from, ArtifactKind goal) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack = adj[from];
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      if (seen[v]) continue;
      seen[v] = true;
      if (g.nodes[v].has_kind(goal)) return true;
      for (std::size_t w : adj[v])
        if (!seen[w]) stack.push_back(w);
    }
    return false;
  };

  struct Rule {
    bool enabled;
    const char* code;
    ArtifactKind from;
    ArtifactKind to;
  };
  const Rule table[] = {
      {rules.safety_requirement_to_hazard, "TRC001", ArtifactKind::SafetyRequirement,
       ArtifactKind::Hazard},
      {rules.hazard_to_scenario, "TRC002", ArtifactKind::Hazard,
       ArtifactKind::OperationalScenario},
      {rules.scenario_to_use_case, "TRC003", ArtifactKind::OperationalScenario,
       ArtifactKind::UseCase},
      {rules.use_case_to_stakeholder_need, "TRC004", ArtifactKind::UseCase,
       ArtifactKind::StakeholderNeed},
      {rules.acceptance_criterion_to_need, "TRC005", ArtifactKind::RiskAcceptanceCriterion,
       ArtifactKind::StakeholderNeed},
  };

  std::vector<Finding> out;
  for (const auto& rule : table) {
    if (!rule.enabled) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const TraceNode& node = g.nodes[i];
      if (!node.has_kind(rule.from) || reaches(i, rule.to)) continue;
      out.push_back(make_finding(rule.code, Severity::Error, node.id,
                                 std::string(to_string(rule.from)) + " " + node.id +
                                     " does not reach any " +
                                     std::string(to_string(rule.to)),
                                 node.pos));
    }
  }
  sort_findings(out);
  return out;
}

std::vector<std::string> detect_orphans(const TraceGraph& g) {
  std::set<std::string> linked;
  for (const auto& e : g.edges) {
    linked.insert(e.source);
    linked.insert(e.target);
  }
  std::vector<std::string> out;
  for (const auto& node : g.nodes)
    if (!linked.count(node.id)) out.push_back(node.id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Finding> orphan_findings(const TraceGraph& g) {
  std::vector<Finding> out;
  for (const auto& id : detect_orphans(g)) {
    const TraceNode* node = g.find(id);
    std::string kind = std::visit(
        [](auto k) { return std::string(to_string(k)); }, node->kind);
    out.push_back(make_finding("TRC006", Severity::Error, id,
                               kind + " " + id + " has no trace link", node->pos));
  }
  sort_findings(out);
  return out;
}

std::string_view to_string(CoverageStatus s) {
  switch (s) {
    case CoverageStatus::Covered:
      return "covered";
    case CoverageStatus::Partial:
      return "partial";
    case CoverageStatus::Empty:
      return "empty";
  }
  return "empty";
}

CoverageReport process_coverage(const TraceGraph& g, const StandardsMap& map) {
  std::array<std::size_t, kArtifactKindCount> counts{};
  CoverageReport report;
  for (const auto& node : g.nodes) {
    if (const auto* k = std::get_if<ArtifactKind>(&node.kind)) {
      ++counts[static_cast<std::size_t>(*k)];
      ++report.artifacts;
    }
  }
  for (Process15288 p : kAllProcesses) {
    CoverageEntry entry;
    entry.process = p;
    for (ArtifactKind k : map.kinds_for(p)) {
      std::size_t c = counts[static_cast<std::size_t>(k)];
      (c > 0 ? entry.present : entry.absent).push_back(k);
      entry.artifact_count += c;
    }
    if (entry.present.empty())
      entry.status = CoverageStatus::Empty;
    else if (entry.absent.empty())
      entry.status = CoverageStatus::Covered;
    else
      entry.status = CoverageStatus::Partial;
    switch (entry.status) {
      case CoverageStatus::Covered:
        ++report.covered;
        break;
      case CoverageStatus::Partial:
        ++report.partial;
        break;
      case CoverageStatus::Empty:
        ++report.empty;
        break;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::vector<GuidewordPrompt> guideword_candidates(const ModelView& view,
                                                  std::string_view scenario,
                                                  std::span<const std::string> guidewords) {
  auto ctx = derive_system_context(view, scenario);
  const Scenario* s = view.model().scenario(scenario);
  std::set<std::string> subjects(ctx.begin(), ctx.end());
  for (const auto& b : s->behaviors)
    if (b.agent == s->ego) subjects.insert(b.behavior);

  std::vector<GuidewordPrompt> out;
  for (const auto& subject : subjects)
    for (const auto& word : guidewords)
      out.push_back({subject, word, subject + " × '" + word + "'"});
  return out;
}

}  // namespace adtrace
