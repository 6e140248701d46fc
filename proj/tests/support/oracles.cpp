#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace adtrace::testing {

std::set<ConceptRef> oracle_ancestors(const Ontology& o, const ConceptRef& c) {
  std::set<ConceptRef> seen;
  std::function<void(const ConceptRef&)> visit = [&](const ConceptRef& cur) {
    if (!seen.insert(cur).second) return;
    for (const auto& concept_decl : o.concepts)
      if (concept_decl.ref == cur)
        for (const auto& parent : concept_decl.parents) visit({cur.ns, parent});
    for (const auto& r : o.relations)
      if (r.kind == RelationKind::Specializes && !r.from_header && r.source == cur)
        visit(r.target);
  };
  visit(c);
  return seen;
}

LicenseDecision oracle_licensed(const Ontology& o, RelationKind kind, const ConceptRef& src,
                                const ConceptRef& dst) {
  auto src_anc = oracle_ancestors(o, src);
  auto dst_anc = oracle_ancestors(o, dst);
  for (const auto& r : o.relations) {
    if (r.kind != kind) continue;
    for (const auto& a : src_anc)
      for (const auto& b : dst_anc)
        if (r.source == a && r.target == b) return {true, r.id};
  }
  return {false, std::nullopt};
}

std::vector<std::string> oracle_context(const Model& m, const Profile& p, const Ontology& o,
                                        const std::string& scenario) {
  const Scenario* s = nullptr;
  for (const auto& candidate : m.scenarios)
    if (candidate.id == scenario) s = &candidate;
  if (!s) return {};

  auto kind_of = [&](const RelInstance& r) -> std::optional<RelationKind> {
    for (const auto& st : p.stereotypes) {
      if (st.name != r.via) continue;
      const auto* ref = std::get_if<RelationRef>(&st.traces);
      if (!ref) return std::nullopt;
      for (const auto& d : o.relations)
        if (d.id == ref->id) return d.kind;
      return std::nullopt;
    }
    return std::nullopt;
  };

  std::set<std::string> ctx;
  for (const auto& scene : s->scenes) ctx.insert(scene.entities.begin(), scene.entities.end());
  ctx.erase(s->ego);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : m.rels) {
      auto k = kind_of(r);
      if (k == RelationKind::PartOf && ctx.count(r.target))
        changed |= ctx.insert(r.source).second;
      if (k == RelationKind::ConsistsOf && ctx.count(r.source))
        changed |= ctx.insert(r.target).second;
    }
  }
  ctx.erase(s->ego);
  return {ctx.begin(), ctx.end()};
}

std::set<std::pair<std::string, std::string>> oracle_trace_findings(const TraceGraph& g,
                                                                     const RuleSet& rules) {
  const std::size_t n = g.nodes.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  auto index = [&](const std::string& id) {
    for (std::size_t i = 0; i < n; ++i)
      if (g.nodes[i].id == id) return i;
    return n;
  };
  for (const auto& e : g.edges) {
    std::size_t a = index(e.source), b = index(e.target);
    if (a < n && b < n) reach[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;

  auto is = [](const TraceNode& node, ArtifactKind k) {
    return std::holds_alternative<ArtifactKind>(node.kind) &&
           std::get<ArtifactKind>(node.kind) == k;
  };
  struct Rule {
    bool on;
    const char* code;
    ArtifactKind from, to;
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
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& rule : table) {
    if (!rule.on) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (!is(g.nodes[i], rule.from)) continue;
      bool ok = false;
      for (std::size_t j = 0; j < n; ++j) ok = ok || (reach[i][j] && is(g.nodes[j], rule.to));
      if (!ok) out.insert({rule.code, g.nodes[i].id});
    }
  }
  return out;
}

}  // namespace adtrace::testing
