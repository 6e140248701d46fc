#include "adtrace/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "adtrace/lexer.hpp"

namespace adtrace {

namespace {

template <typename T>
const T* find_by_id(const std::vector<T>& items, std::string_view id) {
  auto it = std::lower_bound(items.begin(), items.end(), id,
                             [](const T& item, std::string_view key) {
                               return item.id < key;
                             });
  if (it != items.end() && it->id == id) return &*it;
  return nullptr;
}

template <typename T>
void sort_by_id(std::vector<T>& items) {
  std::stable_sort(items.begin(), items.end(),
                   [](const T& a, const T& b) { return a.id < b.id; });
}

std::string join(const std::set<std::string>& items, std::string_view sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

}  // namespace

const Element* Model::element(std::string_view id) const {
  return find_by_id(elements, id);
}
const Scenario* Model::scenario(std::string_view id) const {
  return find_by_id(scenarios, id);
}
const UseCaseDecl* Model::use_case(std::string_view id) const {
  return find_by_id(use_cases, id);
}
const Interaction* Model::interaction(std::string_view id) const {
  return find_by_id(interactions, id);
}

std::vector<std::string> Model::declared_ids() const {
  std::vector<std::string> ids;
  auto add = [&](const auto& items) {
    for (const auto& item : items) ids.push_back(item.id);
  };
  add(elements);
  add(rels);
  add(scenarios);
  add(use_cases);
  add(interactions);
  add(artifacts);
  add(traces);
  std::sort(ids.begin(), ids.end());
  return ids;
}

void normalize(Model& m) {
  sort_by_id(m.elements);
  sort_by_id(m.rels);
  sort_by_id(m.scenarios);
  sort_by_id(m.use_cases);
  sort_by_id(m.interactions);
  sort_by_id(m.artifacts);
  sort_by_id(m.traces);
}

std::string serialize_model(const Model& m) {
  std::ostringstream out;
  out << "model " << m.id << " uses " << m.profile_ref << " {\n";
  for (const auto& e : m.elements) {
    out << "  element " << e.id << " : " << e.stereotype;
    if (!e.attrs.empty()) {
      out << " (";
      bool first = true;
      for (const auto& [k, v] : e.attrs) {
        out << (first ? "" : ", ") << k << " = " << quote_string(v);
        first = false;
      }
      out << ")";
    }
    out << "\n";
  }
  for (const auto& r : m.rels)
    out << "  rel " << r.id << " : " << r.via << " " << r.source << " -> "
        << r.target << "\n";
  for (const auto& s : m.scenarios) {
    out << "  scenario " << s.id << " ego " << s.ego << " {\n";
    for (const auto& scene : s.scenes)
      out << "    scene " << scene.index << " { " << join(scene.entities, ", ")
          << " }\n";
    for (const auto& b : s.behaviors)
      out << "    performs " << b.agent << " : " << b.behavior << "\n";
    out << "  }\n";
  }
  for (const auto& u : m.use_cases) {
    out << "  usecase " << u.id << " {\n";
    for (const auto& s : u.scenarios) out << "    scenario " << s << "\n";
    for (const auto& a : u.actors) out << "    actor " << a << "\n";
    for (const auto& s : u.stakeholders) out << "    stakeholder " << s << "\n";
    out << "  }\n";
  }
  for (const auto& in : m.interactions) {
    out << "  interaction " << in.id << " for " << in.scenario << " {\n";
    for (const auto& msg : in.messages)
      out << "    msg " << msg.order << " " << msg.from << " -> " << msg.to
          << " : " << quote_string(msg.label) << "\n";
    out << "  }\n";
  }
  for (const auto& a : m.artifacts) {
    out << "  artifact " << a.id << " : " << to_string(a.kind);
    if (a.text) out << " text " << quote_string(*a.text);
    out << "\n";
  }
  for (const auto& t : m.traces)
    out << "  trace " << t.id << " : " << to_string(t.kind) << " " << t.source
        << " -> " << t.target << "\n";
  out << "}\n";
  return out.str();
}

ModelView::ModelView(const Model& m, const Profile& p, const Ontology& o,
                     ModelVocabulary vocab)
    : model_(&m), profile_(&p), ontology_(&o), vocab_(std::move(vocab)) {
  // Duplicate ids resolve to the smallest stereotype name, independent of
  // declaration order.
  for (const auto& e : m.elements) {
    auto [it, fresh] = elements_.emplace(e.id, &e);
    if (!fresh && e.stereotype < it->second->stereotype) it->second = &e;
  }
}

const Element* ModelView::element(std::string_view id) const {
  auto it = elements_.find(std::string(id));
  return it == elements_.end() ? nullptr : it->second;
}

const Stereotype* ModelView::stereotype_of(const Element& e) const {
  return profile_->find(e.stereotype);
}

std::optional<ConceptRef> ModelView::concept_of(std::string_view element_id) const {
  const Element* e = element(element_id);
  if (!e) return std::nullopt;
  const Stereotype* s = stereotype_of(*e);
  if (!s) return std::nullopt;
  const ConceptRef* c = s->traced_concept();
  if (!c || !ontology_->resolves(*c)) return std::nullopt;
  return *c;
}

const RelationDecl* ModelView::relation_of(const RelInstance& r) const {
  const Stereotype* s = profile_->find(r.via);
  if (!s) return nullptr;
  const RelationRef* rel = s->traced_relation();
  return rel ? ontology_->find_relation(rel->id) : nullptr;
}

bool ModelView::is_scene_entity(std::string_view element_id) const {
  auto c = concept_of(element_id);
  return c && is_descendant_or_equal(*ontology_, *c, vocab_.scene_entity);
}

bool ModelView::is_agent(std::string_view element_id) const {
  auto c = concept_of(element_id);
  return c && is_descendant_or_equal(*ontology_, *c, vocab_.agent);
}

std::vector<std::string> derive_system_context(const ModelView& view,
                                               std::string_view scenario) {
  const Model& m = view.model();
  const Scenario* s = m.scenario(scenario);
  if (!s) throw LookupError("unknown scenario " + std::string(scenario));

  std::map<std::string, std::vector<std::string>> parts;
  for (const auto& r : m.rels) {
    const RelationDecl* decl = view.relation_of(r);
    if (!decl) continue;
    if (decl->kind == RelationKind::PartOf)
      parts[r.target].push_back(r.source);
    else if (decl->kind == RelationKind::ConsistsOf)
      parts[r.source].push_back(r.target);
  }

  std::set<std::string> context;
  std::vector<std::string> work;
  for (const auto& scene : s->scenes)
    for (const auto& id : scene.entities)
      if (id != s->ego && context.insert(id).second) work.push_back(id);
  while (!work.empty()) {
    std::string cur = std::move(work.back());
    work.pop_back();
    auto it = parts.find(cur);
    if (it == parts.end()) continue;
    for (const auto& p : it->second)
      if (context.insert(p).second) work.push_back(p);
  }
  context.erase(s->ego);
  return {context.begin(), context.end()};
}

std::vector<Finding> check_scenario_wellformed(const ModelView& view,
                                               std::string_view scenario) {
  const Scenario* s = view.model().scenario(scenario);
  if (!s) throw LookupError("unknown scenario " + std::string(scenario));

  std::vector<Finding> out;
  if (s->scenes.empty())
    out.push_back(make_finding("SCN004", Severity::Error, s->id,
                               "scenario " + s->id + " has no scenes", s->pos));
  for (std::size_t i = 1; i < s->scenes.size(); ++i) {
    const Scene& prev = s->scenes[i - 1];
    const Scene& cur = s->scenes[i];
    if (cur.index <= prev.index)
      out.push_back(make_finding(
          "SCN001", Severity::Error, s->id,
          "scene " + std::to_string(cur.index) + " follows scene " +
              std::to_string(prev.index) + " in scenario " + s->id,
          cur.pos));
  }
  for (const auto& scene : s->scenes) {
    if (!scene.entities.count(s->ego))
      out.push_back(make_finding("SCN002", Severity::Error, s->id,
                                 "ego " + s->ego + " missing from scene " +
                                     std::to_string(scene.index) + " of scenario " +
                                     s->id,
                                 scene.pos));
  }
  for (const auto& b : s->behaviors) {
    if (view.element(b.agent) && !view.is_agent(b.agent))
      out.push_back(make_finding("SCN003", Severity::Error, b.agent,
                                 "behavior " + b.behavior + " assigned to " + b.agent +
                                     ", which is not an agent",
                                 b.pos));
  }
  sort_findings(out);
  return out;
}

std::vector<Finding> check_conformance(const ModelView& view) {
  const Model& m = view.model();
  const Profile& p = view.profile();
  const Ontology& o = view.ontology();
  std::vector<Finding> out;

  auto ids = m.declared_ids();
  for (std::size_t i = 1; i < ids.size(); ++i)
    if (ids[i] == ids[i - 1] && (i + 1 == ids.size() || ids[i + 1] != ids[i]))
      out.push_back(make_finding("MOD007", Severity::Error, ids[i],
                                 "id " + ids[i] + " declared more than once in model " +
                                     m.id,
                                 m.pos));
  std::set<std::string> known(ids.begin(), ids.end());

  auto unresolved = [&](const std::string& ref, const std::string& where,
                        const SourcePos& pos) {
    out.push_back(make_finding("MOD008", Severity::Error, ref,
                               "unresolved reference " + ref + " in " + where, pos));
  };
  auto require_element = [&](const std::string& ref, const std::string& where,
                             const SourcePos& pos) {
    if (view.element(ref)) return true;
    unresolved(ref, where, pos);
    return false;
  };

  for (const auto& e : m.elements) {
    const Stereotype* s = p.find(e.stereotype);
    if (!s) {
      out.push_back(make_finding("MOD001", Severity::Error, e.id,
                                 "element " + e.id + " uses unknown stereotype " +
                                     e.stereotype,
                                 e.pos));
      continue;
    }
    if (is_relationship(s->extends)) {
      out.push_back(make_finding("MOD001", Severity::Error, e.id,
                                 "element " + e.id + " typed by relationship stereotype " +
                                     e.stereotype,
                                 e.pos));
      continue;
    }
    const ConceptRef* c = s->traced_concept();
    if (e.attrs.empty() || !c || !o.resolves(*c)) continue;
    std::set<std::string> allowed;
    for (const auto& a : ancestors(o, *c))
      for (const auto& attr : o.find(a)->attrs) allowed.insert(attr);
    for (const auto& [key, value] : e.attrs) {
      if (!allowed.count(key))
        out.push_back(make_finding("MOD006", Severity::Warning, e.id,
                                   "attribute " + key + " is not declared on " +
                                       c->str() + " or its ancestors",
                                   e.pos));
    }
  }

  std::map<std::string, std::vector<const RelInstance*>> by_relation;
  for (const auto& r : m.rels) {
    const Stereotype* s = p.find(r.via);
    bool ok = true;
    if (!s || !is_relationship(s->extends)) {
      out.push_back(make_finding(
          "MOD001", Severity::Error, r.id,
          "relation instance " + r.id + (s ? " typed by non-relationship stereotype "
                                           : " uses unknown stereotype ") +
              r.via,
          r.pos));
      ok = false;
    }
    ok = require_element(r.source, "relation instance " + r.id, r.pos) && ok;
    ok = require_element(r.target, "relation instance " + r.id, r.pos) && ok;
    if (!ok) continue;
    const RelationDecl* decl = view.relation_of(r);
    if (!decl) continue;
    by_relation[decl->id].push_back(&r);
    auto cs = view.concept_of(r.source);
    auto ct = view.concept_of(r.target);
    if (!cs || !ct) continue;
    if (!relation_licensed(o, decl->kind, *cs, *ct).licensed)
      out.push_back(make_finding(
          "MOD002", Severity::Error, r.id,
          "relation instance " + r.id + " (" + std::string(to_string(decl->kind)) + " " +
              r.source + " -> " + r.target + ") is not licensed for " + cs->str() +
              " -> " + ct->str(),
          r.pos));
  }

  for (const auto& decl : o.relations) {
    if (!decl.multiplicity) continue;
    const auto& instances = by_relation[decl.id];
    for (const auto& e : m.elements) {
      if (view.element(e.id) != &e) continue;
      auto c = view.concept_of(e.id);
      if (!c || !is_descendant_or_equal(o, *c, decl.source)) continue;
      auto count = static_cast<std::size_t>(
          std::count_if(instances.begin(), instances.end(),
                        [&](const RelInstance* r) { return r->source == e.id; }));
      if (!decl.multiplicity->admits(count))
        out.push_back(make_finding(
            "MOD003", Severity::Error, e.id,
            "element " + e.id + " has " + std::to_string(count) + " " + decl.id +
                " instances; expected " + decl.multiplicity->str(),
            e.pos));
    }
  }

  for (const auto& s : m.scenarios) {
    std::string where = "scenario " + s.id;
    require_element(s.ego, where, s.pos);
    std::set<std::string> reported;
    for (const auto& scene : s.scenes) {
      for (const auto& id : scene.entities) {
        if (!reported.insert(id).second) continue;
        if (!require_element(id, where, scene.pos)) continue;
        if (!view.is_scene_entity(id) && view.concept_of(id))
          out.push_back(make_finding(
              "MOD004", Severity::Error, id,
              "scene entity " + id + " of scenario " + s.id + " is not a " +
                  view.vocabulary().scene_entity.str(),
              scene.pos));
      }
    }
    for (const auto& b : s.behaviors) {
      require_element(b.agent, where, b.pos);
      require_element(b.behavior, where, b.pos);
    }
  }

  for (const auto& u : m.use_cases) {
    std::string where = "use case " + u.id;
    for (const auto& s : u.scenarios)
      if (!m.scenario(s)) unresolved(s, where, u.pos);
    for (const auto& a : u.actors) require_element(a, where, u.pos);
    for (const auto& h : u.stakeholders) require_element(h, where, u.pos);
  }

  for (const auto& in : m.interactions) {
    std::string where = "interaction " + in.id;
    for (std::size_t i = 1; i < in.messages.size(); ++i)
      if (in.messages[i].order <= in.messages[i - 1].order)
        out.push_back(make_finding(
            "MOD009", Severity::Error, in.id,
            "message " + std::to_string(in.messages[i].order) + " follows message " +
                std::to_string(in.messages[i - 1].order) + " in " + where,
            in.messages[i].pos));

    const Scenario* s = m.scenario(in.scenario);
    if (!s) {
      unresolved(in.scenario, where, in.pos);
      continue;
    }
    auto ctx = derive_system_context(view, s->id);
    std::set<std::string> allowed(ctx.begin(), ctx.end());
    allowed.insert(s->ego);
    for (const auto& msg : in.messages) {
      for (const auto* end : {&msg.from, &msg.to}) {
        if (!require_element(*end, where, msg.pos)) continue;
        if (!allowed.count(*end))
          out.push_back(make_finding(
              "MOD005", Severity::Error, *end,
              "message " + std::to_string(msg.order) + " of " + where + " involves " +
                  *end + ", which is outside the system context of " + s->id,
              msg.pos));
      }
    }
  }

  for (const auto& t : m.traces) {
    for (const auto* end : {&t.source, &t.target})
      if (!known.count(*end)) unresolved(*end, "trace " + t.id, t.pos);
  }

  sort_findings(out);
  return out;
}

}  // namespace adtrace
