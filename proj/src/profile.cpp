#include "adtrace/profile.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace adtrace {

namespace {

constexpr std::string_view kMetaclassNames[] = {
    "Block",           "Actor",       "UseCase", "Requirement", "Interaction",
    "PartAssociation", "Association", "Trace",
};

std::string trace_text(const TraceTarget& t, const std::string& default_ns) {
  if (const auto* r = std::get_if<RelationRef>(&t)) return "rel " + r->id;
  const auto& c = std::get<ConceptRef>(t);
  return c.ns == default_ns ? c.name : c.str();
}

bool contains(const std::vector<ConceptRef>& v, const ConceptRef& c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

}  // namespace

std::string_view to_string(Metaclass m) {
  return kMetaclassNames[static_cast<std::size_t>(m)];
}

std::optional<Metaclass> metaclass_from_string(std::string_view s) {
  for (std::size_t i = 0; i < std::size(kMetaclassNames); ++i)
    if (kMetaclassNames[i] == s) return static_cast<Metaclass>(i);
  return std::nullopt;
}

bool is_relationship(Metaclass m) {
  return m == Metaclass::PartAssociation || m == Metaclass::Association ||
         m == Metaclass::Trace;
}

std::string describe(const TraceTarget& t) {
  if (const auto* r = std::get_if<RelationRef>(&t)) return "relation " + r->id;
  return "concept " + std::get<ConceptRef>(t).str();
}

const Stereotype* Profile::find(std::string_view stereotype) const {
  auto it = std::lower_bound(
      stereotypes.begin(), stereotypes.end(), stereotype,
      [](const Stereotype& s, std::string_view n) { return s.name < n; });
  if (it != stereotypes.end() && it->name == stereotype) return &*it;
  return nullptr;
}

void normalize(Profile& p) {
  std::stable_sort(p.stereotypes.begin(), p.stereotypes.end(),
                   [](const Stereotype& a, const Stereotype& b) {
                     return a.name < b.name;
                   });
}

std::string serialize_profile(const Profile& p) {
  std::ostringstream out;
  out << "profile " << p.name << " uses " << p.ontology_ref << " {\n";
  for (const auto& s : p.stereotypes) {
    out << "  stereotype " << s.name << " extends " << to_string(s.extends);
    if (s.specializes) out << " specializes " << *s.specializes;
    out << " traces " << trace_text(s.traces, p.ontology_ref) << "\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<Finding> check_profile(const Profile& p, const Ontology& o) {
  std::vector<Finding> out;

  if (!o.namespaces.count(p.ontology_ref))
    out.push_back(make_finding("PRF001", Severity::Error, p.name,
                               "profile " + p.name + " uses undeclared namespace " +
                                   p.ontology_ref,
                               p.pos));

  for (std::size_t i = 1; i < p.stereotypes.size(); ++i) {
    if (p.stereotypes[i].name == p.stereotypes[i - 1].name)
      out.push_back(make_finding("PRF007", Severity::Error, p.stereotypes[i].name,
                                 "stereotype " + p.stereotypes[i].name +
                                     " declared more than once",
                                 p.stereotypes[i].pos));
  }

  // Resolved trace targets; null when unresolved.
  auto resolved_concept = [&](const Stereotype& s) -> const ConceptRef* {
    const ConceptRef* c = s.traced_concept();
    return (c && o.resolves(*c)) ? c : nullptr;
  };
  auto resolved_relation = [&](const Stereotype& s) -> const RelationDecl* {
    const RelationRef* r = s.traced_relation();
    return r ? o.find_relation(r->id) : nullptr;
  };

  for (const auto& s : p.stereotypes) {
    bool resolved = resolved_concept(s) || resolved_relation(s);
    if (!resolved) {
      out.push_back(make_finding("PRF001", Severity::Error, s.name,
                                 "stereotype " + s.name + " traces unresolved " +
                                     describe(s.traces),
                                 s.pos));
    } else {
      bool wants_relation = is_relationship(s.extends);
      bool has_relation = s.traced_relation() != nullptr;
      if (wants_relation != has_relation)
        out.push_back(make_finding(
            "PRF002", Severity::Error, s.name,
            "stereotype " + s.name + " extends " + std::string(to_string(s.extends)) +
                " but traces " + describe(s.traces) + "; expected a " +
                (wants_relation ? "relation" : "concept"),
            s.pos));
    }

    if (!s.specializes) continue;
    const Stereotype* base = p.find(*s.specializes);
    if (!base) {
      out.push_back(make_finding("PRF005", Severity::Error, s.name,
                                 "stereotype " + s.name +
                                     " specializes undeclared stereotype " +
                                     *s.specializes,
                                 s.pos));
      continue;
    }
    if (base == &s) continue;  // reported as a cycle below

    bool mirrored = true;
    bool comparable = true;
    if (const ConceptRef* a = resolved_concept(s)) {
      if (const ConceptRef* b = resolved_concept(*base)) {
        mirrored = contains(ancestors(o, *a), *b);
      } else if (resolved_relation(*base)) {
        mirrored = false;
      } else {
        comparable = false;
      }
    } else if (const RelationDecl* ra = resolved_relation(s)) {
      if (const RelationDecl* rb = resolved_relation(*base)) {
        mirrored = ra->kind == rb->kind && o.resolves(ra->source) &&
                   o.resolves(ra->target) &&
                   contains(ancestors(o, ra->source), rb->source) &&
                   contains(ancestors(o, ra->target), rb->target);
      } else if (resolved_concept(*base)) {
        mirrored = false;
      } else {
        comparable = false;
      }
    } else {
      comparable = false;
    }
    if (comparable && !mirrored)
      out.push_back(make_finding(
          "PRF003", Severity::Error, s.name,
          "stereotype " + s.name + " specializes " + base->name + " but " +
              describe(s.traces) + " does not specialize " + describe(base->traces),
          s.pos));
  }

  // Specialization cycles among stereotypes.
  std::set<std::string> reported;
  for (const auto& s : p.stereotypes) {
    std::vector<std::string> path;
    std::set<std::string> on_path;
    const Stereotype* cur = &s;
    while (cur && !on_path.count(cur->name)) {
      on_path.insert(cur->name);
      path.push_back(cur->name);
      cur = cur->specializes ? p.find(*cur->specializes) : nullptr;
    }
    if (!cur) continue;
    auto start = std::find(path.begin(), path.end(), cur->name);
    std::vector<std::string> cycle(start, path.end());
    std::sort(cycle.begin(), cycle.end());
    if (!reported.insert(cycle.front()).second) continue;
    std::string listing;
    for (const auto& n : cycle) listing += (listing.empty() ? "" : ", ") + n;
    out.push_back(make_finding("PRF006", Severity::Error, cycle.front(),
                               "stereotype specialization cycle {" + listing + "}",
                               p.find(cycle.front())->pos));
  }

  // Same trace target with the same metaclass.
  std::map<std::pair<TraceTarget, Metaclass>, std::vector<const Stereotype*>> groups;
  for (const auto& s : p.stereotypes) groups[{s.traces, s.extends}].push_back(&s);
  for (const auto& [key, members] : groups) {
    for (std::size_t i = 1; i < members.size(); ++i) {
      if (members[i]->name == members[0]->name) continue;
      out.push_back(make_finding(
          "PRF004", Severity::Warning, members[i]->name,
          "stereotypes " + members[0]->name + " and " + members[i]->name +
              " both extend " + std::string(to_string(key.second)) + " and trace " +
              describe(key.first),
          members[i]->pos));
    }
  }

  sort_findings(out);
  return out;
}

GenerationRules GenerationRules::defaults() {
  GenerationRules r;
  r.concept_rules = {
      {Select::LeafUnder, {"ad", "SceneEntity"}, Metaclass::Block},
      {Select::TranslatedTo, {"se", "Actor"}, Metaclass::Actor},
      {Select::DescendantOf, {"se", "UseCase"}, Metaclass::UseCase},
  };
  r.relation_rules = {
      {RelationKind::PartOf, Metaclass::PartAssociation},
      {RelationKind::ConsistsOf, Metaclass::PartAssociation},
      {RelationKind::ElementOf, Metaclass::PartAssociation},
      {RelationKind::AbleToPerform, Metaclass::Association},
      {RelationKind::Defines, Metaclass::Association},
      {RelationKind::HasNeighbor, Metaclass::Association},
  };
  return r;
}

Profile generate_profile(const Ontology& o, const GenerationRules& rules,
                         const std::string& profile_name,
                         const std::string& ontology_ref) {
  std::vector<std::string> uncovered;
  for (const auto& r : o.relations) {
    if (r.kind == RelationKind::Specializes) continue;
    if (!rules.relation_rules.count(r.kind))
      uncovered.push_back(r.id + " (" + std::string(to_string(r.kind)) + " " +
                          r.source.str() + " -> " + r.target.str() + ")");
  }
  if (!uncovered.empty()) {
    std::string what = "no metaclass mapped for";
    for (const auto& u : uncovered) what += " " + u + ";";
    what.pop_back();
    throw GenerationError(what, std::move(uncovered));
  }

  std::map<ConceptRef, std::vector<ConceptRef>> anc;
  for (const auto& c : o.concepts) anc.emplace(c.ref, ancestors(o, c.ref));

  auto matches = [&](const GenerationRules::ConceptRule& rule, const ConceptRef& c) {
    const auto& a = anc.at(c);
    switch (rule.select) {
      case GenerationRules::Select::LeafUnder:
        return c != rule.anchor && contains(a, rule.anchor) && o.children(c).empty();
      case GenerationRules::Select::DescendantOf:
        return contains(a, rule.anchor);
      case GenerationRules::Select::TranslatedTo:
        for (const auto& t : o.translations) {
          const ConceptRef* other = t.from == c ? &t.to : (t.to == c ? &t.from : nullptr);
          if (other && o.resolves(*other) && contains(anc.at(*other), rule.anchor))
            return true;
        }
        return false;
    }
    return false;
  };

  std::set<std::string> taken;
  auto unique_name = [&](const std::string& base, const std::string& alt) {
    std::string name = base;
    if (taken.count(name)) name = alt;
    for (int i = 2; taken.count(name); ++i) name = alt + std::to_string(i);
    taken.insert(name);
    return name;
  };

  Profile p;
  p.name = profile_name;
  p.ontology_ref = ontology_ref;

  std::map<ConceptRef, std::string> stereotype_for;
  std::vector<std::pair<ConceptRef, Metaclass>> picked;
  for (const auto& [ref, _] : anc) {
    for (const auto& rule : rules.concept_rules) {
      if (matches(rule, ref)) {
        picked.emplace_back(ref, rule.metaclass);
        break;
      }
    }
  }
  for (const auto& [ref, meta] : picked)
    stereotype_for[ref] = unique_name(ref.name, ref.ns + "_" + ref.name);

  for (const auto& [ref, meta] : picked) {
    Stereotype s;
    s.name = stereotype_for[ref];
    s.extends = meta;
    s.traces = ref;

    // Nearest stereotyped proper ancestors; the smallest one is mirrored.
    std::vector<ConceptRef> candidates;
    for (const auto& a : anc.at(ref))
      if (a != ref && stereotype_for.count(a)) candidates.push_back(a);
    std::vector<ConceptRef> nearest;
    for (const auto& a : candidates) {
      bool shadowed = std::any_of(candidates.begin(), candidates.end(),
                                  [&](const ConceptRef& b) {
                                    return b != a && contains(anc.at(b), a);
                                  });
      if (!shadowed) nearest.push_back(a);
    }
    if (!nearest.empty())
      s.specializes = stereotype_for[*std::min_element(nearest.begin(), nearest.end())];
    p.stereotypes.push_back(std::move(s));
  }

  for (const auto& r : o.relations) {
    if (r.kind == RelationKind::Specializes) continue;
    Stereotype s;
    s.name = unique_name(r.id, r.id + "_rel");
    s.extends = rules.relation_rules.at(r.kind);
    s.traces = RelationRef{r.id};
    p.stereotypes.push_back(std::move(s));
  }

  normalize(p);
  return p;
}

}  // namespace adtrace
