#include "adtrace/ontology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace adtrace {

namespace {

constexpr std::string_view kRelationKindNames[] = {
    "specializes", "part_of",  "consists_of", "able_to_perform",
    "defines",     "element_of", "has_neighbor",
};

using ParentMap = std::map<ConceptRef, std::vector<ConceptRef>>;

ParentMap parent_map(const Ontology& o) {
  ParentMap out;
  for (const auto& r : o.relations)
    if (r.kind == RelationKind::Specializes) out[r.source].push_back(r.target);
  return out;
}

std::vector<ConceptRef> closure(const ParentMap& parents, const ConceptRef& c) {
  std::vector<ConceptRef> rest;
  std::set<ConceptRef> seen{c};
  std::vector<ConceptRef> stack{c};
  while (!stack.empty()) {
    ConceptRef cur = std::move(stack.back());
    stack.pop_back();
    auto it = parents.find(cur);
    if (it == parents.end()) continue;
    for (const auto& p : it->second) {
      if (seen.insert(p).second) {
        rest.push_back(p);
        stack.push_back(p);
      }
    }
  }
  std::sort(rest.begin(), rest.end());
  std::vector<ConceptRef> out{c};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::string qref_text(const ConceptRef& r, const std::string& owner) {
  return r.ns == owner ? r.name : r.str();
}

}  // namespace

std::string_view to_string(RelationKind k) {
  return kRelationKindNames[static_cast<std::size_t>(k)];
}

std::optional<RelationKind> relation_kind_from_string(std::string_view s) {
  for (std::size_t i = 0; i < std::size(kRelationKindNames); ++i)
    if (kRelationKindNames[i] == s) return static_cast<RelationKind>(i);
  return std::nullopt;
}

bool is_decomposition(RelationKind k) {
  return k == RelationKind::PartOf || k == RelationKind::ConsistsOf;
}

std::string Multiplicity::str() const {
  return "[" + std::to_string(min) + ".." +
         (max ? std::to_string(*max) : std::string("*")) + "]";
}

const Concept* Ontology::find(const ConceptRef& ref) const {
  auto it = std::lower_bound(
      concepts.begin(), concepts.end(), ref,
      [](const Concept& c, const ConceptRef& r) { return c.ref < r; });
  if (it != concepts.end() && it->ref == ref) return &*it;
  return nullptr;
}

const RelationDecl* Ontology::find_relation(std::string_view id) const {
  for (const auto& r : relations)
    if (r.id == id) return &r;
  return nullptr;
}

std::vector<ConceptRef> Ontology::parents(const ConceptRef& ref) const {
  std::vector<ConceptRef> out;
  for (const auto& r : relations)
    if (r.kind == RelationKind::Specializes && r.source == ref)
      out.push_back(r.target);
  return out;
}

std::vector<ConceptRef> Ontology::children(const ConceptRef& ref) const {
  std::vector<ConceptRef> out;
  for (const auto& r : relations)
    if (r.kind == RelationKind::Specializes && r.target == ref)
      out.push_back(r.source);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void normalize(Ontology& o) {
  std::stable_sort(o.concepts.begin(), o.concepts.end(),
                   [](const Concept& a, const Concept& b) { return a.ref < b.ref; });

  std::vector<RelationDecl> explicit_rels;
  for (auto& r : o.relations)
    if (!r.from_header) explicit_rels.push_back(std::move(r));
  std::stable_sort(explicit_rels.begin(), explicit_rels.end(),
                   [](const RelationDecl& a, const RelationDecl& b) {
                     return a.owner < b.owner;
                   });

  std::map<std::string, std::vector<RelationDecl>> header;
  for (const auto& c : o.concepts) {
    for (const auto& parent : c.parents) {
      RelationDecl r;
      r.id = c.ref.str() + ":" + parent;
      r.kind = RelationKind::Specializes;
      r.source = c.ref;
      r.target = {c.ref.ns, parent};
      r.owner = c.ref.ns;
      r.from_header = true;
      r.pos = c.pos;
      header[c.ref.ns].push_back(std::move(r));
    }
  }

  std::set<std::string> owners;
  for (const auto& r : explicit_rels) owners.insert(r.owner);
  for (const auto& [ns, _] : header) owners.insert(ns);

  o.relations.clear();
  for (const auto& ns : owners) {
    for (auto& r : explicit_rels)
      if (r.owner == ns) o.relations.push_back(r);
    if (auto it = header.find(ns); it != header.end())
      for (auto& r : it->second) o.relations.push_back(std::move(r));
  }

  std::stable_sort(o.translations.begin(), o.translations.end(),
                   [](const TranslationLink& a, const TranslationLink& b) {
                     return std::tie(a.owner, a.id) < std::tie(b.owner, b.id);
                   });
}

void merge_into(Ontology& dst, const Ontology& other) {
  dst.namespaces.insert(other.namespaces.begin(), other.namespaces.end());
  dst.concepts.insert(dst.concepts.end(), other.concepts.begin(),
                      other.concepts.end());
  for (const auto& r : other.relations)
    if (!r.from_header) dst.relations.push_back(r);
  dst.translations.insert(dst.translations.end(), other.translations.begin(),
                          other.translations.end());
  normalize(dst);
}

std::string serialize_ontology(const Ontology& o) {
  std::ostringstream out;
  for (const auto& ns : o.namespaces) {
    out << "ontology " << ns << " {\n";
    for (const auto& c : o.concepts) {
      if (c.ref.ns != ns) continue;
      out << "  concept " << c.ref.name;
      for (std::size_t i = 0; i < c.parents.size(); ++i)
        out << (i == 0 ? " : " : ", ") << c.parents[i];
      if (!c.attrs.empty()) {
        out << " attrs(";
        for (std::size_t i = 0; i < c.attrs.size(); ++i)
          out << (i == 0 ? "" : ", ") << c.attrs[i];
        out << ")";
      }
      out << "\n";
    }
    for (const auto& r : o.relations) {
      if (r.owner != ns || r.from_header) continue;
      out << "  relation " << r.id << " : " << to_string(r.kind) << " "
          << qref_text(r.source, ns) << " -> " << qref_text(r.target, ns);
      if (r.multiplicity) out << " " << r.multiplicity->str();
      out << "\n";
    }
    for (const auto& t : o.translations) {
      if (t.owner != ns) continue;
      out << "  translate " << t.id << " : " << qref_text(t.from, ns) << " => "
          << qref_text(t.to, ns) << "\n";
    }
    out << "}\n";
  }
  return out.str();
}

std::vector<Finding> validate_ontology(const Ontology& o) {
  std::vector<Finding> out;

  for (std::size_t i = 1; i < o.concepts.size(); ++i) {
    const Concept& c = o.concepts[i];
    if (c.ref == o.concepts[i - 1].ref)
      out.push_back(make_finding("ONT005", Severity::Error, c.ref.name,
                                 "concept " + c.ref.str() + " declared more than once",
                                 c.pos));
  }

  auto unresolved = [&](const ConceptRef& ref, const std::string& where,
                        const SourcePos& pos) {
    if (o.resolves(ref)) return;
    out.push_back(make_finding("ONT002", Severity::Error, ref.name,
                               "unresolved concept " + ref.str() + " in " + where,
                               pos));
  };
  for (const auto& r : o.relations) {
    std::string where = r.from_header ? "specialization of " + r.source.str()
                                      : "relation " + r.id;
    if (!r.from_header) unresolved(r.source, where, r.pos);
    unresolved(r.target, where, r.pos);
  }
  for (const auto& t : o.translations) {
    unresolved(t.from, "translation " + t.id, t.pos);
    unresolved(t.to, "translation " + t.id, t.pos);
  }

  std::map<std::string, int> ids;
  for (const auto& r : o.relations) {
    if (++ids[r.id] == 2)
      out.push_back(make_finding("ONT003", Severity::Error, r.id,
                                 "relation id " + r.id + " declared more than once",
                                 r.pos));
  }
  for (const auto& t : o.translations) {
    if (++ids[t.id] == 2)
      out.push_back(make_finding("ONT003", Severity::Error, t.id,
                                 "id " + t.id + " declared more than once", t.pos));
  }

  for (const auto& t : o.translations) {
    if (t.from.ns == t.to.ns)
      out.push_back(make_finding(
          "ONT004", Severity::Error, t.id,
          "translation " + t.id + " links two concepts of namespace " + t.from.ns,
          t.pos));
  }

  // Specialization cycles: strongly connected components of the
  // specializes graph with more than one member or a self-loop.
  std::map<ConceptRef, int> index_of;
  std::vector<ConceptRef> nodes;
  for (const auto& c : o.concepts)
    if (index_of.emplace(c.ref, static_cast<int>(nodes.size())).second)
      nodes.push_back(c.ref);
  std::vector<std::vector<int>> adj(nodes.size());
  std::vector<bool> self_loop(nodes.size(), false);
  std::map<int, SourcePos> pos_of;
  for (const auto& r : o.relations) {
    if (r.kind != RelationKind::Specializes) continue;
    auto s = index_of.find(r.source);
    auto t = index_of.find(r.target);
    if (s == index_of.end() || t == index_of.end()) continue;
    adj[s->second].push_back(t->second);
    if (s->second == t->second) self_loop[s->second] = true;
    pos_of.emplace(s->second, r.pos);
  }

  const int n = static_cast<int>(nodes.size());
  std::vector<int> idx(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int counter = 0;
  std::function<void(int)> connect = [&](int v) {
    idx[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : adj[v]) {
      if (idx[w] < 0) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], idx[w]);
      }
    }
    if (low[v] != idx[v]) return;
    std::vector<int> members;
    int w;
    do {
      w = stack.back();
      stack.pop_back();
      on_stack[w] = false;
      members.push_back(w);
    } while (w != v);
    if (members.size() < 2 && !self_loop[v]) return;
    std::vector<ConceptRef> refs;
    for (int m : members) refs.push_back(nodes[m]);
    std::sort(refs.begin(), refs.end());
    std::string listing;
    for (const auto& r : refs) listing += (listing.empty() ? "" : ", ") + r.str();
    int first = index_of[refs.front()];
    SourcePos pos = pos_of.count(first) ? pos_of[first] : SourcePos{};
    out.push_back(make_finding("ONT001", Severity::Error, refs.front().name,
                               "specialization cycle {" + listing + "}", pos));
  };
  for (int v = 0; v < n; ++v)
    if (idx[v] < 0) connect(v);

  sort_findings(out);
  return out;
}

std::vector<ConceptRef> ancestors(const Ontology& o, const ConceptRef& c) {
  if (!o.resolves(c)) throw LookupError("unknown concept " + c.str());
  return closure(parent_map(o), c);
}

bool is_descendant_or_equal(const Ontology& o, const ConceptRef& c,
                            const ConceptRef& ancestor) {
  if (!o.resolves(c)) return false;
  auto anc = closure(parent_map(o), c);
  return std::find(anc.begin(), anc.end(), ancestor) != anc.end();
}

LicenseDecision relation_licensed(const Ontology& o, RelationKind kind,
                                  const ConceptRef& src, const ConceptRef& dst) {
  if (!o.resolves(src)) throw LookupError("unknown concept " + src.str());
  if (!o.resolves(dst)) throw LookupError("unknown concept " + dst.str());
  ParentMap parents = parent_map(o);
  auto src_anc = closure(parents, src);
  auto dst_anc = closure(parents, dst);
  std::set<ConceptRef> src_set(src_anc.begin(), src_anc.end());
  std::set<ConceptRef> dst_set(dst_anc.begin(), dst_anc.end());
  for (const auto& r : o.relations) {
    if (r.kind == kind && src_set.count(r.source) && dst_set.count(r.target))
      return {true, r.id};
  }
  return {false, std::nullopt};
}

}  // namespace adtrace
