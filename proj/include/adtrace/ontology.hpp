#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "adtrace/diagnostics.hpp"

namespace adtrace {

/// A concept name qualified by its domain namespace, printed as `ns.Name`.
struct ConceptRef {
  std::string ns;
  std::string name;

  std::string str() const { return ns + "." + name; }

  friend auto operator<=>(const ConceptRef&, const ConceptRef&) = default;
  friend bool operator==(const ConceptRef&, const ConceptRef&) = default;
};

enum class RelationKind : std::uint8_t {
  Specializes,
  PartOf,
  ConsistsOf,
  AbleToPerform,
  Defines,
  ElementOf,
  HasNeighbor,
};

inline constexpr RelationKind kAllRelationKinds[] = {
    RelationKind::Specializes,   RelationKind::PartOf,
    RelationKind::ConsistsOf,    RelationKind::AbleToPerform,
    RelationKind::Defines,       RelationKind::ElementOf,
    RelationKind::HasNeighbor,
};

std::string_view to_string(RelationKind k);
std::optional<RelationKind> relation_kind_from_string(std::string_view s);

/// Decomposition kinds: the whole reaches its parts through these.
bool is_decomposition(RelationKind k);

struct Multiplicity {
  unsigned min = 0;
  std::optional<unsigned> max;  // empty means unbounded

  bool admits(std::size_t count) const {
    return count >= min && (!max || count <= *max);
  }
  std::string str() const;

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

struct RelationDecl {
  std::string id;
  RelationKind kind = RelationKind::Specializes;
  ConceptRef source;
  ConceptRef target;
  std::optional<Multiplicity> multiplicity;
  std::string owner;       // namespace of the enclosing block
  bool from_header = false;  // generated from Concept::parents
  SourcePos pos;

  friend bool operator==(const RelationDecl&, const RelationDecl&) = default;
};

struct TranslationLink {
  std::string id;
  ConceptRef from;
  ConceptRef to;
  std::string owner;
  SourcePos pos;

  friend bool operator==(const TranslationLink&, const TranslationLink&) = default;
};

struct Concept {
  ConceptRef ref;
  std::vector<std::string> parents;  // header specializations, same namespace
  std::vector<std::string> attrs;
  SourcePos pos;

  friend bool operator==(const Concept&, const Concept&) = default;
};

/// Parsed domain ontology. Collections are kept in canonical order:
/// concepts by reference, relations grouped by owning namespace (explicit
/// declarations in source order, then header specializations by concept),
/// translations by (owner, id).
struct Ontology {
  std::set<std::string> namespaces;
  std::vector<Concept> concepts;
  std::vector<RelationDecl> relations;
  std::vector<TranslationLink> translations;

  const Concept* find(const ConceptRef& ref) const;
  const RelationDecl* find_relation(std::string_view id) const;
  bool resolves(const ConceptRef& ref) const { return find(ref) != nullptr; }

  /// Direct specializes targets of `ref`, in relation order.
  std::vector<ConceptRef> parents(const ConceptRef& ref) const;
  /// Concepts that directly specialize `ref`, sorted.
  std::vector<ConceptRef> children(const ConceptRef& ref) const;

  friend bool operator==(const Ontology&, const Ontology&) = default;
};

/// Restores canonical collection order after construction or merging and
/// regenerates the header specializations from Concept::parents.
void normalize(Ontology& o);

/// Appends the declarations of `other` (namespace union) and renormalizes.
void merge_into(Ontology& dst, const Ontology& other);

Ontology parse_ontology(std::string_view source,
                        const std::string& file = "<input>");

std::string serialize_ontology(const Ontology& o);

/// ONT001 specialization cycle, ONT002 unresolved reference, ONT003
/// duplicate relation/translation id, ONT004 same-namespace translation,
/// ONT005 duplicate concept.
std::vector<Finding> validate_ontology(const Ontology& o);

/// Reflexive-transitive specializes closure: `c` first, the rest sorted.
/// Throws LookupError when `c` is not declared.
std::vector<ConceptRef> ancestors(const Ontology& o, const ConceptRef& c);

bool is_descendant_or_equal(const Ontology& o, const ConceptRef& c,
                            const ConceptRef& ancestor);

struct LicenseDecision {
  bool licensed = false;
  std::optional<std::string> by;

  friend bool operator==(const LicenseDecision&, const LicenseDecision&) = default;
};

/// True iff some relation of `kind` connects an ancestor of `src` to an
/// ancestor of `dst`; `by` names the first such relation in canonical order.
LicenseDecision relation_licensed(const Ontology& o, RelationKind kind,
                                  const ConceptRef& src, const ConceptRef& dst);

}  // namespace adtrace
