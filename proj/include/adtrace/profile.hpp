#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "adtrace/diagnostics.hpp"
#include "adtrace/ontology.hpp"

namespace adtrace {

/// Base metaclasses a stereotype may extend.
enum class Metaclass : std::uint8_t {
  Block,
  Actor,
  UseCase,
  Requirement,
  Interaction,
  PartAssociation,
  Association,
  Trace,
};

std::string_view to_string(Metaclass m);
std::optional<Metaclass> metaclass_from_string(std::string_view s);

/// PartAssociation, Association and Trace type relationships; the others
/// type elements.
bool is_relationship(Metaclass m);

/// `traces rel <id>` target.
struct RelationRef {
  std::string id;

  friend auto operator<=>(const RelationRef&, const RelationRef&) = default;
};

using TraceTarget = std::variant<ConceptRef, RelationRef>;

std::string describe(const TraceTarget& t);

struct Stereotype {
  std::string name;
  Metaclass extends = Metaclass::Block;
  std::optional<std::string> specializes;
  TraceTarget traces;
  SourcePos pos;

  const ConceptRef* traced_concept() const {
    return std::get_if<ConceptRef>(&traces);
  }
  const RelationRef* traced_relation() const {
    return std::get_if<RelationRef>(&traces);
  }

  friend bool operator==(const Stereotype&, const Stereotype&) = default;
};

struct Profile {
  std::string name;
  std::string ontology_ref;  // default namespace for trace targets
  std::vector<Stereotype> stereotypes;  // sorted by name
  SourcePos pos;

  const Stereotype* find(std::string_view stereotype) const;

  friend bool operator==(const Profile&, const Profile&) = default;
};

void normalize(Profile& p);

/// Parses exactly one `profile` block.
Profile parse_profile(std::string_view source,
                      const std::string& file = "<input>");

std::string serialize_profile(const Profile& p);

/// PRF001 unresolved trace target, PRF002 metaclass/trace-kind mismatch,
/// PRF003 specialization not mirrored by the ontology, PRF004 (warning)
/// duplicate trace with the same metaclass, PRF005 unresolved specializes,
/// PRF006 specialization cycle, PRF007 duplicate stereotype name.
std::vector<Finding> check_profile(const Profile& p, const Ontology& o);

/// Mapping table used by generate_profile. Concept rules are tried in
/// order and the first match decides the metaclass.
struct GenerationRules {
  enum class Select : std::uint8_t {
    LeafUnder,     // proper descendant of the anchor without children
    TranslatedTo,  // linked by a translation to a descendant-or-equal of the anchor
    DescendantOf,  // descendant-or-equal of the anchor
  };

  struct ConceptRule {
    Select select = Select::DescendantOf;
    ConceptRef anchor;
    Metaclass metaclass = Metaclass::Block;
  };

  std::vector<ConceptRule> concept_rules;
  std::map<RelationKind, Metaclass> relation_rules;

  static GenerationRules defaults();
};

class GenerationError : public std::runtime_error {
 public:
  GenerationError(const std::string& what, std::vector<std::string> uncovered)
      : std::runtime_error(what), uncovered_(std::move(uncovered)) {}

  const std::vector<std::string>& uncovered() const { return uncovered_; }

 private:
  std::vector<std::string> uncovered_;
};

/// Derives a profile skeleton from `o`. Throws GenerationError when a
/// non-specializes relation kind present in `o` has no metaclass.
Profile generate_profile(const Ontology& o, const GenerationRules& rules,
                         const std::string& profile_name,
                         const std::string& ontology_ref);

}  // namespace adtrace
