#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "adtrace/artifacts.hpp"
#include "adtrace/diagnostics.hpp"
#include "adtrace/ontology.hpp"
#include "adtrace/profile.hpp"

namespace adtrace {

struct Element {
  std::string id;
  std::string stereotype;
  std::map<std::string, std::string> attrs;
  SourcePos pos;

  friend bool operator==(const Element&, const Element&) = default;
};

struct RelInstance {
  std::string id;
  std::string via;  // relationship stereotype
  std::string source;
  std::string target;
  SourcePos pos;

  friend bool operator==(const RelInstance&, const RelInstance&) = default;
};

struct Scene {
  int index = 0;
  std::set<std::string> entities;
  SourcePos pos;

  friend bool operator==(const Scene&, const Scene&) = default;
};

struct BehaviorAssignment {
  std::string agent;
  std::string behavior;
  SourcePos pos;

  friend bool operator==(const BehaviorAssignment&, const BehaviorAssignment&) = default;
};

struct Scenario {
  std::string id;
  std::string ego;
  std::vector<Scene> scenes;  // declaration order is temporal order
  std::vector<BehaviorAssignment> behaviors;
  SourcePos pos;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct UseCaseDecl {
  std::string id;
  std::set<std::string> scenarios;
  std::set<std::string> actors;
  std::set<std::string> stakeholders;
  SourcePos pos;

  friend bool operator==(const UseCaseDecl&, const UseCaseDecl&) = default;
};

struct Message {
  int order = 0;
  std::string from;
  std::string to;
  std::string label;
  SourcePos pos;

  friend bool operator==(const Message&, const Message&) = default;
};

struct Interaction {
  std::string id;
  std::string scenario;
  std::vector<Message> messages;
  SourcePos pos;

  friend bool operator==(const Interaction&, const Interaction&) = default;
};

struct Artifact {
  std::string id;
  ArtifactKind kind = ArtifactKind::StakeholderNeed;
  std::optional<std::string> text;
  SourcePos pos;

  friend bool operator==(const Artifact&, const Artifact&) = default;
};

struct TraceDecl {
  std::string id;
  TraceKind kind = TraceKind::TracedTo;
  std::string source;
  std::string target;
  SourcePos pos;

  friend bool operator==(const TraceDecl&, const TraceDecl&) = default;
};

/// A stereotype-typed model. Every top-level collection is sorted by id.
struct Model {
  std::string id;
  std::string profile_ref;
  std::vector<Element> elements;
  std::vector<RelInstance> rels;
  std::vector<Scenario> scenarios;
  std::vector<UseCaseDecl> use_cases;
  std::vector<Interaction> interactions;
  std::vector<Artifact> artifacts;
  std::vector<TraceDecl> traces;
  SourcePos pos;

  const Element* element(std::string_view id) const;
  const Scenario* scenario(std::string_view id) const;
  const UseCaseDecl* use_case(std::string_view id) const;
  const Interaction* interaction(std::string_view id) const;

  /// Every declared id, including duplicates, in canonical order.
  std::vector<std::string> declared_ids() const;

  friend bool operator==(const Model&, const Model&) = default;
};

void normalize(Model& m);

/// Parses exactly one `model` block.
Model parse_model(std::string_view source, const std::string& file = "<input>");

std::string serialize_model(const Model& m);

/// Concepts the model layer checks against.
struct ModelVocabulary {
  ConceptRef scene_entity{"ad", "SceneEntity"};
  ConceptRef agent{"ad", "Agent"};
};

/// A model bound to its profile and ontology, with id lookups.
class ModelView {
 public:
  ModelView(const Model& m, const Profile& p, const Ontology& o,
            ModelVocabulary vocab = {});

  const Model& model() const { return *model_; }
  const Profile& profile() const { return *profile_; }
  const Ontology& ontology() const { return *ontology_; }
  const ModelVocabulary& vocabulary() const { return vocab_; }

  const Element* element(std::string_view id) const;
  const Stereotype* stereotype_of(const Element& e) const;
  /// Traced concept of the element's stereotype, if any.
  std::optional<ConceptRef> concept_of(std::string_view element_id) const;
  /// Traced ontology relation of the instance's via-stereotype, if any.
  const RelationDecl* relation_of(const RelInstance& r) const;

  bool is_scene_entity(std::string_view element_id) const;
  bool is_agent(std::string_view element_id) const;

 private:
  const Model* model_;
  const Profile* profile_;
  const Ontology* ontology_;
  ModelVocabulary vocab_;
  std::unordered_map<std::string, const Element*> elements_;  // duplicates: min stereotype
};

/// MOD001 unresolved/misapplied stereotype, MOD002 unlicensed relation
/// instance, MOD003 multiplicity violation, MOD004 scene entity outside the
/// scene-entity hierarchy, MOD005 interaction endpoint outside the derived
/// context and ego, MOD006 (warning) unknown attribute, MOD007 duplicate id,
/// MOD008 unresolved reference, MOD009 non-increasing message order.
std::vector<Finding> check_conformance(const ModelView& view);

/// Union of the scenario's scene entities without the ego, closed over
/// part_of / consists_of instances from whole to part; sorted.
/// Throws LookupError for an unknown scenario.
std::vector<std::string> derive_system_context(const ModelView& view,
                                               std::string_view scenario);

/// SCN001 non-increasing scene index, SCN002 ego missing from a scene,
/// SCN003 behavior assigned to a non-agent, SCN004 no scenes.
std::vector<Finding> check_scenario_wellformed(const ModelView& view,
                                               std::string_view scenario);

}  // namespace adtrace
