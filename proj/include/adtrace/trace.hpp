#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "adtrace/artifacts.hpp"
#include "adtrace/diagnostics.hpp"
#include "adtrace/model.hpp"

namespace adtrace {

/// Artifact kind to ISO 15288 process. Always total.
class StandardsMap {
 public:
  static StandardsMap defaults();

  Process15288 at(ArtifactKind k) const {
    return entries_[static_cast<std::size_t>(k)];
  }
  void set(ArtifactKind k, Process15288 p) {
    entries_[static_cast<std::size_t>(k)] = p;
  }
  /// Kinds mapped to `p`, in enumeration order.
  std::vector<ArtifactKind> kinds_for(Process15288 p) const;

 private:
  std::array<Process15288, kArtifactKindCount> entries_{};
};

/// Applies `KIND -> PROCESS` lines on top of the default table.
StandardsMap parse_standards_map(std::string_view source,
                                 const std::string& file = "<input>");

/// Non-artifact node categories in the trace graph.
enum class NodeCategory : std::uint8_t { Element, Interaction };

std::string_view to_string(NodeCategory c);

using NodeKind = std::variant<ArtifactKind, NodeCategory>;

struct TraceNode {
  std::string id;
  NodeKind kind;
  std::string model;
  SourcePos pos;

  bool has_kind(ArtifactKind k) const {
    auto* a = std::get_if<ArtifactKind>(&kind);
    return a && *a == k;
  }
};

struct TraceLink {
  std::string id;
  std::string source;
  std::string target;
  TraceKind kind = TraceKind::TracedTo;
  /// Implied by model structure (scene membership, use case subsumption,
  /// decomposition, interaction scope) rather than a `trace` declaration.
  bool structural = false;
  SourcePos pos;
};

/// Directed simple graph over artifacts and model elements.
struct TraceGraph {
  std::vector<TraceNode> nodes;  // sorted by id
  std::vector<TraceLink> edges;  // trace declarations first, then structural

  const TraceNode* find(std::string_view id) const;
  /// Index of `id` in `nodes`, or -1.
  int index_of(std::string_view id) const;
};

/// Raised by build_trace_graph; `code()` is TRC007 (duplicate node id) or
/// TRC008 (trace link with an unresolved endpoint or a self-loop).
class TraceGraphError : public std::runtime_error {
 public:
  TraceGraphError(std::string code, std::string subject, const std::string& what,
                  SourcePos pos = {})
      : std::runtime_error(what),
        code_(std::move(code)),
        subject_(std::move(subject)),
        pos_(std::move(pos)) {}

  const std::string& code() const { return code_; }
  const std::string& subject() const { return subject_; }
  const SourcePos& position() const { return pos_; }

 private:
  std::string code_;
  std::string subject_;
  SourcePos pos_;
};

/// Nodes: artifacts (declared kind), use cases (UseCase), scenarios
/// (OperationalScenario), interactions and elements. Edges: one per trace
/// declaration plus structural edges scenario -> use case, scenario ->
/// scene entity / ego / behavior, interaction -> scenario and one edge per
/// relation instance. Parallel edges are dropped.
TraceGraph build_trace_graph(std::span<const Model> models);

/// Rule toggles for trace checking.
struct RuleSet {
  bool safety_requirement_to_hazard = true;    // TRC001
  bool hazard_to_scenario = true;              // TRC002
  bool scenario_to_use_case = true;            // TRC003
  bool use_case_to_stakeholder_need = true;    // TRC004
  bool acceptance_criterion_to_need = true;    // TRC005
  bool orphans = true;                         // TRC006 (CLI trace-check)

  static RuleSet defaults() { return {}; }
};

/// Reads `CODE on|off` lines; unknown codes are rejected with position.
RuleSet parse_rule_set(std::string_view source,
                       const std::string& file = "<input>");

/// TRC001..TRC005 reachability findings over directed edges of any kind.
std::vector<Finding> check_trace_completeness(const TraceGraph& g,
                                              const RuleSet& rules = {});

/// Nodes with no incident edge, sorted.
std::vector<std::string> detect_orphans(const TraceGraph& g);

/// detect_orphans as TRC006 error findings.
std::vector<Finding> orphan_findings(const TraceGraph& g);

enum class CoverageStatus : std::uint8_t { Covered, Partial, Empty };

std::string_view to_string(CoverageStatus s);

struct CoverageEntry {
  Process15288 process = Process15288::BusinessMissionAnalysis;
  std::vector<ArtifactKind> present;  // enumeration order
  std::vector<ArtifactKind> absent;
  std::size_t artifact_count = 0;
  CoverageStatus status = CoverageStatus::Empty;

  /// False when the map assigns no kind to this process.
  bool mapped() const { return !present.empty() || !absent.empty(); }
};

struct CoverageReport {
  std::vector<CoverageEntry> entries;  // process enumeration order
  std::size_t artifacts = 0;
  std::size_t covered = 0;
  std::size_t partial = 0;
  std::size_t empty = 0;
};

CoverageReport process_coverage(const TraceGraph& g, const StandardsMap& map);

struct GuidewordPrompt {
  std::string element;
  std::string guideword;
  std::string prompt;

  friend bool operator==(const GuidewordPrompt&, const GuidewordPrompt&) = default;
};

/// Cartesian product of (derived context plus ego behaviors) and
/// `guidewords`; subjects sorted, guidewords in the given order.
std::vector<GuidewordPrompt> guideword_candidates(
    const ModelView& view, std::string_view scenario,
    std::span<const std::string> guidewords);

}  // namespace adtrace
