#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace adtrace {

/// Assurance artifact kinds shared by the item definition and the
/// SOTIF specification-and-design documents.
enum class ArtifactKind : std::uint8_t {
  StakeholderNeed,
  NormativeStakeholderRequirement,
  UseCase,
  OperationalScenario,
  ODDStatement,
  VehicleBehaviorAssumption,
  ItemInterface,
  ActuatorPotential,
  PerformanceTarget,
  PreliminaryFunctionalRequirement,
  FunctionalArchitecture,
  TechnicalArchitecture,
  FunctionalDesign,
  TechnicalDesign,
  Hazard,
  RiskAcceptanceCriterion,
  SafetyGoal,
  SafetyRequirement,
};

inline constexpr std::size_t kArtifactKindCount = 18;

inline constexpr std::array<ArtifactKind, kArtifactKindCount> kAllArtifactKinds = {
    ArtifactKind::StakeholderNeed,
    ArtifactKind::NormativeStakeholderRequirement,
    ArtifactKind::UseCase,
    ArtifactKind::OperationalScenario,
    ArtifactKind::ODDStatement,
    ArtifactKind::VehicleBehaviorAssumption,
    ArtifactKind::ItemInterface,
    ArtifactKind::ActuatorPotential,
    ArtifactKind::PerformanceTarget,
    ArtifactKind::PreliminaryFunctionalRequirement,
    ArtifactKind::FunctionalArchitecture,
    ArtifactKind::TechnicalArchitecture,
    ArtifactKind::FunctionalDesign,
    ArtifactKind::TechnicalDesign,
    ArtifactKind::Hazard,
    ArtifactKind::RiskAcceptanceCriterion,
    ArtifactKind::SafetyGoal,
    ArtifactKind::SafetyRequirement,
};

std::string_view to_string(ArtifactKind k);
std::optional<ArtifactKind> artifact_kind_from_string(std::string_view s);

/// ISO 15288 technical processes that receive artifacts.
enum class Process15288 : std::uint8_t {
  BusinessMissionAnalysis,
  StakeholderNeedsAndRequirements,
  SystemRequirementsDefinition,
  SystemArchitectureDefinition,
  SystemDesignDefinition,
  RiskManagement,
};

inline constexpr std::size_t kProcessCount = 6;

inline constexpr std::array<Process15288, kProcessCount> kAllProcesses = {
    Process15288::BusinessMissionAnalysis,
    Process15288::StakeholderNeedsAndRequirements,
    Process15288::SystemRequirementsDefinition,
    Process15288::SystemArchitectureDefinition,
    Process15288::SystemDesignDefinition,
    Process15288::RiskManagement,
};

std::string_view to_string(Process15288 p);
std::optional<Process15288> process_from_string(std::string_view s);

enum class TraceKind : std::uint8_t {
  Satisfies,
  DerivesFrom,
  Refines,
  Mitigates,
  Addresses,
  TracedTo,
};

std::string_view to_string(TraceKind k);
std::optional<TraceKind> trace_kind_from_string(std::string_view s);

}  // namespace adtrace
