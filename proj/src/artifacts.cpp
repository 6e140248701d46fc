#include "adtrace/artifacts.hpp"

#include <string_view>

namespace adtrace {

namespace {

constexpr std::string_view kArtifactNames[] = {
    "StakeholderNeed",
    "NormativeStakeholderRequirement",
    "UseCase",
    "OperationalScenario",
    "ODDStatement",
    "VehicleBehaviorAssumption",
    "ItemInterface",
    "ActuatorPotential",
    "PerformanceTarget",
    "PreliminaryFunctionalRequirement",
    "FunctionalArchitecture",
    "TechnicalArchitecture",
    "FunctionalDesign",
    "TechnicalDesign",
    "Hazard",
    "RiskAcceptanceCriterion",
    "SafetyGoal",
    "SafetyRequirement",
};

constexpr std::string_view kProcessNames[] = {
    "BusinessMissionAnalysis",
    "StakeholderNeedsAndRequirements",
    "SystemRequirementsDefinition",
    "SystemArchitectureDefinition",
    "SystemDesignDefinition",
    "RiskManagement",
};

constexpr std::string_view kTraceNames[] = {
    "satisfies", "derives_from", "refines", "mitigates", "addresses", "traced_to",
};

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(const std::string_view (&names)[N], std::string_view s) {
  for (std::size_t i = 0; i < N; ++i)
    if (names[i] == s) return static_cast<Enum>(i);
  return std::nullopt;
}

}  // namespace

std::string_view to_string(ArtifactKind k) {
  return kArtifactNames[static_cast<std::size_t>(k)];
}

std::optional<ArtifactKind> artifact_kind_from_string(std::string_view s) {
  return lookup<ArtifactKind>(kArtifactNames, s);
}

std::string_view to_string(Process15288 p) {
  return kProcessNames[static_cast<std::size_t>(p)];
}

std::optional<Process15288> process_from_string(std::string_view s) {
  return lookup<Process15288>(kProcessNames, s);
}

std::string_view to_string(TraceKind k) {
  return kTraceNames[static_cast<std::size_t>(k)];
}

std::optional<TraceKind> trace_kind_from_string(std::string_view s) {
  return lookup<TraceKind>(kTraceNames, s);
}

}  // namespace adtrace
