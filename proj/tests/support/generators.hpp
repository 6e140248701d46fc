#pragma once

#include <random>
#include <string>

#include "adtrace/model.hpp"
#include "adtrace/ontology.hpp"
#include "adtrace/profile.hpp"
#include "adtrace/trace.hpp"

namespace adtrace::testing {

/// Well-formed ontology over `ad` and (sometimes) `se` with at most
/// `max_concepts` concepts and `max_relations` relations, counting header
/// specializations. Specializations only point at earlier concepts of the
/// same namespace, so the result is acyclic. Anchor concepts used by the
/// default generation rules appear with high probability.
Ontology random_ontology(std::mt19937& rng, int max_concepts = 12, int max_relations = 10);

/// Model whose element and relation stereotypes are drawn from `p`. Ids are
/// unique; strings include quotes, backslashes, control characters and
/// non-ASCII text. Scenarios have at most `max_scenes` scenes.
Model random_model(std::mt19937& rng, const Profile& p, int max_scenes = 6);

/// Directed acyclic trace graph with 1..max_nodes nodes of the kinds the
/// completeness rules mention (plus plain elements).
TraceGraph random_trace_graph(std::mt19937& rng, int max_nodes = 15);

/// Random printable text, possibly empty, including characters that need
/// escaping.
std::string random_text(std::mt19937& rng, int max_len = 12);

int uniform(std::mt19937& rng, int lo, int hi);
bool chance(std::mt19937& rng, double p);

}  // namespace adtrace::testing
