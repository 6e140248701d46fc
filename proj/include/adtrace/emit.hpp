#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adtrace/diagnostics.hpp"
#include "adtrace/model.hpp"
#include "adtrace/trace.hpp"

namespace adtrace {

/// System context diagram of a scenario as a DOT digraph. Nodes are the
/// derived context plus the ego; decomposition instances become whole ->
/// part edges with a diamond tail; has_neighbor and other associations are
/// not drawn. Throws LookupError for an unknown scenario.
std::string emit_context_dot(const ModelView& view, std::string_view scenario);

/// Use case diagram: ellipse for the use case, undirected actor edges and
/// dashed `traced_to` edges to stakeholders.
std::string emit_usecase_dot(const ModelView& view, std::string_view use_case);

/// `participants: a, b, ...` followed by `<order>: <from> -> <to>: <label>`
/// lines in declaration order.
std::string emit_sequence_text(const Model& m, std::string_view interaction);

enum class ReportFormat : std::uint8_t { Json, Markdown, Text };

std::optional<ReportFormat> report_format_from_string(std::string_view s);

/// JSON: `{"version":1,"items":[...]}`; markdown: one table per severity;
/// text: one line per finding ordered error, warning, info.
std::string emit_report(const std::vector<Finding>& findings, ReportFormat fmt);

/// JSON adds a `totals` object; markdown is one row per process.
std::string emit_report(const CoverageReport& report, ReportFormat fmt);

/// `file:line:col: severity: CODE [subject] message`
std::string format_finding(const Finding& f);

}  // namespace adtrace
