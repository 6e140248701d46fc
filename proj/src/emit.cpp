#include "adtrace/emit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace adtrace {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dot_id(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string stereotype_label(const Model& m, const std::string& id) {
  const Element* e = m.element(id);
  if (!e) return dot_id(id);
  return "\"«" + e->stereotype + "»\\n" + id + "\"";
}

template <typename Range>
std::string join(const Range& items, std::string_view sep) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += sep;
    out += item;
  }
  return out;
}

std::string or_none(std::string s) { return s.empty() ? "none" : s; }

std::vector<std::string> kind_names(const std::vector<ArtifactKind>& kinds) {
  std::vector<std::string> out;
  for (auto k : kinds) out.emplace_back(to_string(k));
  return out;
}

std::vector<const Finding*> severity_ordered(const std::vector<Finding>& findings) {
  std::vector<const Finding*> out;
  for (const auto& f : findings) out.push_back(&f);
  std::stable_sort(out.begin(), out.end(), [](const Finding* a, const Finding* b) {
    return std::tie(a->severity, a->code, a->subject, a->message) <
           std::tie(b->severity, b->code, b->subject, b->message);
  });
  return out;
}

std::string md_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|')
      out += "\\|";
    else if (c == '\n')
      out += ' ';
    else
      out += c;
  }
  return out;
}

}  // namespace

std::string emit_context_dot(const ModelView& view, std::string_view scenario) {
  const Model& m = view.model();
  const Scenario* s = m.scenario(scenario);
  if (!s) throw LookupError("unknown scenario " + std::string(scenario));

  auto ctx = derive_system_context(view, scenario);
  std::set<std::string> nodes(ctx.begin(), ctx.end());
  nodes.insert(s->ego);

  std::ostringstream out;
  out << "digraph " << dot_id(s->id) << " {\n";
  out << "  node [shape=box];\n";
  for (const auto& id : nodes) {
    out << "  " << dot_id(id) << " [label=" << stereotype_label(m, id);
    if (id == s->ego) out << ", style=bold, peripheries=2";
    out << "];\n";
  }

  std::map<std::pair<std::string, std::string>, const RelationDecl*> edges;
  for (const auto& r : m.rels) {
    const RelationDecl* decl = view.relation_of(r);
    if (!decl || !is_decomposition(decl->kind)) continue;
    std::string whole = decl->kind == RelationKind::PartOf ? r.target : r.source;
    std::string part = decl->kind == RelationKind::PartOf ? r.source : r.target;
    if (nodes.count(whole) && nodes.count(part)) edges.emplace(std::pair{whole, part}, decl);
  }
  for (const auto& [ends, decl] : edges) {
    out << "  " << dot_id(ends.first) << " -> " << dot_id(ends.second)
        << " [dir=both, arrowtail=diamond, arrowhead=none";
    if (decl->multiplicity) out << ", label=" << dot_id(decl->multiplicity->str());
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_usecase_dot(const ModelView& view, std::string_view use_case) {
  const Model& m = view.model();
  const UseCaseDecl* u = m.use_case(use_case);
  if (!u) throw LookupError("unknown use case " + std::string(use_case));

  std::ostringstream out;
  out << "graph " << dot_id(u->id) << " {\n";
  out << "  " << dot_id(u->id) << " [shape=ellipse];\n";
  for (const auto& a : u->actors)
    out << "  " << dot_id(a) << " [shape=box, label=" << stereotype_label(m, a) << "];\n";
  for (const auto& h : u->stakeholders)
    if (!u->actors.count(h))
      out << "  " << dot_id(h) << " [shape=box, label=" << stereotype_label(m, h)
          << "];\n";
  for (const auto& a : u->actors)
    out << "  " << dot_id(a) << " -- " << dot_id(u->id) << ";\n";
  for (const auto& h : u->stakeholders)
    out << "  " << dot_id(u->id) << " -- " << dot_id(h)
        << " [style=dashed, label=\"traced_to\"];\n";
  out << "}\n";
  return out.str();
}

std::string emit_sequence_text(const Model& m, std::string_view interaction) {
  const Interaction* in = m.interaction(interaction);
  if (!in) throw LookupError("unknown interaction " + std::string(interaction));

  std::vector<std::string> lifelines;
  auto note = [&](const std::string& id) {
    if (std::find(lifelines.begin(), lifelines.end(), id) == lifelines.end())
      lifelines.push_back(id);
  };
  for (const auto& msg : in->messages) {
    note(msg.from);
    note(msg.to);
  }

  std::ostringstream out;
  out << "participants:";
  if (!lifelines.empty()) out << " " << join(lifelines, ", ");
  out << "\n";
  for (const auto& msg : in->messages)
    out << msg.order << ": " << msg.from << " -> " << msg.to << ": " << msg.label
        << "\n";
  return out.str();
}

std::optional<ReportFormat> report_format_from_string(std::string_view s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "markdown") return ReportFormat::Markdown;
  if (s == "text") return ReportFormat::Text;
  return std::nullopt;
}

std::string format_finding(const Finding& f) {
  std::string out;
  if (f.position) out += f.position->str() + ": ";
  out += std::string(to_string(f.severity)) + ": " + f.code + " [" + f.subject +
         "] " + f.message;
  return out;
}

std::string emit_report(const std::vector<Finding>& findings, ReportFormat fmt) {
  auto ordered = severity_ordered(findings);
  switch (fmt) {
    case ReportFormat::Json: {
      ordered_json doc;
      doc["version"] = 1;
      doc["items"] = ordered_json::array();
      for (const Finding* f : ordered) {
        ordered_json item;
        item["code"] = f->code;
        item["severity"] = to_string(f->severity);
        item["subject"] = f->subject;
        item["message"] = f->message;
        if (f->position) {
          item["file"] = f->position->file;
          item["line"] = f->position->line;
          item["col"] = f->position->col;
        }
        doc["items"].push_back(std::move(item));
      }
      return doc.dump();
    }
    case ReportFormat::Markdown: {
      if (ordered.empty()) return "No findings.\n";
      std::ostringstream out;
      bool first_table = true;
      for (Severity sev : {Severity::Error, Severity::Warning, Severity::Info}) {
        bool header = false;
        for (const Finding* f : ordered) {
          if (f->severity != sev) continue;
          if (!header) {
            if (!first_table) out << "\n";
            out << "## " << to_string(sev) << "\n\n"
                << "| Code | Subject | Message | Location |\n"
                << "| --- | --- | --- | --- |\n";
            header = true;
            first_table = false;
          }
          out << "| " << f->code << " | " << md_cell(f->subject) << " | "
              << md_cell(f->message) << " | "
              << (f->position ? f->position->str() : std::string()) << " |\n";
        }
      }
      return out.str();
    }
    case ReportFormat::Text: {
      std::string out;
      for (const Finding* f : ordered) out += format_finding(*f) + "\n";
      return out;
    }
  }
  return {};
}

std::string emit_report(const CoverageReport& report, ReportFormat fmt) {
  switch (fmt) {
    case ReportFormat::Json: {
      ordered_json doc;
      doc["version"] = 1;
      doc["items"] = ordered_json::array();
      for (const auto& e : report.entries) {
        ordered_json item;
        item["process"] = to_string(e.process);
        item["status"] = to_string(e.status);
        item["mapped"] = e.mapped();
        item["present"] = kind_names(e.present);
        item["absent"] = kind_names(e.absent);
        item["artifacts"] = e.artifact_count;
        doc["items"].push_back(std::move(item));
      }
      doc["totals"] = {{"artifacts", report.artifacts},
                       {"covered", report.covered},
                       {"partial", report.partial},
                       {"empty", report.empty}};
      return doc.dump();
    }
    case ReportFormat::Markdown: {
      std::ostringstream out;
      out << "| Process | Status | Present | Absent |\n"
          << "| --- | --- | --- | --- |\n";
      for (const auto& e : report.entries) {
        out << "| " << to_string(e.process) << " | " << to_string(e.status) << " | ";
        if (!e.mapped())
          out << "no artifact kinds mapped |  |\n";
        else
          out << join(kind_names(e.present), ", ") << " | "
              << join(kind_names(e.absent), ", ") << " |\n";
      }
      out << "\nTotals: " << report.artifacts << " artifacts; " << report.covered
          << " covered, " << report.partial << " partial, " << report.empty
          << " empty.\n";
      return out.str();
    }
    case ReportFormat::Text: {
      std::ostringstream out;
      for (const auto& e : report.entries) {
        out << to_string(e.process) << ": " << to_string(e.status);
        if (!e.mapped())
          out << " (no artifact kinds mapped)";
        else
          out << " (present: " << or_none(join(kind_names(e.present), ", "))
              << "; absent: " << or_none(join(kind_names(e.absent), ", ")) << ")";
        out << "\n";
      }
      return out.str();
    }
  }
  return {};
}

}  // namespace adtrace
