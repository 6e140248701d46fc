#include "adtrace/diagnostics.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace adtrace {

std::string SourcePos::str() const {
  std::string out = file.empty() ? std::string("<input>") : file;
  out += ':' + std::to_string(line) + ':' + std::to_string(col);
  return out;
}

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::Error:
      return "error";
    case Severity::Warning:
      return "warning";
    case Severity::Info:
      return "info";
  }
  return "error";
}

bool valid_rule_code(std::string_view code) {
  if (code.size() != 6) return false;
  for (int i = 0; i < 3; ++i)
    if (code[i] < 'A' || code[i] > 'Z') return false;
  for (int i = 3; i < 6; ++i)
    if (!std::isdigit(static_cast<unsigned char>(code[i]))) return false;
  return true;
}

Finding make_finding(std::string code, Severity severity, std::string subject,
                     std::string message, const SourcePos& pos) {
  Finding f;
  f.code = std::move(code);
  f.severity = severity;
  f.subject = std::move(subject);
  f.message = std::move(message);
  if (pos.valid()) f.position = pos;
  return f;
}

void sort_findings(std::vector<Finding>& findings) {
  std::stable_sort(findings.begin(), findings.end(),
                   [](const Finding& a, const Finding& b) {
                     return std::tie(a.code, a.subject, a.message) <
                            std::tie(b.code, b.subject, b.message);
                   });
}

bool has_errors(const std::vector<Finding>& findings) {
  return std::any_of(findings.begin(), findings.end(),
                     [](const Finding& f) { return f.is_error(); });
}

ParseError::ParseError(SourcePos pos, std::string expected, std::string found)
    : std::runtime_error(pos.str() + ": expected " + expected + ", found " +
                         found),
      pos_(std::move(pos)),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

}  // namespace adtrace
