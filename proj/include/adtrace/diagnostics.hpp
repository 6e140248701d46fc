#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adtrace {

/// Location of a declaration in an `.adt` source. Positions are carried for
/// diagnostics only and never participate in structural equality, so two
/// values parsed from differently formatted sources still compare equal.
struct SourcePos {
  std::string file;
  int line = 0;
  int col = 0;

  bool valid() const { return line > 0; }
  std::string str() const;

  friend bool operator==(const SourcePos&, const SourcePos&) { return true; }
};

enum class Severity : std::uint8_t { Error = 0, Warning = 1, Info = 2 };

std::string_view to_string(Severity s);

/// One diagnostic produced by a check.
struct Finding {
  std::string code;  // [A-Z]{3}[0-9]{3}
  Severity severity = Severity::Error;
  std::string subject;
  std::string message;
  std::optional<SourcePos> position;

  bool is_error() const { return severity == Severity::Error; }

  friend bool operator==(const Finding& a, const Finding& b) {
    return a.code == b.code && a.severity == b.severity &&
           a.subject == b.subject && a.message == b.message;
  }
};

bool valid_rule_code(std::string_view code);

Finding make_finding(std::string code, Severity severity, std::string subject,
                     std::string message, const SourcePos& pos = {});

/// Sorts by (code, subject, message).
void sort_findings(std::vector<Finding>& findings);

bool has_errors(const std::vector<Finding>& findings);

/// Syntax error raised by every parser in the toolkit.
class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, std::string expected, std::string found);

  const SourcePos& position() const { return pos_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourcePos pos_;
  std::string expected_;
  std::string found_;
};

/// Raised by query operations on identifiers that do not resolve.
class LookupError : public std::runtime_error {
 public:
  explicit LookupError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace adtrace
