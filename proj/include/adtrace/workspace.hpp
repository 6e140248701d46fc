#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adtrace/diagnostics.hpp"
#include "adtrace/model.hpp"
#include "adtrace/ontology.hpp"
#include "adtrace/profile.hpp"

namespace adtrace {

/// Everything declared in one `.adt` source: any mix of ontology, profile
/// and model blocks.
struct Document {
  Ontology ontology;
  std::vector<Profile> profiles;
  std::vector<Model> models;
};

Document parse_document(std::string_view source,
                        const std::string& file = "<input>");

/// Canonical text of a whole document: ontology blocks, then profiles,
/// then models.
std::string serialize_document(const Document& d);

/// Union of every file on the command line.
struct Workspace {
  Ontology ontology;
  std::vector<Profile> profiles;
  std::vector<Model> models;

  const Profile* find_profile(std::string_view name) const;
};

Workspace merge_documents(std::vector<Document> docs);

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Whole file contents; throws IoError when unreadable.
std::string read_text_file(const std::string& path);

/// Reads and parses every path (concurrently), merging in argument order.
/// Throws IoError for unreadable files and ParseError for syntax errors.
Workspace load_workspace(const std::vector<std::string>& paths);

/// Runs the ontology, profile, conformance and scenario checks. Profile
/// checks are skipped while the ontology has errors, and model checks while
/// the model's profile is missing or has errors.
std::vector<Finding> validate_workspace(const Workspace& ws);

}  // namespace adtrace
