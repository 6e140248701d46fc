#include "corpus.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace adtrace::testing {

std::filesystem::path corpus_dir() { return ADTRACE_CORPUS_DIR; }
std::filesystem::path golden_dir() { return ADTRACE_GOLDEN_DIR; }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CorpusText corpus_text() {
  return {read_file(corpus_dir() / "ontology.adt"), read_file(corpus_dir() / "profile.adt"),
          read_file(corpus_dir() / "model.adt")};
}

std::vector<std::string> corpus_paths() {
  return {(corpus_dir() / "ontology.adt").string(), (corpus_dir() / "profile.adt").string(),
          (corpus_dir() / "model.adt").string()};
}

Workspace corpus_workspace() { return workspace_from(corpus_text()); }

Workspace workspace_from(const CorpusText& text) {
  std::vector<Document> docs;
  docs.push_back(parse_document(text.ontology, "ontology.adt"));
  docs.push_back(parse_document(text.profile, "profile.adt"));
  docs.push_back(parse_document(text.model, "model.adt"));
  return merge_documents(std::move(docs));
}

std::string replace_once(const std::string& text, const std::string& from,
                         const std::string& to) {
  auto at = text.find(from);
  if (at == std::string::npos || text.find(from, at + 1) != std::string::npos)
    throw std::runtime_error("expected exactly one occurrence of: " + from);
  return text.substr(0, at) + to + text.substr(at + from.size());
}

namespace {

std::pair<std::size_t, std::size_t> unique_line(const std::string& text,
                                                const std::string& needle) {
  auto at = text.find(needle);
  if (at == std::string::npos || text.find(needle, at + 1) != std::string::npos)
    throw std::runtime_error("expected exactly one line containing: " + needle);
  auto begin = text.rfind('\n', at);
  begin = begin == std::string::npos ? 0 : begin + 1;
  auto end = text.find('\n', at);
  end = end == std::string::npos ? text.size() : end + 1;
  return {begin, end};
}

}  // namespace

std::string insert_after_line(const std::string& text, const std::string& anchor,
                              const std::string& line) {
  auto [begin, end] = unique_line(text, anchor);
  return text.substr(0, end) + line + "\n" + text.substr(end);
}

std::string remove_line(const std::string& text, const std::string& needle) {
  auto [begin, end] = unique_line(text, needle);
  return text.substr(0, begin) + text.substr(end);
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("adtrace-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string TempDir::write(const std::string& name, const std::string& content) const {
  auto p = path_ / name;
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p.string();
}

std::vector<std::string> TempDir::write_corpus(const CorpusText& text) const {
  return {write("ontology.adt", text.ontology), write("profile.adt", text.profile),
          write("model.adt", text.model)};
}

}  // namespace adtrace::testing

namespace adtrace::testing {

bool matches_golden(const std::string& name, const std::string& actual) {
  auto path = golden_dir() / name;
  if (std::getenv("ADTRACE_UPDATE_GOLDEN")) {
    std::ofstream out(path, std::ios::binary);
    out << actual;
    return true;
  }
  return std::filesystem::exists(path) && read_file(path) == actual;
}

}  // namespace adtrace::testing
