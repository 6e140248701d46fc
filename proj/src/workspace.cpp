#include "adtrace/workspace.hpp"

#include <fstream>
#include <future>
#include <map>
#include <sstream>

namespace adtrace {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

std::string serialize_document(const Document& d) {
  std::vector<std::string> blocks;
  if (!d.ontology.namespaces.empty()) blocks.push_back(serialize_ontology(d.ontology));
  for (const auto& p : d.profiles) blocks.push_back(serialize_profile(p));
  for (const auto& m : d.models) blocks.push_back(serialize_model(m));
  std::string out;
  for (const auto& b : blocks) out += (out.empty() ? "" : "\n") + b;
  return out;
}

const Profile* Workspace::find_profile(std::string_view name) const {
  for (const auto& p : profiles)
    if (p.name == name) return &p;
  return nullptr;
}

Workspace merge_documents(std::vector<Document> docs) {
  Workspace ws;
  for (auto& d : docs) {
    merge_into(ws.ontology, d.ontology);
    for (auto& p : d.profiles) ws.profiles.push_back(std::move(p));
    for (auto& m : d.models) ws.models.push_back(std::move(m));
  }
  return ws;
}

Workspace load_workspace(const std::vector<std::string>& paths) {
  std::vector<std::future<Document>> pending;
  pending.reserve(paths.size());
  for (const auto& path : paths)
    pending.push_back(std::async(std::launch::async,
                                 [path] { return parse_document(read_text_file(path), path); }));
  std::vector<Document> docs;
  docs.reserve(paths.size());
  // get() in argument order so the first failing path is the one reported.
  for (auto& f : pending) docs.push_back(f.get());
  return merge_documents(std::move(docs));
}

std::vector<Finding> validate_workspace(const Workspace& ws) {
  std::vector<Finding> out = validate_ontology(ws.ontology);
  bool ontology_ok = !has_errors(out);

  std::map<std::string, bool> profile_ok;
  for (const auto& p : ws.profiles) {
    if (!ontology_ok) {
      profile_ok[p.name] = false;
      continue;
    }
    auto found = check_profile(p, ws.ontology);
    bool ok = !has_errors(found);
    auto [it, fresh] = profile_ok.emplace(p.name, ok);
    if (!fresh) it->second = it->second && ok;
    out.insert(out.end(), found.begin(), found.end());
  }

  for (const auto& m : ws.models) {
    const Profile* p = ws.find_profile(m.profile_ref);
    if (!p) {
      out.push_back(make_finding("MOD001", Severity::Error, m.id,
                                 "model " + m.id + " uses undeclared profile " +
                                     m.profile_ref,
                                 m.pos));
      continue;
    }
    if (!profile_ok[p->name]) continue;
    ModelView view(m, *p, ws.ontology);
    auto found = check_conformance(view);
    out.insert(out.end(), found.begin(), found.end());
    for (const auto& s : m.scenarios) {
      auto scn = check_scenario_wellformed(view, s.id);
      out.insert(out.end(), scn.begin(), scn.end());
    }
  }

  sort_findings(out);
  return out;
}

}  // namespace adtrace
