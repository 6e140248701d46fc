// Recursive-descent parser for the `.adt` block language (ontology,
// profile and model blocks share one lexer and one token cursor).

#include <string>
#include <string_view>
#include <utility>

#include "adtrace/lexer.hpp"
#include "adtrace/model.hpp"
#include "adtrace/ontology.hpp"
#include "adtrace/profile.hpp"
#include "adtrace/workspace.hpp"

namespace adtrace {

namespace {

class BlockParser {
 public:
  BlockParser(std::string_view source, const std::string& file)
      : cur_(tokenize(source, file)) {}

  bool at_end() const { return cur_.at_end(); }
  const Token& peek() const { return cur_.peek(); }
  [[noreturn]] void fail(std::string expected) const { cur_.fail(std::move(expected)); }

  void parse_ontology_block(Ontology& o);
  Profile parse_profile_block();
  Model parse_model_block();

 private:
  ConceptRef parse_qref(const std::string& default_ns);
  int parse_int(std::string_view what);

  void parse_concept(Ontology& o, const std::string& ns);
  void parse_relation(Ontology& o, const std::string& ns);
  void parse_translate(Ontology& o, const std::string& ns);

  void parse_element(Model& m);
  void parse_rel(Model& m);
  void parse_scenario(Model& m);
  void parse_usecase(Model& m);
  void parse_interaction(Model& m);
  void parse_artifact(Model& m);
  void parse_trace(Model& m);

  TokenCursor cur_;
};

ConceptRef BlockParser::parse_qref(const std::string& default_ns) {
  Token first = cur_.expect_ident("concept reference");
  if (cur_.accept_punct(".")) {
    Token second = cur_.expect_ident("concept name");
    return {first.text, second.text};
  }
  return {default_ns, first.text};
}

int BlockParser::parse_int(std::string_view what) {
  Token t = cur_.expect_int(what);
  return std::stoi(t.text);
}

void BlockParser::parse_ontology_block(Ontology& o) {
  cur_.expect_word("ontology");
  std::string ns = cur_.expect_ident("namespace name").text;
  o.namespaces.insert(ns);
  cur_.expect_punct("{");
  while (!cur_.accept_punct("}")) {
    const Token& t = cur_.peek();
    if (t.is_word("concept")) {
      parse_concept(o, ns);
    } else if (t.is_word("relation")) {
      parse_relation(o, ns);
    } else if (t.is_word("translate")) {
      parse_translate(o, ns);
    } else {
      fail("'concept', 'relation', 'translate' or '}'");
    }
  }
}

void BlockParser::parse_concept(Ontology& o, const std::string& ns) {
  cur_.expect_word("concept");
  Token name = cur_.expect_ident("concept name");
  Concept c;
  c.ref = {ns, name.text};
  c.pos = name.pos;

  if (cur_.accept_punct(":")) {
    do {
      c.parents.push_back(cur_.expect_ident("parent concept").text);
    } while (cur_.accept_punct(","));
  }
  if (cur_.peek().is_word("attrs") && cur_.peek(1).is_punct("(")) {
    cur_.next();
    cur_.next();
    do {
      c.attrs.push_back(cur_.expect_ident("attribute name").text);
    } while (cur_.accept_punct(","));
    cur_.expect_punct(")");
  }
  o.concepts.push_back(std::move(c));
}

void BlockParser::parse_relation(Ontology& o, const std::string& ns) {
  cur_.expect_word("relation");
  Token id = cur_.expect_ident("relation id");
  cur_.expect_punct(":");
  Token kind_tok = cur_.expect_ident("relation kind");
  auto kind = relation_kind_from_string(kind_tok.text);
  if (!kind) throw ParseError(kind_tok.pos, "relation kind", kind_tok.describe());

  RelationDecl r;
  r.id = id.text;
  r.kind = *kind;
  r.source = parse_qref(ns);
  cur_.expect_punct("->");
  r.target = parse_qref(ns);
  r.owner = ns;
  r.pos = id.pos;

  if (cur_.peek().is_punct("[")) {
    cur_.next();
    Multiplicity m;
    m.min = static_cast<unsigned>(parse_int("lower bound"));
    cur_.expect_punct("..");
    if (!cur_.accept_punct("*")) {
      Token max_tok = cur_.peek();
      int max = parse_int("upper bound or '*'");
      if (max < 1 || static_cast<unsigned>(max) < m.min)
        throw ParseError(max_tok.pos, "upper bound >= max(1, lower bound)",
                         max_tok.describe());
      m.max = static_cast<unsigned>(max);
    }
    cur_.expect_punct("]");
    r.multiplicity = m;
  }
  o.relations.push_back(std::move(r));
}

void BlockParser::parse_translate(Ontology& o, const std::string& ns) {
  cur_.expect_word("translate");
  Token id = cur_.expect_ident("translation id");
  cur_.expect_punct(":");
  TranslationLink t;
  t.id = id.text;
  t.from = parse_qref(ns);
  cur_.expect_punct("=>");
  t.to = parse_qref(ns);
  t.owner = ns;
  t.pos = id.pos;
  o.translations.push_back(std::move(t));
}

Profile BlockParser::parse_profile_block() {
  Profile p;
  Token kw = cur_.expect_word("profile");
  p.pos = kw.pos;
  p.name = cur_.expect_ident("profile name").text;
  cur_.expect_word("uses");
  p.ontology_ref = cur_.expect_ident("ontology namespace").text;
  cur_.expect_punct("{");
  while (!cur_.accept_punct("}")) {
    if (!cur_.peek().is_word("stereotype")) fail("'stereotype' or '}'");
    cur_.next();
    Stereotype s;
    Token name = cur_.expect_ident("stereotype name");
    s.name = name.text;
    s.pos = name.pos;
    cur_.expect_word("extends");
    Token mc = cur_.expect_ident("metaclass");
    auto meta = metaclass_from_string(mc.text);
    if (!meta) throw ParseError(mc.pos, "metaclass", mc.describe());
    s.extends = *meta;
    if (cur_.accept_word("specializes"))
      s.specializes = cur_.expect_ident("stereotype name").text;
    cur_.expect_word("traces");
    if (cur_.peek().is_word("rel") && cur_.peek(1).kind == TokenKind::Ident) {
      cur_.next();
      s.traces = RelationRef{cur_.next().text};
    } else {
      s.traces = parse_qref(p.ontology_ref);
    }
    p.stereotypes.push_back(std::move(s));
  }
  normalize(p);
  return p;
}

Model BlockParser::parse_model_block() {
  Model m;
  Token kw = cur_.expect_word("model");
  m.pos = kw.pos;
  m.id = cur_.expect_ident("model id").text;
  cur_.expect_word("uses");
  m.profile_ref = cur_.expect_ident("profile name").text;
  cur_.expect_punct("{");
  while (!cur_.accept_punct("}")) {
    const Token& t = cur_.peek();
    if (t.is_word("element")) {
      parse_element(m);
    } else if (t.is_word("rel")) {
      parse_rel(m);
    } else if (t.is_word("scenario")) {
      parse_scenario(m);
    } else if (t.is_word("usecase")) {
      parse_usecase(m);
    } else if (t.is_word("interaction")) {
      parse_interaction(m);
    } else if (t.is_word("artifact")) {
      parse_artifact(m);
    } else if (t.is_word("trace")) {
      parse_trace(m);
    } else {
      fail("model item or '}'");
    }
  }
  normalize(m);
  return m;
}

void BlockParser::parse_element(Model& m) {
  cur_.expect_word("element");
  Token id = cur_.expect_ident("element id");
  cur_.expect_punct(":");
  Element e;
  e.id = id.text;
  e.pos = id.pos;
  e.stereotype = cur_.expect_ident("stereotype name").text;
  if (cur_.accept_punct("(")) {
    do {
      Token key = cur_.expect_ident("attribute name");
      cur_.expect_punct("=");
      Token value = cur_.expect_string("attribute value");
      if (!e.attrs.emplace(key.text, value.text).second)
        throw ParseError(key.pos, "distinct attribute name",
                         "duplicate '" + key.text + "'");
    } while (cur_.accept_punct(","));
    cur_.expect_punct(")");
  }
  m.elements.push_back(std::move(e));
}

void BlockParser::parse_rel(Model& m) {
  cur_.expect_word("rel");
  Token id = cur_.expect_ident("relation instance id");
  cur_.expect_punct(":");
  RelInstance r;
  r.id = id.text;
  r.pos = id.pos;
  r.via = cur_.expect_ident("relationship stereotype").text;
  r.source = cur_.expect_ident("source element").text;
  cur_.expect_punct("->");
  r.target = cur_.expect_ident("target element").text;
  m.rels.push_back(std::move(r));
}

void BlockParser::parse_scenario(Model& m) {
  cur_.expect_word("scenario");
  Token id = cur_.expect_ident("scenario id");
  Scenario s;
  s.id = id.text;
  s.pos = id.pos;
  cur_.expect_word("ego");
  s.ego = cur_.expect_ident("ego element").text;
  cur_.expect_punct("{");
  while (!cur_.accept_punct("}")) {
    if (cur_.peek().is_word("scene")) {
      Token kw = cur_.next();
      Scene scene;
      scene.pos = kw.pos;
      scene.index = parse_int("scene index");
      cur_.expect_punct("{");
      do {
        scene.entities.insert(cur_.expect_ident("scene entity").text);
      } while (cur_.accept_punct(","));
      cur_.expect_punct("}");
      s.scenes.push_back(std::move(scene));
    } else if (cur_.peek().is_word("performs")) {
      Token kw = cur_.next();
      BehaviorAssignment b;
      b.pos = kw.pos;
      b.agent = cur_.expect_ident("agent element").text;
      cur_.expect_punct(":");
      b.behavior = cur_.expect_ident("behavior element").text;
      s.behaviors.push_back(std::move(b));
    } else {
      fail("'scene', 'performs' or '}'");
    }
  }
  m.scenarios.push_back(std::move(s));
}

void BlockParser::parse_usecase(Model& m) {
  cur_.expect_word("usecase");
  Token id = cur_.expect_ident("use case id");
  UseCaseDecl u;
  u.id = id.text;
  u.pos = id.pos;
  cur_.expect_punct("{");
  while (!cur_.accept_punct("}")) {
    if (cur_.accept_word("scenario")) {
      u.scenarios.insert(cur_.expect_ident("scenario id").text);
    } else if (cur_.accept_word("actor")) {
      u.actors.insert(cur_.expect_ident("actor element").text);
    } else if (cur_.accept_word("stakeholder")) {
      u.stakeholders.insert(cur_.expect_ident("stakeholder element").text);
    } else {
      fail("'scenario', 'actor', 'stakeholder' or '}'");
    }
  }
  m.use_cases.push_back(std::move(u));
}

void BlockParser::parse_interaction(Model& m) {
  cur_.expect_word("interaction");
  Token id = cur_.expect_ident("interaction id");
  Interaction in;
  in.id = id.text;
  in.pos = id.pos;
  cur_.expect_word("for");
  in.scenario = cur_.expect_ident("scenario id").text;
  cur_.expect_punct("{");
  while (!cur_.accept_punct("}")) {
    if (!cur_.peek().is_word("msg")) fail("'msg' or '}'");
    Token kw = cur_.next();
    Message msg;
    msg.pos = kw.pos;
    msg.order = parse_int("message order");
    msg.from = cur_.expect_ident("sender element").text;
    cur_.expect_punct("->");
    msg.to = cur_.expect_ident("receiver element").text;
    cur_.expect_punct(":");
    msg.label = cur_.expect_string("message label").text;
    in.messages.push_back(std::move(msg));
  }
  m.interactions.push_back(std::move(in));
}

void BlockParser::parse_artifact(Model& m) {
  cur_.expect_word("artifact");
  Token id = cur_.expect_ident("artifact id");
  cur_.expect_punct(":");
  Token kind_tok = cur_.expect_ident("artifact kind");
  auto kind = artifact_kind_from_string(kind_tok.text);
  if (!kind) throw ParseError(kind_tok.pos, "artifact kind", kind_tok.describe());
  Artifact a;
  a.id = id.text;
  a.pos = id.pos;
  a.kind = *kind;
  if (cur_.accept_word("text")) a.text = cur_.expect_string("artifact text").text;
  m.artifacts.push_back(std::move(a));
}

void BlockParser::parse_trace(Model& m) {
  cur_.expect_word("trace");
  Token id = cur_.expect_ident("trace id");
  cur_.expect_punct(":");
  Token kind_tok = cur_.expect_ident("trace kind");
  auto kind = trace_kind_from_string(kind_tok.text);
  if (!kind) throw ParseError(kind_tok.pos, "trace kind", kind_tok.describe());
  TraceDecl t;
  t.id = id.text;
  t.pos = id.pos;
  t.kind = *kind;
  t.source = cur_.expect_ident("source id").text;
  cur_.expect_punct("->");
  t.target = cur_.expect_ident("target id").text;
  m.traces.push_back(std::move(t));
}

}  // namespace

Ontology parse_ontology(std::string_view source, const std::string& file) {
  BlockParser p(source, file);
  Ontology o;
  while (!p.at_end()) {
    if (!p.peek().is_word("ontology")) p.fail("'ontology'");
    p.parse_ontology_block(o);
  }
  normalize(o);
  return o;
}

Profile parse_profile(std::string_view source, const std::string& file) {
  BlockParser p(source, file);
  Profile prof = p.parse_profile_block();
  if (!p.at_end()) p.fail("end of input");
  return prof;
}

Model parse_model(std::string_view source, const std::string& file) {
  BlockParser p(source, file);
  Model m = p.parse_model_block();
  if (!p.at_end()) p.fail("end of input");
  return m;
}

Document parse_document(std::string_view source, const std::string& file) {
  BlockParser p(source, file);
  Document d;
  while (!p.at_end()) {
    const Token& t = p.peek();
    if (t.is_word("ontology")) {
      p.parse_ontology_block(d.ontology);
    } else if (t.is_word("profile")) {
      d.profiles.push_back(p.parse_profile_block());
    } else if (t.is_word("model")) {
      d.models.push_back(p.parse_model_block());
    } else {
      p.fail("'ontology', 'profile' or 'model'");
    }
  }
  normalize(d.ontology);
  return d;
}

}  // namespace adtrace
