#include <algorithm>
#include <cctype>
#include <istream>
#include <iterator>
#include <sstream>

#include "ontoquery/error.hpp"
#include "ontoquery/ontology.hpp"

namespace ontoquery {

std::optional<Entity> Ontology::find(std::string_view name) const {
  const auto it = entities_.find(name);
  if (it == entities_.end()) return std::nullopt;
  return it->second;
}

bool Ontology::contains(const Iri& iri) const {
  const auto it = entities_.find(iri.local);
  return it != entities_.end() && it->second.iri == iri;
}

std::vector<std::string> Ontology::names(EntityKind kind) const {
  std::vector<std::string> out;
  for (const auto& [name, e] : entities_)
    if (e.kind == kind && !e.implicit) out.push_back(name);
  return out;
}

EntityCounts Ontology::counts() const {
  EntityCounts c;
  for (const auto& [name, e] : entities_) {
    if (e.implicit) continue;
    switch (e.kind) {
      case EntityKind::Class: ++c.classes; break;
      case EntityKind::ObjectProperty: ++c.object_properties; break;
      case EntityKind::DataProperty: ++c.data_properties; break;
      case EntityKind::Instance: ++c.instances; break;
    }
  }
  return c;
}

namespace {

const std::vector<Literal> kNoLiterals;

const std::vector<Literal>& lookup_literals(
    const std::map<std::string, std::vector<Literal>, std::less<>>& m, std::string_view name) {
  const auto it = m.find(name);
  return it == m.end() ? kNoLiterals : it->second;
}

}  // namespace

const std::vector<Literal>& Ontology::labels(std::string_view name) const {
  return lookup_literals(labels_, name);
}

const std::vector<Literal>& Ontology::comments(std::string_view name) const {
  return lookup_literals(comments_, name);
}

std::optional<Entity> entity_kind(const Ontology& o, std::string_view name) {
  return o.find(name);
}

namespace {

enum class TokenType { IriRef, PName, String, Dot, Semicolon, Comma, PrefixDirective, End };

struct Token {
  TokenType type;
  std::string text;  // raw IRI/pname text or unescaped string body
  std::string datatype;  // "^^" suffix of a string literal, raw
  int line;
  int column;
};

bool is_name_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '-' || c >= 0x80;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      if (pos_ >= text_.size()) {
        out.push_back(Token{TokenType::End, {}, {}, line_, column()});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::size_t line_start_ = 0;
  bool at_line_start_ = true;

  int column() const { return static_cast<int>(pos_ - line_start_) + 1; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what, line_, column());
  }

  void newline() {
    ++pos_;
    ++line_;
    line_start_ = pos_;
    at_line_start_ = true;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        newline();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' && at_line_start_) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  Token next() {
    at_line_start_ = false;
    const int line = line_;
    const int col = column();
    const char c = text_[pos_];
    switch (c) {
      case '.': ++pos_; return Token{TokenType::Dot, ".", {}, line, col};
      case ';': ++pos_; return Token{TokenType::Semicolon, ";", {}, line, col};
      case ',': ++pos_; return Token{TokenType::Comma, ",", {}, line, col};
      case '<': return Token{TokenType::IriRef, iri_ref(), {}, line, col};
      case '"': {
        auto body = string_body();
        std::string datatype;
        if (text_.substr(pos_, 2) == "^^") {
          pos_ += 2;
          if (pos_ < text_.size() && text_[pos_] == '<')
            datatype = iri_ref();
          else
            datatype = pname();
        }
        return Token{TokenType::String, std::move(body), std::move(datatype), line, col};
      }
      case '@': {
        ++pos_;
        std::string word;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
          word.push_back(text_[pos_++]);
        if (word != "prefix") fail("unknown directive @" + word);
        return Token{TokenType::PrefixDirective, "@prefix", {}, line, col};
      }
      case '#': fail("'#' comments must start a line");
      default: break;
    }
    if (is_name_char(static_cast<unsigned char>(c)) || c == ':')
      return Token{TokenType::PName, pname(), {}, line, col};
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string iri_ref() {
    std::string out(1, text_[pos_++]);
    while (pos_ < text_.size() && text_[pos_] != '>') {
      if (text_[pos_] == '\n' || std::isspace(static_cast<unsigned char>(text_[pos_])))
        fail("whitespace inside IRI");
      out.push_back(text_[pos_++]);
    }
    if (pos_ >= text_.size()) fail("unterminated IRI");
    out.push_back(text_[pos_++]);
    return out;
  }

  std::string pname() {
    std::string out;
    bool seen_colon = false;
    while (pos_ < text_.size()) {
      const auto ch = static_cast<unsigned char>(text_[pos_]);
      if (ch == ':' && !seen_colon) {
        seen_colon = true;
      } else if (!is_name_char(ch)) {
        break;
      }
      out.push_back(text_[pos_++]);
    }
    if (out.empty()) fail("expected a name");
    return out;
  }

  std::string string_body() {
    ++pos_;  // opening quote
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      char ch = text_[pos_];
      if (ch == '\n') fail("newline inside string literal");
      if (ch == '\\') {
        if (pos_ + 1 >= text_.size()) fail("dangling escape");
        const char esc = text_[pos_ + 1];
        if (esc != '"' && esc != '\\') fail(std::string("unsupported escape \\") + esc);
        out.push_back(esc);
        pos_ += 2;
        continue;
      }
      out.push_back(ch);
      ++pos_;
    }
    if (pos_ >= text_.size()) fail("unterminated string literal");
    ++pos_;  // closing quote
    return out;
  }
};

struct Statement {
  Token subject;
  Token verb;
  Token object;
};

}  // namespace

// Two passes over the collected statements: declarations first so forward
// references resolve, then axioms.
class OntologyParser {
 public:
  OntologyParser(std::string_view text, std::string id) : text_(text) { onto_.id_ = std::move(id); }

  Ontology run() {
    tokens_ = Lexer(text_).run();
    parse_document();
    seed_implicit_classes();
    for (const auto& st : statements_) declare(st);
    for (const auto& st : statements_) axiom(st);
    type_untyped_individuals();
    link_signatures();
    return std::move(onto_);
  }

 private:
  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  std::vector<Statement> statements_;
  Ontology onto_;
  std::set<std::string> typed_individuals_;

  // ---- grammar --------------------------------------------------------

  const Token& peek() const { return tokens_[at_]; }
  const Token& take() { return tokens_[at_++]; }

  [[noreturn]] static void fail_at(const Token& t, const std::string& what) {
    throw Error(ErrorCode::SyntaxError, what, t.line, t.column);
  }

  const Token& expect(TokenType type, const char* what) {
    if (peek().type != type) fail_at(peek(), std::string("expected ") + what);
    return take();
  }

  void parse_document() {
    while (peek().type != TokenType::End) {
      if (peek().type == TokenType::PrefixDirective) {
        parse_prefix();
      } else {
        parse_statement();
      }
    }
  }

  void parse_prefix() {
    take();
    const Token& label = expect(TokenType::PName, "prefix label");
    if (label.text.empty() || label.text.back() != ':' ||
        std::count(label.text.begin(), label.text.end(), ':') != 1)
      fail_at(label, "prefix label must end with ':'");
    const Token& iri = expect(TokenType::IriRef, "namespace IRI");
    expect(TokenType::Dot, "'.' after @prefix");
    std::string ns = iri.text.substr(1, iri.text.size() - 2);
    if (ns.empty() || ns.back() != '#' || ns.find(':') == std::string::npos)
      throw Error(ErrorCode::MalformedIri, iri.text, iri.line, iri.column);
    ns.pop_back();
    std::string name = label.text.substr(0, label.text.size() - 1);
    if (name.empty()) onto_.base_prefix_ = ns;
    onto_.prefixes_[name] = ns;
  }

  static bool is_term(const Token& t) {
    return t.type == TokenType::PName || t.type == TokenType::IriRef;
  }

  void parse_statement() {
    const Token subject = take();
    if (!is_term(subject)) fail_at(subject, "expected a subject");
    for (;;) {
      const Token verb = take();
      if (!is_term(verb)) fail_at(verb, "expected a verb");
      for (;;) {
        const Token object = take();
        if (!is_term(object) && object.type != TokenType::String)
          fail_at(object, "expected an object");
        statements_.push_back(Statement{subject, verb, object});
        if (peek().type != TokenType::Comma) break;
        take();
      }
      if (peek().type == TokenType::Semicolon) {
        take();
        if (peek().type == TokenType::Dot) break;  // trailing ';'
        continue;
      }
      break;
    }
    expect(TokenType::Dot, "'.' ending the statement");
  }

  // ---- resolution ----------------------------------------------------

  Iri resolve(const Token& t) const {
    try {
      return parse_iri(t.text, onto_.prefixes_);
    } catch (const Error& e) {
      throw Error(e.code(), e.detail(), t.line, t.column);
    }
  }

  bool is_vocab(const Iri& iri, std::string_view ns, std::string_view local) const {
    return iri.prefix == ns && iri.local == local;
  }

  bool is_a(const Token& verb) const {
    if (verb.type == TokenType::PName && verb.text == "a") return true;
    const auto iri = resolve(verb);
    return iri.prefix == "http://www.w3.org/1999/02/22-rdf-syntax-ns" && iri.local == "type";
  }

  void seed_implicit_classes() {
    for (const char* name : {"Thing", "Nothing"})
      onto_.entities_.emplace(name, Entity{owl_iri(name), EntityKind::Class, true});
  }

  void register_entity(const Iri& iri, EntityKind kind, const Token& where) {
    auto [it, inserted] = onto_.entities_.emplace(iri.local, Entity{iri, kind, false});
    if (inserted) return;
    if (it->second.iri != iri)
      throw Error(ErrorCode::DuplicateName, iri.local, where.line, where.column);
    if (it->second.kind != kind)
      throw Error(ErrorCode::KindConflict, ":" + iri.local, where.line, where.column);
  }

  void declare(const Statement& st) {
    if (!is_a(st.verb)) return;
    const Iri subject = resolve(st.subject);
    if (st.object.type == TokenType::String) fail_at(st.object, "type must be an IRI");
    const Iri type = resolve(st.object);
    if (type.prefix == kOwlNamespace) {
      if (type.local == "Class") return register_entity(subject, EntityKind::Class, st.subject);
      if (type.local == "ObjectProperty")
        return register_entity(subject, EntityKind::ObjectProperty, st.subject);
      if (type.local == "DatatypeProperty")
        return register_entity(subject, EntityKind::DataProperty, st.subject);
      if (type.local == "NamedIndividual")
        return register_entity(subject, EntityKind::Instance, st.subject);
      if (type.local != "Thing")
        throw Error(ErrorCode::InvalidAxiom, "unsupported declaration owl:" + type.local,
                    st.object.line, st.object.column);
    }
    // Typing by a class declares an individual.
    register_entity(subject, EntityKind::Instance, st.subject);
  }

  Entity lookup(const Token& t) const {
    const Iri iri = resolve(t);
    const auto it = onto_.entities_.find(iri.local);
    if (it == onto_.entities_.end() || it->second.iri != iri)
      throw Error(ErrorCode::DanglingReference, ":" + iri.local, t.line, t.column);
    return it->second;
  }

  [[noreturn]] static void invalid(const Token& t, const std::string& what) {
    throw Error(ErrorCode::InvalidAxiom, what, t.line, t.column);
  }

  Entity expect_kind(const Token& t, std::initializer_list<EntityKind> kinds,
                     const char* role) const {
    if (t.type == TokenType::String) invalid(t, std::string(role) + " must not be a literal");
    Entity e = lookup(t);
    if (std::find(kinds.begin(), kinds.end(), e.kind) == kinds.end())
      invalid(t, ":" + e.iri.local + " is a " + std::string(to_string(e.kind)) +
                     ", not a valid " + role);
    return e;
  }

  Literal literal(const Token& t) const {
    if (t.type != TokenType::String) invalid(t, "expected a literal");
    Literal lit{t.text, Datatype::String};
    if (!t.datatype.empty()) {
      const Iri dt = parse_iri(t.datatype, onto_.prefixes_);
      const auto parsed = is_datatype_iri(dt) ? parse_datatype(dt.local) : std::nullopt;
      if (!parsed) invalid(t, "unsupported datatype " + t.datatype);
      lit.datatype = *parsed;
    }
    return lit;
  }

  void add(Iri s, Predicate p, Object o) {
    onto_.asserted_.insert(Triple{std::move(s), std::move(p), std::move(o)});
  }

  void same_kind_pair(const Statement& st, std::initializer_list<EntityKind> kinds,
                      PrimitivePredicate p, const char* role) {
    const Entity s = expect_kind(st.subject, kinds, role);
    const Entity o = expect_kind(st.object, kinds, role);
    if (s.kind != o.kind)
      invalid(st.object, ":" + s.iri.local + " and :" + o.iri.local + " differ in kind");
    add(s.iri, p, o.iri);
  }

  void axiom(const Statement& st) {
    using P = PrimitivePredicate;
    constexpr auto C = EntityKind::Class;
    constexpr auto OP = EntityKind::ObjectProperty;
    constexpr auto DP = EntityKind::DataProperty;
    constexpr auto I = EntityKind::Instance;

    if (is_a(st.verb)) {
      const Iri type = resolve(st.object);
      if (type.prefix == kOwlNamespace && type.local != "Thing") return;  // declaration
      const Entity x = expect_kind(st.subject, {I}, "individual");
      const Entity c = expect_kind(st.object, {C}, "class");
      add(x.iri, P::InstanceOf, c.iri);
      typed_individuals_.insert(x.iri.local);
      return;
    }

    const Iri verb = resolve(st.verb);
    if (verb.prefix == kRdfsNamespace) {
      if (verb.local == "subClassOf") return same_kind_pair(st, {C}, P::SubClassOf, "class");
      if (verb.local == "subPropertyOf")
        return same_kind_pair(st, {OP, DP}, P::SubProperty, "property");
      if (verb.local == "domain") return domain(st);
      if (verb.local == "range") return range(st);
      if (verb.local == "label" || verb.local == "comment") return annotation(st, verb.local);
    } else if (verb.prefix == kOwlNamespace) {
      if (verb.local == "equivalentClass")
        return same_kind_pair(st, {C}, P::EquivalentClass, "class");
      if (verb.local == "disjointWith") return same_kind_pair(st, {C}, P::DisjointClass, "class");
      if (verb.local == "equivalentProperty")
        return same_kind_pair(st, {OP, DP}, P::EquivalentProperty, "property");
      if (verb.local == "propertyDisjointWith")
        return same_kind_pair(st, {OP, DP}, P::DisjointProperty, "property");
      if (verb.local == "inverseOf")
        return same_kind_pair(st, {OP}, P::InverseOf, "object property");
      if (verb.local == "sameAs") return same_kind_pair(st, {I}, P::SameAs, "individual");
      if (verb.local == "differentFrom")
        return same_kind_pair(st, {I}, P::DifferentFrom, "individual");
    }
    if (verb.prefix == kRdfsNamespace || verb.prefix == kOwlNamespace)
      invalid(st.verb, "unsupported vocabulary " + st.verb.text);

    // An ontology property used as a verb: instance-level assertion.
    const Entity prop = expect_kind(st.verb, {OP, DP}, "property");
    const Entity x = expect_kind(st.subject, {I}, "individual");
    if (prop.kind == OP) {
      const Entity y = expect_kind(st.object, {I}, "individual");
      add(x.iri, prop.iri, y.iri);
    } else {
      add(x.iri, prop.iri, literal(st.object));
    }
  }

  PropertySignature& signature(const Entity& prop) {
    auto& sig = onto_.signatures_[prop.iri.local];
    sig.property = prop.iri;
    return sig;
  }

  void domain(const Statement& st) {
    const Entity p = expect_kind(st.subject, {EntityKind::ObjectProperty, EntityKind::DataProperty},
                                 "property");
    const Entity c = expect_kind(st.object, {EntityKind::Class}, "domain class");
    signature(p).domains.insert(c.iri);
    add(p.iri, PrimitivePredicate::Domain, c.iri);
  }

  void range(const Statement& st) {
    const Entity p = expect_kind(st.subject, {EntityKind::ObjectProperty, EntityKind::DataProperty},
                                 "property");
    if (p.kind == EntityKind::ObjectProperty) {
      const Entity c = expect_kind(st.object, {EntityKind::Class}, "range class");
      signature(p).ranges.insert(c.iri);
      add(p.iri, PrimitivePredicate::Range, c.iri);
      return;
    }
    if (st.object.type == TokenType::String) invalid(st.object, "range must be a datatype");
    const Iri dt = resolve(st.object);
    if (!is_datatype_iri(dt) || !parse_datatype(dt.local))
      invalid(st.object, "data property range must be an xsd datatype");
    signature(p).ranges.insert(dt);
    add(p.iri, PrimitivePredicate::Range, dt);
  }

  void annotation(const Statement& st, const std::string& which) {
    const Entity e = lookup(st.subject);
    Literal lit = literal(st.object);
    auto& store = which == "label" ? onto_.labels_ : onto_.comments_;
    store[e.iri.local].push_back(lit);
    add(e.iri, which == "label" ? PrimitivePredicate::HasLabel : PrimitivePredicate::HasComment,
        std::move(lit));
  }

  void type_untyped_individuals() {
    for (const auto& [name, e] : onto_.entities_)
      if (e.kind == EntityKind::Instance && !typed_individuals_.contains(name))
        add(e.iri, PrimitivePredicate::InstanceOf, owl_iri("Thing"));
  }

  // Domain -> property -> range triples for every declared signature.
  void link_signatures() {
    for (const auto& [name, sig] : onto_.signatures_)
      for (const auto& d : sig.domains)
        for (const auto& r : sig.ranges) add(d, sig.property, r);
  }
};

Ontology parse_ontology(std::string_view source, std::string id) {
  return OntologyParser(source, std::move(id)).run();
}

Ontology parse_ontology(std::istream& source, std::string id) {
  std::string text{std::istreambuf_iterator<char>(source), std::istreambuf_iterator<char>()};
  if (source.bad()) throw Error(ErrorCode::IoError, "failed reading ontology source");
  return parse_ontology(std::string_view(text), std::move(id));
}

}  // namespace ontoquery
