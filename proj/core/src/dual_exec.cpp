#include "ontoquery/dual_exec.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "ontoquery/error.hpp"

namespace ontoquery {

GraphPattern translate(const Bgp& q) {
  GraphPattern out;
  auto node = [](const Term& t, bool subject) -> NodeTerm {
    if (const auto* v = std::get_if<Variable>(&t)) return *v;
    if (const auto* iri = std::get_if<Iri>(&t)) return NodeName{display_name(*iri)};
    if (const auto* lit = std::get_if<Literal>(&t); lit && !subject)
      return NodeName{render_literal(*lit)};
    throw Error(ErrorCode::UntranslatablePattern, render_term(t));
  };
  for (const auto& tp : q.patterns) {
    RelTerm rel;
    if (const auto* v = std::get_if<Variable>(&tp.predicate)) rel = *v;
    else if (const auto* p = std::get_if<PrimitivePredicate>(&tp.predicate)) rel = RelType{rel_type_name(*p)};
    else if (const auto* iri = std::get_if<Iri>(&tp.predicate)) rel = RelType{iri->local};
    else throw Error(ErrorCode::UntranslatablePattern, render_term(tp.predicate));
    out.edges.push_back(EdgeConstraint{node(tp.subject, true), std::move(rel), node(tp.object, false)});
  }
  return out;
}

// ---- SPARQL-DL ----------------------------------------------------------

namespace {

using P = PrimitivePredicate;

class SparqlDlWriter {
 public:
  explicit SparqlDlWriter(std::string_view base) : base_(base) {}

  std::string write(const Bgp& q) {
    std::string atoms;
    for (const auto& tp : q.patterns) {
      if (!atoms.empty()) atoms += ", ";
      atoms += atom(tp);
    }
    std::string out = "PREFIX : <" + base_ + "#>\n";
    if (owl_) out += "PREFIX owl: <" + std::string(kOwlNamespace) + "#>\n";
    if (rdfs_) out += "PREFIX rdfs: <" + std::string(kRdfsNamespace) + "#>\n";
    if (xsd_) out += "PREFIX xsd: <" + std::string(kXsdNamespace) + "#>\n";
    const auto vars = bgp_vars(q);
    if (vars.empty()) {
      out += "ASK";
    } else {
      out += "SELECT";
      for (const auto& v : vars) out += " " + v;
    }
    return out + " WHERE { " + atoms + " }";
  }

 private:
  std::string base_;
  bool owl_ = false, rdfs_ = false, xsd_ = false;

  std::string iri(const Iri& i) {
    if (i.prefix == base_) return ":" + i.local;
    if (i.prefix == kOwlNamespace) {
      owl_ = true;
      return "owl:" + i.local;
    }
    if (i.prefix == kXsdNamespace) {
      xsd_ = true;
      return "xsd:" + i.local;
    }
    return i.render();
  }

  std::string arg(const Term& t) {
    if (const auto* v = std::get_if<Variable>(&t)) return v->name;
    if (const auto* i = std::get_if<Iri>(&t)) return iri(*i);
    if (const auto* lit = std::get_if<Literal>(&t)) {
      if (lit->datatype != Datatype::String) xsd_ = true;
      return render_literal(*lit);
    }
    return rel_type_name(std::get<P>(t));
  }

  std::string atom(const TriplePattern& tp) {
    const auto s = arg(tp.subject);
    const auto o = arg(tp.object);
    const auto* prim = std::get_if<P>(&tp.predicate);
    if (!prim) return "PropertyValue(" + s + ", " + arg(tp.predicate) + ", " + o + ")";
    auto call = [&](std::string_view name) { return std::string(name) + "(" + s + ", " + o + ")"; };
    switch (*prim) {
      case P::SubClassOf: return call("SubClassOf");
      case P::EquivalentClass: return call("EquivalentClass");
      case P::DisjointClass: return call("DisjointWith");
      case P::InstanceOf: return call("Type");
      case P::SubProperty: return call("SubPropertyOf");
      case P::EquivalentProperty: return call("EquivalentProperty");
      case P::DisjointProperty: return call("DisjointProperty");
      case P::InverseOf: return call("InverseOf");
      case P::TypeProperty: return call("PropertyType");
      case P::Domain: return call("Domain");
      case P::Range: return call("Range");
      case P::SameAs: return call("SameAs");
      case P::DifferentFrom: return call("DifferentFrom");
      case P::HasLabel:
        rdfs_ = true;
        return "Annotation(" + s + ", rdfs:label, " + o + ")";
      case P::HasComment:
        rdfs_ = true;
        return "Annotation(" + s + ", rdfs:comment, " + o + ")";
    }
    return call("?");
  }
};

// ---- Cypher -------------------------------------------------------------

bool plain_identifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

std::string identifier(std::string_view s) {
  return plain_identifier(s) ? std::string(s) : "`" + std::string(s) + "`";
}

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

class CypherWriter {
 public:
  explicit CypherWriter(const Bgp& q) : q_(q), pattern_(translate(q)) {
    for (const auto& v : bgp_vars(q)) taken_.insert(v.substr(1));
  }

  std::string write() {
    std::string match;
    for (const auto& e : pattern_.edges) {
      if (!match.empty()) match += ", ";
      const auto from = node(e.from);
      match += from + "-" + rel(e.rel) + "->" + node(e.to);
    }
    std::set<std::string> rel_vars;
    for (const auto& e : pattern_.edges)
      if (const auto* v = std::get_if<Variable>(&e.rel)) rel_vars.insert(v->name);
    std::string ret;
    for (const auto& v : bgp_vars(q_)) {
      if (!ret.empty()) ret += ", ";
      const auto id = identifier(v.substr(1));
      ret += rel_vars.contains(v) ? "type(" + id + ")" : id + ".name";
    }
    return "MATCH " + match + " RETURN " + (ret.empty() ? "true" : ret);
  }

 private:
  const Bgp& q_;
  GraphPattern pattern_;
  std::set<std::string> taken_;
  std::map<std::string, std::string> constant_ids_;

  std::string fresh_id() {
    for (std::size_t n = 0;; ++n) {
      auto id = n == 0 ? std::string("c") : "c" + std::to_string(n);
      if (!taken_.contains(id)) {
        taken_.insert(id);
        return id;
      }
    }
  }

  std::string node(const NodeTerm& t) {
    if (const auto* v = std::get_if<Variable>(&t)) return "(" + identifier(v->name.substr(1)) + ")";
    const auto& name = std::get<NodeName>(t).name;
    if (const auto it = constant_ids_.find(name); it != constant_ids_.end())
      return "(" + it->second + ")";
    const auto id = fresh_id();
    constant_ids_.emplace(name, id);
    return "(" + id + " {name:" + quoted(name) + "})";
  }

  static std::string rel(const RelTerm& t) {
    if (const auto* v = std::get_if<Variable>(&t)) return "[" + identifier(v->name.substr(1)) + "]";
    return "[:" + identifier(std::get<RelType>(t).type) + "]";
  }
};

template <typename F>
std::chrono::nanoseconds timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::steady_clock::now() - start;
}

}  // namespace

std::string emit_sparqldl(const Bgp& q, std::string_view base_namespace) {
  return SparqlDlWriter(base_namespace).write(q);
}

std::string emit_sparqldl(const InfoQuery& q, std::string_view base_namespace) {
  return emit_sparqldl(q.bgp, base_namespace);
}

std::string emit_cypher(const Bgp& q) { return CypherWriter(q).write(); }

std::string emit_cypher(const InfoQuery& q) { return emit_cypher(q.bgp); }

std::shared_ptr<const KnowledgeBase> KnowledgeBase::build(Ontology o, const SynonymLexicon& lex) {
  auto kb = std::make_shared<KnowledgeBase>();
  kb->saturated = saturate(o);
  kb->index = TripleIndex(kb->saturated.all());
  kb->graph = load_graph(kb->saturated, o, lex);
  kb->ontology = std::move(o);
  return kb;
}

DualResult execute_dual(const KnowledgeBase& kb, const Bgp& q) {
  DualResult r;
  r.sparqldl_text = emit_sparqldl(q, kb.ontology.base_prefix());
  r.cypher_text = emit_cypher(q);
  r.sparqldl_time = timed([&] { r.triple_results = eval_bgp(kb.index, q); });
  r.graph_time = timed([&] { r.graph_results = match_pattern(kb.graph, translate(q)); });
  r.equal = r.triple_results == r.graph_results;
  return r;
}

DualResult execute_dual(const KnowledgeBase& kb, const InfoQuery& q) {
  return execute_dual(kb, q.bgp);
}

}  // namespace ontoquery
