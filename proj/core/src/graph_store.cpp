#include "ontoquery/graph_store.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "ontoquery/error.hpp"

namespace ontoquery {

PropertyGraph::PropertyGraph(std::string ontology_id) : ontology_id_(std::move(ontology_id)) {}

NodeId PropertyGraph::add_node(std::string name, std::set<std::string, std::less<>> labels,
                               std::map<std::string, std::string, std::less<>> props) {
  if (by_name_.contains(name))
    throw Error(ErrorCode::DuplicateName, name + " in ontology " + ontology_id_);
  const auto id = static_cast<NodeId>(nodes_.size());
  props["name"] = name;
  props.try_emplace("ontology", ontology_id_);
  nodes_.push_back(GNode{id, std::move(labels), std::move(props)});
  out_.emplace_back();
  in_.emplace_back();
  by_name_.emplace(std::move(name), id);
  return id;
}

bool PropertyGraph::add_relationship(NodeId from, std::string type, NodeId to) {
  if (from >= nodes_.size() || to >= nodes_.size())
    throw Error(ErrorCode::InvalidArgument, "relationship endpoint does not exist");
  if (!edge_keys_.emplace(from, type, to).second) return false;
  rel_types_.insert(type);
  out_[from].push_back(rels_.size());
  in_[to].push_back(rels_.size());
  rels_.push_back(GRel{from, to, std::move(type), {}});
  return true;
}

void PropertyGraph::set_property(NodeId id, std::string key, std::string value) {
  nodes_.at(id).props[std::move(key)] = std::move(value);
}

void PropertyGraph::add_label(NodeId id, std::string label) {
  nodes_.at(id).labels.insert(std::move(label));
}

std::optional<NodeId> PropertyGraph::find(std::string_view name) const {
  const auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::string escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\\': case '=': case ';': case ',': out += '\\'; out += c; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      ++i;
      out += s[i] == 't' ? '\t' : s[i] == 'n' ? '\n' : s[i];
    } else {
      out += s[i];
    }
  }
  return out;
}

// Splits on `delim` outside backslash escapes; pieces stay escaped.
std::vector<std::string_view> split_escaped(std::string_view s, char delim) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\') {
      ++i;
    } else if (s[i] == delim) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

template <typename Range>
std::string join(const Range& items, std::string_view sep) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += sep;
    out += item;
    first = false;
  }
  return out;
}

}  // namespace

std::string PropertyGraph::dump() const {
  std::vector<std::string> node_lines;
  for (const auto& n : nodes_) {
    std::vector<std::string> labels, props;
    for (const auto& l : n.labels) labels.push_back(escape(l));
    for (const auto& [k, v] : n.props) props.push_back(escape(k) + "=" + escape(v));
    node_lines.push_back("node\t" + join(labels, ",") + "\t" + join(props, ";"));
  }
  std::vector<std::string> edge_lines;
  for (const auto& r : rels_)
    edge_lines.push_back("edge\t" + escape(nodes_[r.from].name()) + "\t" + escape(r.type) + "\t" +
                         escape(nodes_[r.to].name()));
  std::sort(node_lines.begin(), node_lines.end());
  std::sort(edge_lines.begin(), edge_lines.end());
  std::string out;
  for (const auto& l : node_lines) out += l + "\n";
  for (const auto& l : edge_lines) out += l + "\n";
  return out;
}

PropertyGraph parse_graph_dump(std::string_view text, std::string ontology_id) {
  PropertyGraph g(std::move(ontology_id));
  std::vector<std::vector<std::string_view>> edges;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.empty()) continue;
    auto cols = split_escaped(line, '\t');
    if (cols[0] == "node" && cols.size() == 3) {
      std::set<std::string, std::less<>> labels;
      if (!cols[1].empty())
        for (auto l : split_escaped(cols[1], ',')) labels.insert(unescape(l));
      std::map<std::string, std::string, std::less<>> props;
      if (!cols[2].empty()) {
        for (auto kv : split_escaped(cols[2], ';')) {
          const auto pieces = split_escaped(kv, '=');
          if (pieces.size() != 2) throw Error(ErrorCode::SyntaxError, "bad property", line_no, 1);
          props[unescape(pieces[0])] = unescape(pieces[1]);
        }
      }
      const auto name = props.find("name");
      if (name == props.end()) throw Error(ErrorCode::SyntaxError, "node without name", line_no, 1);
      std::string node_name = name->second;
      g.add_node(std::move(node_name), std::move(labels), std::move(props));
    } else if (cols[0] == "edge" && cols.size() == 4) {
      edges.push_back(std::move(cols));
    } else {
      throw Error(ErrorCode::SyntaxError, "unrecognised dump line", line_no, 1);
    }
  }
  for (const auto& e : edges) {
    const auto from = g.find(unescape(e[1]));
    const auto to = g.find(unescape(e[3]));
    if (!from || !to) throw Error(ErrorCode::DanglingReference, unescape(e[1]) + " -> " + unescape(e[3]));
    g.add_relationship(*from, unescape(e[2]), *to);
  }
  return g;
}

// ---- loading ------------------------------------------------------------

namespace {

class GraphLoader {
 public:
  GraphLoader(const SaturatedSet& s, const Ontology& o, const SynonymLexicon& lex)
      : s_(s), onto_(o), lex_(lex), g_(o.id()) {}

  PropertyGraph run() {
    for (auto p : kAllPrimitivePredicates) g_.declare_rel_type(rel_type_name(p));
    for (const auto& [name, e] : onto_.entities())
      if (is_property(e.kind)) g_.declare_rel_type(name);

    for (const auto& [name, e] : onto_.entities()) {
      std::map<std::string, std::string, std::less<>> props{{"iri", e.iri.full()}};
      if (const auto& labels = onto_.labels(name); !labels.empty())
        props["label"] = join_values(labels);
      if (const auto& comments = onto_.comments(name); !comments.empty())
        props["comment"] = join_values(comments);
      g_.add_node(name, {std::string(to_string(e.kind))}, std::move(props));
    }
    for (const auto& t : s_.all()) {
      const NodeId from = entity_node(t.subject);
      const NodeId to = object_node(t.object);
      g_.add_relationship(from, rel_type_name(t.predicate), to);
    }
    add_synonyms();
    return std::move(g_);
  }

 private:
  const SaturatedSet& s_;
  const Ontology& onto_;
  const SynonymLexicon& lex_;
  PropertyGraph g_;

  static std::string join_values(const std::vector<Literal>& lits) {
    std::vector<std::string> values;
    for (const auto& l : lits) values.push_back(l.value);
    return join(values, " | ");
  }

  NodeId entity_node(const Iri& iri) {
    const auto name = display_name(iri);
    if (auto id = g_.find(name)) return *id;
    if (is_datatype_iri(iri))
      return g_.add_node(name, {std::string(kDatatypeLabel)}, {{"iri", iri.full()}});
    throw Error(ErrorCode::DanglingReference, iri.full());
  }

  NodeId object_node(const Object& object) {
    if (const auto* iri = std::get_if<Iri>(&object)) return entity_node(*iri);
    const auto& lit = std::get<Literal>(object);
    const auto name = render_literal(lit);
    if (auto id = g_.find(name)) return *id;
    return g_.add_node(name, {std::string(kLiteralLabel)},
                       {{"value", lit.value}, {"datatype", std::string(to_string(lit.datatype))}});
  }

  void add_synonyms() {
    // synonym word -> entities whose name or name segment it mirrors
    std::map<std::string, std::set<std::string>> mirrors;
    for (const auto& [name, e] : onto_.entities()) {
      if (e.implicit) continue;
      std::set<std::string> words{to_lower(name)};
      for (auto& part : segment_name(name)) words.insert(std::move(part));
      for (const auto& w : words)
        for (const auto& syn : lex_.lookup(w))
          if (!onto_.find(syn)) mirrors[syn].insert(name);
    }
    for (const auto& [syn, entities] : mirrors) {
      if (g_.find(syn)) continue;
      std::set<std::string, std::less<>> labels{std::string(kSynonymLabel)};
      std::vector<std::string> sources;
      for (const auto& name : entities) {
        labels.insert(std::string(to_string(onto_.find(name)->kind)));
        sources.push_back(name);
      }
      const NodeId sid = g_.add_node(syn, std::move(labels), {{"synonymOf", join(sources, ",")}});
      for (const auto& name : entities) {
        const NodeId eid = *g_.find(name);
        // Copy first: add_relationship grows the edge lists being read.
        const auto edges = g_.out_edges(eid);
        for (const auto idx : edges) {
          const GRel rel = g_.relationships()[idx];
          if (rel.type == rel_type_name(PrimitivePredicate::HasLabel) ||
              rel.type == rel_type_name(PrimitivePredicate::HasComment))
            continue;
          g_.add_relationship(sid, rel.type, rel.to);
        }
      }
    }
  }
};

}  // namespace

PropertyGraph load_graph(const SaturatedSet& s, const Ontology& o, const SynonymLexicon& lex) {
  return GraphLoader(s, o, lex).run();
}

// ---- matching -----------------------------------------------------------

std::vector<std::string> pattern_vars(const GraphPattern& p) {
  std::vector<std::string> out;
  auto note = [&out](const std::string& name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  };
  for (const auto& e : p.edges) {
    if (const auto* v = std::get_if<Variable>(&e.from)) note(v->name);
    if (const auto* v = std::get_if<Variable>(&e.rel)) note(v->name);
    if (const auto* v = std::get_if<Variable>(&e.to)) note(v->name);
  }
  return out;
}

namespace {

class Matcher {
 public:
  Matcher(const PropertyGraph& g, const GraphPattern& p) : g_(g), p_(p) {}

  ResultSet run() {
    ResultSet result;
    result.variables = pattern_vars(p_);
    for (const auto& e : p_.edges) {
      if (const auto* rt = std::get_if<RelType>(&e.rel); rt && !g_.knows_rel_type(rt->type))
        throw Error(ErrorCode::UnknownRelType, rt->type);
    }
    step(0, result);
    return result;
  }

 private:
  const PropertyGraph& g_;
  const GraphPattern& p_;
  std::map<std::string, std::string> bound_;

  // Node a term currently designates, or nullopt when it is an unbound variable.
  // `missing` is set when the term names a node absent from the graph.
  std::optional<NodeId> resolve(const NodeTerm& t, bool& missing) const {
    std::string_view name;
    if (const auto* c = std::get_if<NodeName>(&t)) {
      name = c->name;
    } else {
      const auto it = bound_.find(std::get<Variable>(t).name);
      if (it == bound_.end()) return std::nullopt;
      name = it->second;
    }
    auto id = g_.find(name);
    if (!id) missing = true;
    return id;
  }

  // Binds or checks a node term; returns false on mismatch. Appends newly
  // bound variable names to `fresh`.
  bool unify_node(const NodeTerm& t, NodeId id, std::vector<std::string>& fresh) {
    const GNode& n = g_.node(id);
    if (const auto* c = std::get_if<NodeName>(&t)) return n.name() == c->name;
    const auto& v = std::get<Variable>(t).name;
    if (const auto it = bound_.find(v); it != bound_.end()) return it->second == n.name();
    if (p_.exclude_synonyms && n.is_synonym()) return false;
    bound_.emplace(v, n.name());
    fresh.push_back(v);
    return true;
  }

  bool unify_rel(const RelTerm& t, const std::string& type, std::vector<std::string>& fresh) {
    if (const auto* c = std::get_if<RelType>(&t)) return c->type == type;
    const auto& v = std::get<Variable>(t).name;
    if (const auto it = bound_.find(v); it != bound_.end()) return it->second == type;
    bound_.emplace(v, type);
    fresh.push_back(v);
    return true;
  }

  void try_edge(std::size_t depth, const GRel& rel, ResultSet& out) {
    const auto& e = p_.edges[depth];
    std::vector<std::string> fresh;
    if (unify_node(e.from, rel.from, fresh) && unify_rel(e.rel, rel.type, fresh) &&
        unify_node(e.to, rel.to, fresh))
      step(depth + 1, out);
    for (const auto& v : fresh) bound_.erase(v);
  }

  void step(std::size_t depth, ResultSet& out) {
    if (depth == p_.edges.size()) {
      std::vector<std::string> row;
      row.reserve(out.variables.size());
      for (const auto& v : out.variables) row.push_back(bound_.at(v));
      out.rows.insert(std::move(row));
      return;
    }
    const auto& e = p_.edges[depth];
    bool missing = false;
    const auto from = resolve(e.from, missing);
    const auto to = resolve(e.to, missing);
    if (missing) return;
    if (from) {
      for (const auto idx : g_.out_edges(*from)) try_edge(depth, g_.relationships()[idx], out);
    } else if (to) {
      for (const auto idx : g_.in_edges(*to)) try_edge(depth, g_.relationships()[idx], out);
    } else {
      for (const auto& rel : g_.relationships()) try_edge(depth, rel, out);
    }
  }
};

}  // namespace

ResultSet match_pattern(const PropertyGraph& g, const GraphPattern& p) {
  return Matcher(g, p).run();
}

std::vector<std::string> neighbors(const PropertyGraph& g, std::string_view node_name,
                                   std::string_view rel_type, Direction direction) {
  std::set<std::string> names;
  const auto id = g.find(node_name);
  if (!id) return {};
  const auto& edges = direction == Direction::Out ? g.out_edges(*id) : g.in_edges(*id);
  for (const auto idx : edges) {
    const GRel& r = g.relationships()[idx];
    if (r.type != rel_type) continue;
    const GNode& other = g.node(direction == Direction::Out ? r.to : r.from);
    if (!other.is_synonym()) names.insert(other.name());
  }
  return {names.begin(), names.end()};
}

}  // namespace ontoquery
