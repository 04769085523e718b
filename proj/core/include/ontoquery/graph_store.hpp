#pragma once

// In-memory labeled property graph holding one saturated ontology plus its
// synonym nodes, and a pattern matcher over it.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ontoquery/lexicon.hpp"
#include "ontoquery/ontology.hpp"
#include "ontoquery/rdf.hpp"
#include "ontoquery/result_set.hpp"
#include "ontoquery/saturator.hpp"

namespace ontoquery {

using NodeId = std::uint32_t;

inline constexpr std::string_view kSynonymLabel = "Synonym";
inline constexpr std::string_view kLiteralLabel = "Literal";
inline constexpr std::string_view kDatatypeLabel = "Datatype";

struct GNode {
  NodeId id = 0;
  std::set<std::string, std::less<>> labels;
  std::map<std::string, std::string, std::less<>> props;  // always has "name" and "ontology"

  const std::string& name() const { return props.at("name"); }
  bool has_label(std::string_view label) const { return labels.contains(label); }
  bool is_synonym() const { return has_label(kSynonymLabel); }
};

struct GRel {
  NodeId from = 0;
  NodeId to = 0;
  std::string type;
  std::map<std::string, std::string, std::less<>> props;
};

class PropertyGraph {
 public:
  explicit PropertyGraph(std::string ontology_id = {});

  const std::string& ontology_id() const { return ontology_id_; }

  // Throws Error{DuplicateName} when the name is taken.
  NodeId add_node(std::string name, std::set<std::string, std::less<>> labels,
                  std::map<std::string, std::string, std::less<>> props = {});
  // Returns false for an existing (from, type, to) edge. The type is declared
  // implicitly.
  bool add_relationship(NodeId from, std::string type, NodeId to);
  void declare_rel_type(std::string type) { rel_types_.insert(std::move(type)); }
  void set_property(NodeId id, std::string key, std::string value);
  void add_label(NodeId id, std::string label);

  std::optional<NodeId> find(std::string_view name) const;
  const GNode& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<GNode>& nodes() const { return nodes_; }
  const std::vector<GRel>& relationships() const { return rels_; }
  // Indices into relationships().
  const std::vector<std::size_t>& out_edges(NodeId id) const { return out_.at(id); }
  const std::vector<std::size_t>& in_edges(NodeId id) const { return in_.at(id); }

  bool knows_rel_type(std::string_view type) const { return rel_types_.contains(type); }
  const std::set<std::string, std::less<>>& rel_types() const { return rel_types_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t relationship_count() const { return rels_.size(); }

  // "node\t<labels>\t<k=v;...>" then "edge\t<from>\t<rel>\t<to>" lines, each
  // section lexicographically sorted. Tabs, newlines, '=', ';', ',' and '\'
  // inside values are backslash-escaped.
  std::string dump() const;

 private:
  std::string ontology_id_;
  std::vector<GNode> nodes_;
  std::vector<GRel> rels_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::unordered_map<std::string, NodeId> by_name_;
  std::set<std::tuple<NodeId, std::string, NodeId>> edge_keys_;
  std::set<std::string, std::less<>> rel_types_;
};

// One node per entity (owl:Thing / owl:Nothing included), one relationship per
// saturated triple, literal and datatype nodes on demand, and one synonym node
// per lexicon synonym of an entity name or name segment, carrying copies of the
// entity's outgoing relationships (annotations excluded).
PropertyGraph load_graph(const SaturatedSet& s, const Ontology& o, const SynonymLexicon& lex);

// Rebuilds a graph from dump() output.
PropertyGraph parse_graph_dump(std::string_view text, std::string ontology_id = {});

// ---- pattern matching -------------------------------------------------

struct NodeName {
  std::string name;
  auto operator<=>(const NodeName&) const = default;
};
struct RelType {
  std::string type;
  auto operator<=>(const RelType&) const = default;
};

using NodeTerm = std::variant<Variable, NodeName>;
using RelTerm = std::variant<Variable, RelType>;

struct EdgeConstraint {
  NodeTerm from;
  RelTerm rel;
  NodeTerm to;
  auto operator<=>(const EdgeConstraint&) const = default;
};

struct GraphPattern {
  std::vector<EdgeConstraint> edges;
  // Variables never bind synonym nodes; those mirror entities for lookup only.
  bool exclude_synonyms = true;
  auto operator<=>(const GraphPattern&) const = default;
};

std::vector<std::string> pattern_vars(const GraphPattern& p);

// Homomorphic matching, left to right with binding propagation. A constant
// name absent from the graph yields an empty result; a relationship type the
// graph does not know throws Error{UnknownRelType}.
ResultSet match_pattern(const PropertyGraph& g, const GraphPattern& p);

enum class Direction { Out, In };

// Sorted, deduplicated entity names (synonym nodes excluded).
std::vector<std::string> neighbors(const PropertyGraph& g, std::string_view node_name,
                                   std::string_view rel_type, Direction direction);

}  // namespace ontoquery
