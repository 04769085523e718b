#pragma once

#include <chrono>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ontoquery/graph_store.hpp"
#include "ontoquery/lexicon.hpp"
#include "ontoquery/ontology.hpp"
#include "ontoquery/planner.hpp"
#include "ontoquery/rdf.hpp"
#include "ontoquery/result_set.hpp"
#include "ontoquery/saturator.hpp"

namespace ontoquery {

// ---- triple-store backend ---------------------------------------------

// Saturated triples rendered to display strings, indexed by subject,
// predicate and object.
class TripleIndex {
 public:
  struct Row {
    std::string s, p, o;
  };

  TripleIndex() = default;
  explicit TripleIndex(const TripleSet& triples);

  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::size_t>& by_subject(const std::string& s) const;
  const std::vector<std::size_t>& by_predicate(const std::string& p) const;
  const std::vector<std::size_t>& by_object(const std::string& o) const;

 private:
  std::vector<Row> rows_;
  std::unordered_map<std::string, std::vector<std::size_t>> s_, p_, o_;
};

// Display string of a constant term, as the backends report it.
std::string render_term(const Term& t);

// Left-to-right join with binding propagation over s.all().
ResultSet eval_bgp(const SaturatedSet& s, const Bgp& q);
ResultSet eval_bgp(const TripleIndex& index, const Bgp& q);

// ---- translation and surface texts ------------------------------------

// One edge constraint per pattern; constants become node names, variables
// keep their names. Throws Error{UntranslatablePattern} for a literal or
// primitive in subject position.
GraphPattern translate(const Bgp& q);

// "PREFIX : <ns#>\nSELECT ?x WHERE { SubClassOf(?x, :Topping) }"; ASK when
// the query has no variables.
std::string emit_sparqldl(const Bgp& q, std::string_view base_namespace);
std::string emit_sparqldl(const InfoQuery& q, std::string_view base_namespace);

// "MATCH (x)-[:SUB_CLASS_OF]->(c {name:\"Topping\"}) RETURN x.name"
std::string emit_cypher(const Bgp& q);
std::string emit_cypher(const InfoQuery& q);

// ---- both at once -----------------------------------------------------

// Everything needed to answer queries over one ontology.
struct KnowledgeBase {
  Ontology ontology;
  SaturatedSet saturated;
  TripleIndex index;
  PropertyGraph graph;

  static std::shared_ptr<const KnowledgeBase> build(Ontology o, const SynonymLexicon& lex);
};

struct DualResult {
  std::string sparqldl_text;
  std::string cypher_text;
  ResultSet triple_results;
  ResultSet graph_results;
  bool equal = false;
  std::chrono::nanoseconds sparqldl_time{0};
  std::chrono::nanoseconds graph_time{0};
};

DualResult execute_dual(const KnowledgeBase& kb, const InfoQuery& q);
DualResult execute_dual(const KnowledgeBase& kb, const Bgp& q);

}  // namespace ontoquery
