#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "ontoquery/dual_exec.hpp"
#include "ontoquery/error.hpp"
#include "ontoquery/lexicon.hpp"
#include "ontoquery/planner.hpp"
#include "ontoquery/resolver.hpp"
#include "ontoquery/saturator.hpp"

namespace ontoquery {

enum class View { SparqlDl, Cypher, Both };

std::string_view to_string(View v);
// "sparqldl" / "sparql-dl", "cypher", "both"; case-insensitive.
View parse_view(std::string_view text);

struct RegistrationSummary {
  std::string id;
  EntityCounts counts;
  std::size_t asserted_triples = 0;
  std::size_t inferred_triples = 0;
  std::size_t nodes = 0;
  std::size_t relationships = 0;
  std::size_t rounds = 0;
  std::vector<Diagnostic> diagnostics;
  std::chrono::nanoseconds load_time{0};  // parse + saturate + graph load
};

struct QueryOutcome {
  InfoQuery query;
  DualResult result;
};

struct EntityOutcome {
  EntityRef entity;
  std::vector<QueryOutcome> queries;
};

struct Interpretation {
  std::vector<EntityOutcome> entities;
  std::vector<QueryOutcome> combinations;
};

struct SearchResponse {
  std::string query;
  Facet facet;
  View view = View::Both;
  std::vector<std::string> tokens;
  std::vector<ResolvedKeyword> keywords;
  std::vector<std::string> unresolved;
  std::vector<Interpretation> interpretations;
  // Set when any query's backends disagreed.
  bool defect = false;
  std::chrono::nanoseconds elapsed{0};

  std::vector<const QueryOutcome*> outcomes() const;
};

// Loaded ontologies keyed by id. Searches take a shared lock; registration
// parses outside the lock and inserts under an exclusive one.
class Registry {
 public:
  explicit Registry(StopwordList stop = StopwordList::defaults(), SynonymLexicon lex = {});

  // Throws Error{DuplicateOntologyId}, Error{InvalidArgument} for an empty id,
  // or the parser's error.
  RegistrationSummary register_ontology(std::string_view source, const std::string& id);

  std::vector<RegistrationSummary> list() const;
  std::shared_ptr<const KnowledgeBase> find(const std::string& id) const;
  std::size_t size() const;

  // Throws Error{EmptyQuery} or Error{IncompatibleFacet}. Nothing resolving
  // yields a response with no interpretations and the tokens in `unresolved`.
  SearchResponse search(std::string_view query, const Facet& facet = Facet::all(),
                        View view = View::Both) const;

  const StopwordList& stopwords() const { return stop_; }
  const SynonymLexicon& lexicon() const { return lex_; }

 private:
  StopwordList stop_;
  SynonymLexicon lex_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<const KnowledgeBase>> kbs_;
  std::map<std::string, RegistrationSummary> summaries_;
};

std::int64_t to_ms(std::chrono::nanoseconds d);

// JSON renderings used by the HTTP layer and the CLI.
std::string to_json_string(const SearchResponse& r, bool include_timings = true);
std::string to_json_string(const RegistrationSummary& s);
std::string to_json_string(const std::vector<RegistrationSummary>& list);
std::string to_json_string(const Error& e);
std::string facets_json(EntityKind kind);

}  // namespace ontoquery
