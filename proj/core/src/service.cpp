#include "ontoquery/service.hpp"

#include <cmath>
#include <mutex>

#include <json.hpp>

namespace ontoquery {

using json = nlohmann::ordered_json;

std::string_view to_string(View v) {
  switch (v) {
    case View::SparqlDl: return "sparqldl";
    case View::Cypher: return "cypher";
    case View::Both: return "both";
  }
  return "both";
}

View parse_view(std::string_view text) {
  const auto lc = to_lower(text);
  if (lc == "sparqldl" || lc == "sparql-dl") return View::SparqlDl;
  if (lc == "cypher") return View::Cypher;
  if (lc == "both") return View::Both;
  throw Error(ErrorCode::InvalidArgument, "unknown view " + std::string(text));
}

std::int64_t to_ms(std::chrono::nanoseconds d) {
  return std::llround(static_cast<double>(d.count()) / 1e6);
}

std::vector<const QueryOutcome*> SearchResponse::outcomes() const {
  std::vector<const QueryOutcome*> out;
  for (const auto& in : interpretations) {
    for (const auto& e : in.entities)
      for (const auto& q : e.queries) out.push_back(&q);
    for (const auto& q : in.combinations) out.push_back(&q);
  }
  return out;
}

Registry::Registry(StopwordList stop, SynonymLexicon lex)
    : stop_(std::move(stop)), lex_(std::move(lex)) {}

RegistrationSummary Registry::register_ontology(std::string_view source, const std::string& id) {
  if (id.empty()) throw Error(ErrorCode::InvalidArgument, "empty ontology id");
  {
    std::shared_lock lock(mutex_);
    if (kbs_.contains(id)) throw Error(ErrorCode::DuplicateOntologyId, id);
  }
  const auto start = std::chrono::steady_clock::now();
  auto kb = KnowledgeBase::build(parse_ontology(source, id), lex_);
  RegistrationSummary s;
  s.load_time = std::chrono::steady_clock::now() - start;
  s.id = id;
  s.counts = kb->ontology.counts();
  s.asserted_triples = kb->saturated.base().size();
  s.inferred_triples = kb->saturated.inferred().size();
  s.nodes = kb->graph.node_count();
  s.relationships = kb->graph.relationship_count();
  s.rounds = kb->saturated.rounds();
  s.diagnostics = kb->saturated.diagnostics();

  std::unique_lock lock(mutex_);
  if (kbs_.contains(id)) throw Error(ErrorCode::DuplicateOntologyId, id);
  kbs_.emplace(id, std::move(kb));
  summaries_.emplace(id, s);
  return s;
}

std::vector<RegistrationSummary> Registry::list() const {
  std::shared_lock lock(mutex_);
  std::vector<RegistrationSummary> out;
  for (const auto& [id, s] : summaries_) out.push_back(s);
  return out;
}

std::shared_ptr<const KnowledgeBase> Registry::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  const auto it = kbs_.find(id);
  return it == kbs_.end() ? nullptr : it->second;
}

std::size_t Registry::size() const {
  std::shared_lock lock(mutex_);
  return kbs_.size();
}

SearchResponse Registry::search(std::string_view query, const Facet& facet, View view) const {
  const auto start = std::chrono::steady_clock::now();
  std::map<std::string, std::shared_ptr<const KnowledgeBase>> kbs;
  {
    std::shared_lock lock(mutex_);
    kbs = kbs_;
  }
  std::vector<const Ontology*> registry;
  for (const auto& [id, kb] : kbs) registry.push_back(&kb->ontology);

  SearchResponse r;
  r.query = std::string(query);
  r.facet = facet;
  r.view = view;
  r.tokens = preprocess(query, stop_, entity_name_check(registry));
  auto resolution = match_keywords(r.tokens, registry, lex_);
  r.keywords = std::move(resolution.resolved);
  r.unresolved = std::move(resolution.unresolved);

  if (!r.keywords.empty()) {
    auto run = [&](const InfoQuery& q) {
      QueryOutcome out{q, execute_dual(*kbs.at(q.ontology), q)};
      if (!out.result.equal) r.defect = true;
      return out;
    };
    for (const auto& p : plan(r.keywords, facet, registry)) {
      Interpretation in;
      for (const auto& eq : p.per_entity) {
        EntityOutcome eo{eq.entity, {}};
        for (const auto& q : eq.queries) eo.queries.push_back(run(q));
        in.entities.push_back(std::move(eo));
      }
      for (const auto& q : p.combinations) in.combinations.push_back(run(q));
      r.interpretations.push_back(std::move(in));
    }
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

// ---- JSON ---------------------------------------------------------------

namespace {

json entity_json(const EntityRef& e) {
  return {{"ontology", e.ontology}, {"name", e.name()}, {"kind", to_string(e.kind)},
          {"iri", e.iri.full()}};
}

json rows_json(const ResultSet& rs) {
  json rows = json::array();
  for (const auto& row : rs.rows) rows.push_back(row);
  return rows;
}

json outcome_json(const QueryOutcome& o, View view, bool include_timings) {
  json j;
  j["tag"] = to_string(o.query.tag);
  j["ontology"] = o.query.ontology;
  json names = json::array();
  for (const auto& e : o.query.entities) names.push_back(e.name());
  j["entities"] = names;
  if (o.query.via) j["via"] = o.query.via->name();
  if (view != View::Cypher) j["sparqldl"] = o.result.sparqldl_text;
  if (view != View::SparqlDl) j["cypher"] = o.result.cypher_text;
  j["variables"] = o.result.triple_results.variables;
  j["rows"] = rows_json(o.result.triple_results);
  j["equal"] = o.result.equal;
  if (!o.result.equal) j["graphRows"] = rows_json(o.result.graph_results);
  if (include_timings)
    j["timings"] = {{"sparqldlMs", to_ms(o.result.sparqldl_time)},
                    {"graphMs", to_ms(o.result.graph_time)}};
  return j;
}

json diagnostics_json(const std::vector<Diagnostic>& ds) {
  json out = json::array();
  for (const auto& d : ds) out.push_back({{"code", d.code}, {"subject", d.subject}, {"other", d.other}});
  return out;
}

json summary_json(const RegistrationSummary& s) {
  return {{"id", s.id},
          {"classes", s.counts.classes},
          {"objectProperties", s.counts.object_properties},
          {"dataProperties", s.counts.data_properties},
          {"instances", s.counts.instances},
          {"assertedTriples", s.asserted_triples},
          {"inferredTriples", s.inferred_triples},
          {"nodes", s.nodes},
          {"relationships", s.relationships},
          {"saturationRounds", s.rounds},
          {"diagnostics", diagnostics_json(s.diagnostics)},
          {"loadMs", to_ms(s.load_time)}};
}

}  // namespace

std::string to_json_string(const SearchResponse& r, bool include_timings) {
  json j;
  j["query"] = r.query;
  j["facet"] = to_string(r.facet);
  j["view"] = to_string(r.view);
  j["tokens"] = r.tokens;
  json keywords = json::array();
  for (const auto& kw : r.keywords) {
    json matches = json::array();
    for (const auto& m : kw.matches) {
      auto mj = entity_json(m.entity);
      mj["via"] = to_string(m.via);
      if (!m.word.empty()) mj["word"] = m.word;
      matches.push_back(std::move(mj));
    }
    keywords.push_back({{"surface", kw.surface}, {"matches", std::move(matches)}});
  }
  j["keywords"] = std::move(keywords);
  j["unresolved"] = r.unresolved;
  json interpretations = json::array();
  for (const auto& in : r.interpretations) {
    json entities = json::array();
    for (const auto& e : in.entities) {
      auto ej = entity_json(e.entity);
      json queries = json::array();
      for (const auto& q : e.queries) queries.push_back(outcome_json(q, r.view, include_timings));
      ej["queries"] = std::move(queries);
      entities.push_back(std::move(ej));
    }
    json combinations = json::array();
    for (const auto& q : in.combinations)
      combinations.push_back(outcome_json(q, r.view, include_timings));
    interpretations.push_back({{"entities", std::move(entities)}, {"combinations", std::move(combinations)}});
  }
  j["interpretations"] = std::move(interpretations);
  j["defect"] = r.defect;
  if (include_timings) j["elapsedMs"] = to_ms(r.elapsed);
  return j.dump();
}

std::string to_json_string(const RegistrationSummary& s) { return summary_json(s).dump(); }

std::string to_json_string(const std::vector<RegistrationSummary>& list) {
  json arr = json::array();
  for (const auto& s : list) arr.push_back(summary_json(s));
  return json{{"ontologies", std::move(arr)}}.dump();
}

std::string to_json_string(const Error& e) {
  json err{{"code", to_string(e.code())}, {"detail", e.detail()}, {"message", e.what()}};
  if (e.line() > 0) {
    err["line"] = e.line();
    err["column"] = e.column();
  }
  return json{{"error", std::move(err)}}.dump();
}

std::string facets_json(EntityKind kind) {
  json facets = json::array();
  for (const auto& f : legal_facets(kind)) facets.push_back(to_string(f));
  return json{{"kind", to_string(kind)}, {"facets", std::move(facets)}}.dump();
}

}  // namespace ontoquery
