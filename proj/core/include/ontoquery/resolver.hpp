#pragma once

#include <string>
#include <vector>

#include "ontoquery/lexicon.hpp"
#include "ontoquery/ontology.hpp"
#include "ontoquery/rdf.hpp"

namespace ontoquery {

enum class MatchVia { Direct, Synonym, Label };

std::string_view to_string(MatchVia via);

// A registered entity, qualified by the ontology that owns it.
struct EntityRef {
  std::string ontology;
  Iri iri;
  EntityKind kind = EntityKind::Class;

  const std::string& name() const { return iri.local; }
  auto operator<=>(const EntityRef&) const = default;
};

struct EntityMatch {
  EntityRef entity;
  MatchVia via = MatchVia::Direct;
  std::string word;  // the token, for Synonym and Label matches

  bool operator==(const EntityMatch&) const = default;
};

struct ResolvedKeyword {
  std::string surface;
  std::vector<EntityMatch> matches;  // sorted by (ontology, name)

  bool operator==(const ResolvedKeyword&) const = default;
};

struct Resolution {
  std::vector<ResolvedKeyword> resolved;
  std::vector<std::string> unresolved;

  bool operator==(const Resolution&) const = default;
};

// Every token is tried against every explicitly declared entity of every
// ontology. Per entity the best tier wins (Direct > Synonym > Label); matches
// of different entities are all kept. Never throws.
Resolution match_keywords(const std::vector<std::string>& tokens,
                          const std::vector<const Ontology*>& registry,
                          const SynonymLexicon& lex);

// As match_keywords, but throws Error{NoKeywordResolved} when nothing matched.
Resolution resolve(const std::vector<std::string>& tokens,
                   const std::vector<const Ontology*>& registry, const SynonymLexicon& lex);

// Case-insensitive entity-name test across the registry, for preprocess().
NameCheck entity_name_check(const std::vector<const Ontology*>& registry);

}  // namespace ontoquery
