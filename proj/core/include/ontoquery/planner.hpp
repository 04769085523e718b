#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoquery/ontology.hpp"
#include "ontoquery/rdf.hpp"
#include "ontoquery/resolver.hpp"

namespace ontoquery {

enum class InfoTag {
  SubClasses,
  EquivalentClasses,
  DisjointClasses,
  Instances,
  Annotation,
  SubProperties,
  EquivalentProperties,
  DisjointProperties,
  InverseProperties,
  DomainsAndRanges,
  InstanceClasses,
  SameInstances,
  DifferentInstances,
  DomainOfClassVia,
  RangeOfClassVia,
  LinkBetweenClasses,
  ClassContainsInstance,
};

inline constexpr std::array kAllInfoTags{
    InfoTag::SubClasses,         InfoTag::EquivalentClasses,  InfoTag::DisjointClasses,
    InfoTag::Instances,          InfoTag::Annotation,         InfoTag::SubProperties,
    InfoTag::EquivalentProperties, InfoTag::DisjointProperties, InfoTag::InverseProperties,
    InfoTag::DomainsAndRanges,   InfoTag::InstanceClasses,    InfoTag::SameInstances,
    InfoTag::DifferentInstances, InfoTag::DomainOfClassVia,   InfoTag::RangeOfClassVia,
    InfoTag::LinkBetweenClasses, InfoTag::ClassContainsInstance,
};

std::string_view to_string(InfoTag tag);
std::optional<InfoTag> parse_info_tag(std::string_view text);

// A facet is one tag, or ALL when `tag` is empty.
struct Facet {
  std::optional<InfoTag> tag;

  static Facet all() { return {}; }
  bool is_all() const { return !tag.has_value(); }
  bool operator==(const Facet&) const = default;
};

std::string to_string(const Facet& f);
// "ALL"/"all" or a tag name, case-insensitive. Throws Error{InvalidArgument}.
Facet parse_facet(std::string_view text);

// Facets offered for an entity kind, ALL last.
std::vector<Facet> legal_facets(EntityKind kind);
bool is_legal(InfoTag tag, EntityKind kind);

struct InfoQuery {
  InfoTag tag = InfoTag::SubClasses;
  std::string ontology;
  std::vector<EntityRef> entities;  // subject first
  std::optional<EntityRef> via;     // property of DomainOfClassVia / RangeOfClassVia
  Bgp bgp;

  const EntityRef& subject() const { return entities.front(); }
  auto operator<=>(const InfoQuery&) const = default;
};

struct EntityQueries {
  EntityRef entity;
  std::vector<InfoQuery> queries;

  bool operator==(const EntityQueries&) const = default;
};

// One interpretation of the keywords: a single entity per keyword.
struct QueryPlan {
  std::vector<EntityQueries> per_entity;
  std::vector<InfoQuery> combinations;

  std::vector<const InfoQuery*> all_queries() const;
  bool operator==(const QueryPlan&) const = default;
};

inline constexpr std::size_t kMaxPlans = 16;
inline constexpr std::size_t kMaxCombinedKeywords = 3;

// Entity-level queries for one entity, before facet filtering.
std::vector<InfoQuery> entity_queries(const EntityRef& e);

// Plan for a fixed list of entities. Combinations are generated per ontology
// only while at most three entities are given; entities are segmented in
// order and a segment is only extended while its combination row still
// yields a well-formed pattern. Throws Error{IncompatibleFacet} when the
// facet is legal for none of the entities.
QueryPlan plan_entities(const std::vector<EntityRef>& entities, const Facet& facet,
                        const std::vector<const Ontology*>& registry);

// One plan per choice of match, capped at kMaxPlans (Direct matches win
// first, then enumeration order).
std::vector<QueryPlan> plan(const std::vector<ResolvedKeyword>& resolved, const Facet& facet,
                            const std::vector<const Ontology*>& registry);

// True when every constant of `q` is registered in `o` with a kind that fits
// its position.
bool is_well_formed(const Bgp& q, const Ontology& o);

}  // namespace ontoquery
