#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontoquery/rdf.hpp"

namespace ontoquery {

struct Entity {
  Iri iri;
  EntityKind kind;
  // owl:Thing / owl:Nothing exist in every ontology without being declared.
  bool implicit = false;

  bool operator==(const Entity&) const = default;
};

// rdfs:domain / rdfs:range of one property. Ranges are class IRIs for object
// properties and xsd datatype IRIs for data properties.
struct PropertySignature {
  Iri property;
  std::set<Iri> domains;
  std::set<Iri> ranges;

  bool operator==(const PropertySignature&) const = default;
};

struct EntityCounts {
  std::size_t classes = 0;
  std::size_t object_properties = 0;
  std::size_t data_properties = 0;
  std::size_t instances = 0;

  bool operator==(const EntityCounts&) const = default;
};

// Parsed entity registry plus asserted triples. Immutable once built.
class Ontology {
 public:
  Ontology() = default;

  const std::string& id() const { return id_; }
  // Namespace bound to the empty prefix label (may be empty).
  const std::string& base_prefix() const { return base_prefix_; }
  const PrefixMap& prefixes() const { return prefixes_; }
  const std::map<std::string, Entity, std::less<>>& entities() const { return entities_; }
  const TripleSet& asserted() const { return asserted_; }
  const std::map<std::string, PropertySignature, std::less<>>& signatures() const {
    return signatures_;
  }

  // Exact, case-sensitive lookup by local name.
  std::optional<Entity> find(std::string_view name) const;
  bool contains(const Iri& iri) const;

  // Declared (non-implicit) entity names of one kind, sorted.
  std::vector<std::string> names(EntityKind kind) const;
  EntityCounts counts() const;

  // In file order; empty when the entity has none.
  const std::vector<Literal>& labels(std::string_view name) const;
  const std::vector<Literal>& comments(std::string_view name) const;

  bool operator==(const Ontology&) const = default;

 private:
  friend class OntologyParser;

  std::string id_;
  std::string base_prefix_;
  PrefixMap prefixes_;
  std::map<std::string, Entity, std::less<>> entities_;
  TripleSet asserted_;
  std::map<std::string, std::vector<Literal>, std::less<>> labels_;
  std::map<std::string, std::vector<Literal>, std::less<>> comments_;
  std::map<std::string, PropertySignature, std::less<>> signatures_;
};

// Parses the Turtle subset described in the README. Throws Error with one of
// SyntaxError, UnknownPrefix, MalformedIri, KindConflict, DuplicateName,
// DanglingReference or InvalidAxiom; positions are reported where known.
Ontology parse_ontology(std::istream& source, std::string id);
Ontology parse_ontology(std::string_view source, std::string id);

std::optional<Entity> entity_kind(const Ontology& o, std::string_view name);

}  // namespace ontoquery
