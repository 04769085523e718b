#pragma once

// Identifiers, triples and triple patterns shared by every module.

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ontoquery {

inline constexpr std::string_view kOwlNamespace = "http://www.w3.org/2002/07/owl";
inline constexpr std::string_view kRdfsNamespace = "http://www.w3.org/2000/01/rdf-schema";
inline constexpr std::string_view kXsdNamespace = "http://www.w3.org/2001/XMLSchema";

// An IRI split at its (mandatory) '#' separator.
struct Iri {
  std::string prefix;  // absolute namespace IRI, without the trailing '#'
  std::string local;   // non-empty, no '#' and no whitespace

  std::string full() const { return prefix + "#" + local; }
  // "<prefix#local>", the form accepted back by parse_iri.
  std::string render() const { return "<" + full() + ">"; }

  auto operator<=>(const Iri&) const = default;
};

// prefix label -> namespace IRI (without '#')
using PrefixMap = std::map<std::string, std::string, std::less<>>;

// Accepts "<absolute#local>" or "label:local".
// Throws Error{UnknownPrefix} or Error{MalformedIri}.
Iri parse_iri(std::string_view text, const PrefixMap& prefixes);

Iri owl_iri(std::string_view local);
Iri xsd_iri(std::string_view local);
bool is_datatype_iri(const Iri& iri);

enum class EntityKind { Class, ObjectProperty, DataProperty, Instance };

inline constexpr std::array kAllEntityKinds{
    EntityKind::Class, EntityKind::ObjectProperty, EntityKind::DataProperty,
    EntityKind::Instance};

std::string_view to_string(EntityKind kind);
std::optional<EntityKind> parse_entity_kind(std::string_view text);
inline bool is_property(EntityKind kind) {
  return kind == EntityKind::ObjectProperty || kind == EntityKind::DataProperty;
}

enum class PrimitivePredicate {
  SubClassOf,
  EquivalentClass,
  DisjointClass,
  InstanceOf,
  HasLabel,
  HasComment,
  SubProperty,
  EquivalentProperty,
  DisjointProperty,
  InverseOf,
  TypeProperty,
  Domain,
  Range,
  SameAs,
  DifferentFrom,
};

inline constexpr std::array kAllPrimitivePredicates{
    PrimitivePredicate::SubClassOf,       PrimitivePredicate::EquivalentClass,
    PrimitivePredicate::DisjointClass,    PrimitivePredicate::InstanceOf,
    PrimitivePredicate::HasLabel,         PrimitivePredicate::HasComment,
    PrimitivePredicate::SubProperty,      PrimitivePredicate::EquivalentProperty,
    PrimitivePredicate::DisjointProperty, PrimitivePredicate::InverseOf,
    PrimitivePredicate::TypeProperty,     PrimitivePredicate::Domain,
    PrimitivePredicate::Range,            PrimitivePredicate::SameAs,
    PrimitivePredicate::DifferentFrom,
};

// "SubClassOf", "InstanceOf", ...
std::string_view to_string(PrimitivePredicate p);
// Relationship-type rendering used by the graph store: SubClassOf -> SUB_CLASS_OF.
std::string rel_type_name(PrimitivePredicate p);
std::optional<PrimitivePredicate> parse_rel_type(std::string_view rel_type);

// Either an OWL primitive or an ontology-defined property.
using Predicate = std::variant<PrimitivePredicate, Iri>;

// Primitive -> UPPER_SNAKE, property -> its local name verbatim.
std::string rel_type_name(const Predicate& p);

enum class Datatype { String, Integer, Decimal, Boolean };

std::string_view to_string(Datatype d);
std::optional<Datatype> parse_datatype(std::string_view local);

struct Literal {
  std::string value;
  Datatype datatype = Datatype::String;

  auto operator<=>(const Literal&) const = default;
};

// "\"v\"" for strings, "\"v\"^^xsd:integer" otherwise.
std::string render_literal(const Literal& lit);

using Object = std::variant<Iri, Literal>;

struct Triple {
  Iri subject;
  Predicate predicate;
  Object object;

  auto operator<=>(const Triple&) const = default;
};

using TripleSet = std::set<Triple>;

// Prefix-stripped name as stored in the graph and reported in results:
// the local name for entities, "xsd:<local>" for datatypes.
std::string display_name(const Iri& iri);
std::string display_name(const Object& object);

// A query variable; the name keeps its "?" sigil.
struct Variable {
  std::string name;

  auto operator<=>(const Variable&) const = default;
};

// Throws Error{InvalidArgument} when nothing follows the sigil.
Variable var(std::string_view name);

using Term = std::variant<Variable, Iri, PrimitivePredicate, Literal>;

struct TriplePattern {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const TriplePattern&) const = default;
};

// Basic graph pattern: a conjunction of triple patterns.
struct Bgp {
  std::vector<TriplePattern> patterns;

  auto operator<=>(const Bgp&) const = default;
};

// Distinct variables in first-occurrence order.
std::vector<std::string> bgp_vars(const Bgp& q);

// Structural check: literal only in object position, predicate is a
// primitive/property/variable, subject is not a literal or primitive.
bool is_structurally_valid(const TriplePattern& tp);

}  // namespace ontoquery
