#include "ontoquery/rdf.hpp"

#include <algorithm>
#include <cctype>

#include "ontoquery/error.hpp"

namespace ontoquery {

namespace {

bool has_whitespace(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

Iri checked_iri(std::string prefix, std::string_view local, std::string_view original) {
  if (local.empty() || local.find('#') != std::string_view::npos || has_whitespace(local) ||
      prefix.empty())
    throw Error(ErrorCode::MalformedIri, std::string(original));
  return Iri{std::move(prefix), std::string(local)};
}

}  // namespace

Iri parse_iri(std::string_view text, const PrefixMap& prefixes) {
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
    const auto body = text.substr(1, text.size() - 2);
    const auto hash = body.rfind('#');
    if (hash == std::string_view::npos || has_whitespace(body) ||
        body.find(':') == std::string_view::npos)
      throw Error(ErrorCode::MalformedIri, std::string(text));
    return checked_iri(std::string(body.substr(0, hash)), body.substr(hash + 1), text);
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::MalformedIri, std::string(text));
  const auto label = text.substr(0, colon);
  const auto it = prefixes.find(label);
  if (it == prefixes.end()) throw Error(ErrorCode::UnknownPrefix, std::string(label));
  return checked_iri(it->second, text.substr(colon + 1), text);
}

Iri owl_iri(std::string_view local) { return Iri{std::string(kOwlNamespace), std::string(local)}; }
Iri xsd_iri(std::string_view local) { return Iri{std::string(kXsdNamespace), std::string(local)}; }
bool is_datatype_iri(const Iri& iri) { return iri.prefix == kXsdNamespace; }

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Class: return "Class";
    case EntityKind::ObjectProperty: return "ObjectProperty";
    case EntityKind::DataProperty: return "DataProperty";
    case EntityKind::Instance: return "Instance";
  }
  return "Unknown";
}

std::optional<EntityKind> parse_entity_kind(std::string_view text) {
  for (auto k : kAllEntityKinds)
    if (to_string(k) == text) return k;
  return std::nullopt;
}

std::string_view to_string(PrimitivePredicate p) {
  switch (p) {
    case PrimitivePredicate::SubClassOf: return "SubClassOf";
    case PrimitivePredicate::EquivalentClass: return "EquivalentClass";
    case PrimitivePredicate::DisjointClass: return "DisjointClass";
    case PrimitivePredicate::InstanceOf: return "InstanceOf";
    case PrimitivePredicate::HasLabel: return "HasLabel";
    case PrimitivePredicate::HasComment: return "HasComment";
    case PrimitivePredicate::SubProperty: return "SubProperty";
    case PrimitivePredicate::EquivalentProperty: return "EquivalentProperty";
    case PrimitivePredicate::DisjointProperty: return "DisjointProperty";
    case PrimitivePredicate::InverseOf: return "InverseOf";
    case PrimitivePredicate::TypeProperty: return "TypeProperty";
    case PrimitivePredicate::Domain: return "Domain";
    case PrimitivePredicate::Range: return "Range";
    case PrimitivePredicate::SameAs: return "SameAs";
    case PrimitivePredicate::DifferentFrom: return "DifferentFrom";
  }
  return "Unknown";
}

std::string rel_type_name(PrimitivePredicate p) {
  const auto name = to_string(p);
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const auto c = static_cast<unsigned char>(name[i]);
    if (i > 0 && std::isupper(c)) out.push_back('_');
    out.push_back(static_cast<char>(std::toupper(c)));
  }
  return out;
}

std::optional<PrimitivePredicate> parse_rel_type(std::string_view rel_type) {
  for (auto p : kAllPrimitivePredicates)
    if (rel_type_name(p) == rel_type) return p;
  return std::nullopt;
}

std::string rel_type_name(const Predicate& p) {
  if (const auto* prim = std::get_if<PrimitivePredicate>(&p)) return rel_type_name(*prim);
  return std::get<Iri>(p).local;
}

std::string_view to_string(Datatype d) {
  switch (d) {
    case Datatype::String: return "string";
    case Datatype::Integer: return "integer";
    case Datatype::Decimal: return "decimal";
    case Datatype::Boolean: return "boolean";
  }
  return "string";
}

std::optional<Datatype> parse_datatype(std::string_view local) {
  for (auto d : {Datatype::String, Datatype::Integer, Datatype::Decimal, Datatype::Boolean})
    if (to_string(d) == local) return d;
  return std::nullopt;
}

std::string render_literal(const Literal& lit) {
  std::string out = "\"" + lit.value + "\"";
  if (lit.datatype != Datatype::String) {
    out += "^^xsd:";
    out += to_string(lit.datatype);
  }
  return out;
}

std::string display_name(const Iri& iri) {
  if (is_datatype_iri(iri)) return "xsd:" + iri.local;
  return iri.local;
}

std::string display_name(const Object& object) {
  if (const auto* iri = std::get_if<Iri>(&object)) return display_name(*iri);
  return render_literal(std::get<Literal>(object));
}

Variable var(std::string_view name) {
  if (!name.empty() && name.front() == '?') name.remove_prefix(1);
  if (name.empty()) throw Error(ErrorCode::InvalidArgument, "empty variable name");
  return Variable{"?" + std::string(name)};
}

std::vector<std::string> bgp_vars(const Bgp& q) {
  std::vector<std::string> out;
  auto visit = [&out](const Term& t) {
    if (const auto* v = std::get_if<Variable>(&t)) {
      if (std::find(out.begin(), out.end(), v->name) == out.end()) out.push_back(v->name);
    }
  };
  for (const auto& tp : q.patterns) {
    visit(tp.subject);
    visit(tp.predicate);
    visit(tp.object);
  }
  return out;
}

bool is_structurally_valid(const TriplePattern& tp) {
  const bool subject_ok =
      std::holds_alternative<Variable>(tp.subject) || std::holds_alternative<Iri>(tp.subject);
  const bool predicate_ok = !std::holds_alternative<Literal>(tp.predicate);
  const bool object_ok = !std::holds_alternative<PrimitivePredicate>(tp.object);
  return subject_ok && predicate_ok && object_ok;
}

}  // namespace ontoquery
