#include "ontoquery/planner.hpp"

#include <algorithm>
#include <map>

#include "ontoquery/error.hpp"
#include "ontoquery/lexicon.hpp"

namespace ontoquery {

namespace {

using P = PrimitivePredicate;

constexpr std::string_view kTagNames[] = {
    "SubClasses",         "EquivalentClasses",    "DisjointClasses",   "Instances",
    "Annotation",         "SubProperties",        "EquivalentProperties",
    "DisjointProperties", "InverseProperties",    "DomainsAndRanges",  "InstanceClasses",
    "SameInstances",      "DifferentInstances",   "DomainOfClassVia",  "RangeOfClassVia",
    "LinkBetweenClasses", "ClassContainsInstance",
};
static_assert(std::size(kTagNames) == kAllInfoTags.size());

std::vector<InfoTag> entity_tags(EntityKind kind) {
  using T = InfoTag;
  switch (kind) {
    case EntityKind::Class:
      return {T::SubClasses, T::EquivalentClasses, T::DisjointClasses, T::Instances,
              T::Annotation};
    case EntityKind::ObjectProperty:
      return {T::SubProperties,     T::EquivalentProperties, T::DisjointProperties,
              T::InverseProperties, T::DomainsAndRanges,     T::Annotation};
    case EntityKind::DataProperty:
      return {T::SubProperties, T::EquivalentProperties, T::DisjointProperties,
              T::DomainsAndRanges, T::Annotation};
    case EntityKind::Instance:
      return {T::SameInstances, T::DifferentInstances, T::InstanceClasses, T::Annotation};
  }
  return {};
}

Term term(const EntityRef& e) { return e.iri; }

InfoQuery make(InfoTag tag, std::vector<EntityRef> entities, std::vector<TriplePattern> patterns,
               std::optional<EntityRef> via = std::nullopt) {
  InfoQuery q;
  q.tag = tag;
  q.ontology = entities.front().ontology;
  q.entities = std::move(entities);
  q.via = std::move(via);
  q.bgp.patterns = std::move(patterns);
  return q;
}

InfoQuery single(InfoTag tag, const EntityRef& e, Term s, P p, Term o) {
  return make(tag, {e}, {TriplePattern{std::move(s), p, std::move(o)}});
}

void add_domains_and_ranges(const EntityRef& p, std::vector<InfoQuery>& out) {
  out.push_back(single(InfoTag::DomainsAndRanges, p, term(p), P::Domain, var("?domain")));
  out.push_back(single(InfoTag::DomainsAndRanges, p, term(p), P::Range, var("?range")));
}

void add_class_via(const EntityRef& c, const EntityRef& p, std::vector<InfoQuery>& out) {
  out.push_back(make(InfoTag::DomainOfClassVia, {c, p}, {TriplePattern{term(c), term(p), var("?x")}}, p));
  out.push_back(make(InfoTag::RangeOfClassVia, {c, p}, {TriplePattern{var("?x"), term(p), term(c)}}, p));
}

void add_contains(const EntityRef& c, const EntityRef& i, std::vector<InfoQuery>& out) {
  out.push_back(make(InfoTag::ClassContainsInstance, {c, i},
                     {TriplePattern{term(i), P::InstanceOf, term(c)}}));
}

void add_joint_classes(std::vector<EntityRef> instances, std::vector<InfoQuery>& out) {
  std::sort(instances.begin(), instances.end());
  std::vector<TriplePattern> patterns;
  for (const auto& i : instances)
    patterns.push_back(TriplePattern{term(i), P::InstanceOf, var("?class")});
  out.push_back(make(InfoTag::InstanceClasses, std::move(instances), std::move(patterns)));
}

struct KindGroups {
  std::vector<EntityRef> classes, properties, instances;
};

KindGroups group(const std::vector<EntityRef>& seg) {
  KindGroups g;
  for (const auto& e : seg) {
    if (e.kind == EntityKind::Class) g.classes.push_back(e);
    else if (e.kind == EntityKind::Instance) g.instances.push_back(e);
    else g.properties.push_back(e);
  }
  return g;
}

// Combination queries of a 2- or 3-entity segment. Rows that only ask for
// per-entity information produce none.
std::vector<InfoQuery> combination_row(const std::vector<EntityRef>& seg, bool& info_only) {
  const auto g = group(seg);
  const auto nc = g.classes.size(), np = g.properties.size(), ni = g.instances.size();
  std::vector<InfoQuery> out;
  if (nc == 2 && np == 0 && ni == 0) {
    const auto& a = g.classes[0];
    const auto& b = g.classes[1];
    out.push_back(make(InfoTag::LinkBetweenClasses, {a, b}, {TriplePattern{term(a), var("?p"), term(b)}}));
    out.push_back(make(InfoTag::LinkBetweenClasses, {b, a}, {TriplePattern{term(b), var("?p"), term(a)}}));
  } else if (np >= 2 && nc == 0 && ni == 0) {
    for (const auto& p : g.properties) add_domains_and_ranges(p, out);
  } else if (ni >= 2 && nc == 0 && np == 0) {
    add_joint_classes(g.instances, out);
  } else if (nc == 1 && np == 1 && ni == 0) {
    add_class_via(g.classes[0], g.properties[0], out);
  } else if (nc == 1 && ni == 1 && np == 0) {
    add_contains(g.classes[0], g.instances[0], out);
  } else if (nc == 2 && np == 1) {
    add_domains_and_ranges(g.properties[0], out);
    for (const auto& c : g.classes) add_class_via(c, g.properties[0], out);
  } else if (nc == 2 && ni == 1) {
    out.push_back(single(InfoTag::InstanceClasses, g.instances[0], term(g.instances[0]),
                         P::InstanceOf, var("?x")));
    for (const auto& c : g.classes) add_contains(c, g.instances[0], out);
  } else if (np == 2 && nc == 1) {
    for (const auto& p : g.properties) add_domains_and_ranges(p, out);
    for (const auto& p : g.properties) add_class_via(g.classes[0], p, out);
  } else if (ni == 2 && nc == 1) {
    add_joint_classes(g.instances, out);
  }
  info_only = out.empty();
  return out;
}

const Ontology* find_ontology(const std::vector<const Ontology*>& registry, const std::string& id) {
  for (const Ontology* o : registry)
    if (o->id() == id) return o;
  return nullptr;
}

// Keeps the well-formed queries of a segment's row; nullopt when the segment
// is invalid.
std::optional<std::vector<InfoQuery>> valid_row(const std::vector<EntityRef>& seg,
                                                const Ontology* o) {
  bool info_only = false;
  auto row = combination_row(seg, info_only);
  if (info_only) return row;
  std::vector<InfoQuery> kept;
  for (auto& q : row)
    if (!o || is_well_formed(q.bgp, *o)) kept.push_back(std::move(q));
  if (kept.empty()) return std::nullopt;
  return kept;
}

std::vector<InfoQuery> segment_combinations(const std::vector<EntityRef>& group_entities,
                                            const Ontology* o) {
  std::vector<InfoQuery> out;
  std::vector<EntityRef> seg;
  std::vector<InfoQuery> seg_row;
  auto close = [&] {
    if (seg.size() >= 2)
      for (auto& q : seg_row) out.push_back(std::move(q));
  };
  for (const auto& e : group_entities) {
    if (seg.empty()) {
      seg.push_back(e);
      continue;
    }
    auto candidate = seg;
    candidate.push_back(e);
    if (auto row = valid_row(candidate, o)) {
      seg = std::move(candidate);
      seg_row = std::move(*row);
    } else {
      close();
      seg = {e};
      seg_row.clear();
    }
  }
  close();
  return out;
}

}  // namespace

std::string_view to_string(InfoTag tag) { return kTagNames[static_cast<std::size_t>(tag)]; }

std::optional<InfoTag> parse_info_tag(std::string_view text) {
  const auto lc = to_lower(text);
  for (auto tag : kAllInfoTags)
    if (to_lower(to_string(tag)) == lc) return tag;
  return std::nullopt;
}

std::string to_string(const Facet& f) {
  return f.is_all() ? std::string("ALL") : std::string(to_string(*f.tag));
}

Facet parse_facet(std::string_view text) {
  if (to_lower(text) == "all") return Facet::all();
  if (auto tag = parse_info_tag(text)) return Facet{tag};
  throw Error(ErrorCode::InvalidArgument, "unknown facet " + std::string(text));
}

std::vector<Facet> legal_facets(EntityKind kind) {
  std::vector<Facet> out;
  for (auto tag : entity_tags(kind)) out.push_back(Facet{tag});
  out.push_back(Facet::all());
  return out;
}

bool is_legal(InfoTag tag, EntityKind kind) {
  const auto tags = entity_tags(kind);
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

std::vector<const InfoQuery*> QueryPlan::all_queries() const {
  std::vector<const InfoQuery*> out;
  for (const auto& e : per_entity)
    for (const auto& q : e.queries) out.push_back(&q);
  for (const auto& q : combinations) out.push_back(&q);
  return out;
}

std::vector<InfoQuery> entity_queries(const EntityRef& e) {
  std::vector<InfoQuery> out;
  const Term self = term(e);
  for (auto tag : entity_tags(e.kind)) {
    switch (tag) {
      case InfoTag::SubClasses: out.push_back(single(tag, e, var("?x"), P::SubClassOf, self)); break;
      case InfoTag::EquivalentClasses: out.push_back(single(tag, e, self, P::EquivalentClass, var("?x"))); break;
      case InfoTag::DisjointClasses: out.push_back(single(tag, e, self, P::DisjointClass, var("?x"))); break;
      case InfoTag::Instances: out.push_back(single(tag, e, var("?x"), P::InstanceOf, self)); break;
      case InfoTag::SubProperties: out.push_back(single(tag, e, var("?x"), P::SubProperty, self)); break;
      case InfoTag::EquivalentProperties: out.push_back(single(tag, e, self, P::EquivalentProperty, var("?x"))); break;
      case InfoTag::DisjointProperties: out.push_back(single(tag, e, self, P::DisjointProperty, var("?x"))); break;
      case InfoTag::InverseProperties: out.push_back(single(tag, e, self, P::InverseOf, var("?x"))); break;
      case InfoTag::DomainsAndRanges: add_domains_and_ranges(e, out); break;
      case InfoTag::SameInstances: out.push_back(single(tag, e, self, P::SameAs, var("?x"))); break;
      case InfoTag::DifferentInstances: out.push_back(single(tag, e, self, P::DifferentFrom, var("?x"))); break;
      case InfoTag::InstanceClasses: out.push_back(single(tag, e, self, P::InstanceOf, var("?x"))); break;
      case InfoTag::Annotation:
        out.push_back(single(tag, e, self, P::HasLabel, var("?label")));
        out.push_back(single(tag, e, self, P::HasComment, var("?comment")));
        break;
      default: break;
    }
  }
  return out;
}

QueryPlan plan_entities(const std::vector<EntityRef>& entities, const Facet& facet,
                        const std::vector<const Ontology*>& registry) {
  if (entities.empty()) throw Error(ErrorCode::InvalidArgument, "no entities to plan");
  std::vector<EntityRef> distinct;
  for (const auto& e : entities)
    if (std::find(distinct.begin(), distinct.end(), e) == distinct.end()) distinct.push_back(e);

  if (!facet.is_all()) {
    const bool any = std::any_of(distinct.begin(), distinct.end(),
                                 [&](const EntityRef& e) { return is_legal(*facet.tag, e.kind); });
    if (!any) {
      std::string kinds;
      for (const auto& e : distinct) {
        const auto k = std::string(to_string(e.kind));
        if (kinds.find(k) == std::string::npos) kinds += (kinds.empty() ? "" : ",") + k;
      }
      throw Error(ErrorCode::IncompatibleFacet, to_string(facet) + " for " + kinds);
    }
  }

  QueryPlan plan;
  for (const auto& e : distinct) {
    EntityQueries eq{e, {}};
    for (auto& q : entity_queries(e))
      if (facet.is_all() || q.tag == *facet.tag) eq.queries.push_back(std::move(q));
    plan.per_entity.push_back(std::move(eq));
  }

  if (facet.is_all() && distinct.size() <= kMaxCombinedKeywords) {
    std::map<std::string, std::vector<EntityRef>> by_ontology;
    std::vector<std::string> order;
    for (const auto& e : distinct) {
      if (!by_ontology.contains(e.ontology)) order.push_back(e.ontology);
      by_ontology[e.ontology].push_back(e);
    }
    for (const auto& id : order) {
      for (auto& q : segment_combinations(by_ontology[id], find_ontology(registry, id))) {
        if (std::find(plan.combinations.begin(), plan.combinations.end(), q) ==
            plan.combinations.end())
          plan.combinations.push_back(std::move(q));
      }
    }
  }
  return plan;
}

std::vector<QueryPlan> plan(const std::vector<ResolvedKeyword>& resolved, const Facet& facet,
                            const std::vector<const Ontology*>& registry) {
  if (resolved.empty()) throw Error(ErrorCode::InvalidArgument, "no resolved keywords");

  std::vector<std::vector<EntityRef>> choices;
  std::size_t product = 1;
  for (const auto& kw : resolved) {
    std::vector<EntityRef> c;
    for (const auto& m : kw.matches) c.push_back(m.entity);
    product = std::min<std::size_t>(product * c.size(), kMaxPlans + 1);
    choices.push_back(std::move(c));
  }
  if (product > kMaxPlans) {
    for (std::size_t k = 0; k < resolved.size(); ++k) {
      std::vector<EntityRef> direct;
      for (const auto& m : resolved[k].matches)
        if (m.via == MatchVia::Direct) direct.push_back(m.entity);
      if (!direct.empty()) choices[k] = std::move(direct);
    }
  }

  // Odometer over the match choices, last keyword fastest.
  auto advance = [](std::vector<std::size_t>& pick, const std::vector<std::vector<EntityRef>>& choices) {
    for (std::size_t k = choices.size(); k-- > 0;) {
      if (++pick[k] < choices[k].size()) return true;
      pick[k] = 0;
    }
    return false;
  };

  std::vector<QueryPlan> plans;
  std::optional<Error> last_error;
  std::vector<std::size_t> pick(choices.size(), 0);
  for (std::size_t n = 0; n < kMaxPlans; ++n) {
    std::vector<EntityRef> entities;
    for (std::size_t k = 0; k < choices.size(); ++k) entities.push_back(choices[k][pick[k]]);
    try {
      auto p = plan_entities(entities, facet, registry);
      if (std::find(plans.begin(), plans.end(), p) == plans.end()) plans.push_back(std::move(p));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::IncompatibleFacet) throw;
      last_error = e;
    }
    if (!advance(pick, choices)) break;
  }
  if (plans.empty() && last_error) throw *last_error;
  return plans;
}

namespace {

enum class Slot { Class, Property, ObjectProperty, Instance, Entity, Individual, ClassOrDatatype, Annotation };

std::optional<EntityKind> kind_of(const Iri& iri, const Ontology& o) {
  const auto e = o.find(iri.local);
  if (!e || e->iri != iri) return std::nullopt;
  return e->kind;
}

// Constants must fit their slot; variables fit anything.
bool fits(const Term& t, Slot slot, const Ontology& o) {
  if (std::holds_alternative<Variable>(t)) return true;
  if (std::holds_alternative<Literal>(t)) return slot == Slot::Annotation;
  const auto* iri = std::get_if<Iri>(&t);
  if (!iri) return false;
  if (is_datatype_iri(*iri)) return slot == Slot::ClassOrDatatype;
  const auto kind = kind_of(*iri, o);
  if (!kind) return false;
  switch (slot) {
    case Slot::Class: return *kind == EntityKind::Class;
    case Slot::ClassOrDatatype: return *kind == EntityKind::Class;
    case Slot::Property: return is_property(*kind);
    case Slot::ObjectProperty: return *kind == EntityKind::ObjectProperty;
    case Slot::Instance: return *kind == EntityKind::Instance;
    case Slot::Individual: return *kind == EntityKind::Class || *kind == EntityKind::Instance;
    case Slot::Entity: return true;
    case Slot::Annotation: return false;
  }
  return false;
}

bool pattern_well_formed(const TriplePattern& tp, const Ontology& o) {
  if (!is_structurally_valid(tp)) return false;
  if (std::holds_alternative<Variable>(tp.predicate))
    return fits(tp.subject, Slot::Entity, o) &&
           (fits(tp.object, Slot::Entity, o) || fits(tp.object, Slot::Annotation, o) ||
            fits(tp.object, Slot::ClassOrDatatype, o));
  if (const auto* prop = std::get_if<Iri>(&tp.predicate)) {
    const auto kind = kind_of(*prop, o);
    if (!kind || !is_property(*kind)) return false;
    if (!fits(tp.subject, Slot::Individual, o)) return false;
    if (*kind == EntityKind::ObjectProperty) return fits(tp.object, Slot::Individual, o);
    return fits(tp.object, Slot::Annotation, o) || fits(tp.object, Slot::ClassOrDatatype, o);
  }
  const auto* prim = std::get_if<PrimitivePredicate>(&tp.predicate);
  if (!prim) return false;
  auto both = [&](Slot s, Slot obj) { return fits(tp.subject, s, o) && fits(tp.object, obj, o); };
  switch (*prim) {
    case P::SubClassOf:
    case P::EquivalentClass:
    case P::DisjointClass: return both(Slot::Class, Slot::Class);
    case P::InstanceOf: return both(Slot::Instance, Slot::Class);
    case P::SubProperty:
    case P::EquivalentProperty:
    case P::DisjointProperty: return both(Slot::Property, Slot::Property);
    case P::InverseOf: return both(Slot::ObjectProperty, Slot::ObjectProperty);
    case P::Domain: return both(Slot::Property, Slot::Class);
    case P::Range: return both(Slot::Property, Slot::ClassOrDatatype);
    case P::SameAs:
    case P::DifferentFrom: return both(Slot::Instance, Slot::Instance);
    case P::HasLabel:
    case P::HasComment: return both(Slot::Entity, Slot::Annotation);
    case P::TypeProperty: return fits(tp.subject, Slot::Property, o);
  }
  return false;
}

}  // namespace

bool is_well_formed(const Bgp& q, const Ontology& o) {
  if (q.patterns.empty()) return false;
  return std::all_of(q.patterns.begin(), q.patterns.end(),
                     [&](const TriplePattern& tp) { return pattern_well_formed(tp, o); });
}

}  // namespace ontoquery
