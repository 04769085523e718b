#include "ontoquery/saturator.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace ontoquery {

namespace {

using P = PrimitivePredicate;

constexpr std::size_t kPrimitiveCount = kAllPrimitivePredicates.size();

// Successor lists for every primitive predicate with an IRI object, plus the
// instance-level property assertions R8 works on.
struct Index {
  std::array<std::map<Iri, std::vector<Iri>>, kPrimitiveCount> succ;
  std::vector<const Triple*> property_assertions;

  const std::map<Iri, std::vector<Iri>>& of(P p) const {
    return succ[static_cast<std::size_t>(p)];
  }
  const std::vector<Iri>& next(P p, const Iri& from) const {
    static const std::vector<Iri> none;
    const auto& m = of(p);
    const auto it = m.find(from);
    return it == m.end() ? none : it->second;
  }
};

Index build_index(const TripleSet& triples) {
  Index idx;
  for (const auto& t : triples) {
    const auto* object = std::get_if<Iri>(&t.object);
    if (const auto* prim = std::get_if<P>(&t.predicate)) {
      if (object) idx.succ[static_cast<std::size_t>(*prim)][t.subject].push_back(*object);
    } else {
      idx.property_assertions.push_back(&t);
    }
  }
  return idx;
}

bool is_instance(const Ontology& o, const Iri& iri) {
  const auto e = o.find(iri.local);
  return e && e->iri == iri && e->kind == EntityKind::Instance;
}

class RulePass {
 public:
  RulePass(const TripleSet& triples, const Ontology& o)
      : triples_(triples), onto_(o), idx_(build_index(triples)) {}

  TripleSet run() {
    transitive(P::SubClassOf);                                        // R1
    transitive(P::SubProperty);                                       // R2
    for (auto p : {P::EquivalentClass, P::EquivalentProperty, P::SameAs}) {
      symmetric(p);                                                   // R3
      transitive(p);
    }
    mutual_subsumption(P::EquivalentClass, P::SubClassOf);            // R4
    mutual_subsumption(P::EquivalentProperty, P::SubProperty);
    for (auto p : {P::DisjointClass, P::DisjointProperty, P::DifferentFrom})
      symmetric(p);                                                   // R5
    symmetric(P::InverseOf);                                          // R6
    instance_propagation();                                           // R7
    inverse_materialization();                                        // R8
    equivalence_substitution();                                       // R9
    return std::move(out_);
  }

 private:
  const TripleSet& triples_;
  const Ontology& onto_;
  Index idx_;
  TripleSet out_;

  void emit(const Iri& s, Predicate p, const Iri& o) {
    Triple t{s, std::move(p), o};
    if (is_trivial_reflexive(t) || triples_.contains(t)) return;
    out_.insert(std::move(t));
  }

  // Full reachability per node, so chains close in one pass.
  void transitive(P p) {
    std::set<Iri> seen;
    std::vector<const Iri*> stack;
    for (const auto& [a, bs] : idx_.of(p)) {
      seen.clear();
      for (const auto& b : bs) stack.push_back(&b);
      while (!stack.empty()) {
        const Iri* b = stack.back();
        stack.pop_back();
        if (!seen.insert(*b).second) continue;
        emit(a, p, *b);
        for (const auto& c : idx_.next(p, *b)) stack.push_back(&c);
      }
    }
  }

  void symmetric(P p) {
    for (const auto& [a, bs] : idx_.of(p))
      for (const auto& b : bs) emit(b, p, a);
  }

  void mutual_subsumption(P equivalence, P subsumption) {
    for (const auto& [a, bs] : idx_.of(equivalence))
      for (const auto& b : bs) {
        emit(a, subsumption, b);
        emit(b, subsumption, a);
      }
  }

  void instance_propagation() {
    for (const auto& [x, classes] : idx_.of(P::InstanceOf))
      for (const auto& c : classes)
        for (const auto& d : idx_.next(P::SubClassOf, c)) emit(x, P::InstanceOf, d);
  }

  void inverse_materialization() {
    for (const Triple* t : idx_.property_assertions) {
      const auto* y = std::get_if<Iri>(&t->object);
      if (!y || !is_instance(onto_, t->subject) || !is_instance(onto_, *y)) continue;
      const auto& prop = std::get<Iri>(t->predicate);
      for (const auto& inverse : idx_.next(P::InverseOf, prop)) emit(*y, inverse, t->subject);
    }
  }

  void equivalence_substitution() {
    for (const auto& [a, bs] : idx_.of(P::SubClassOf))
      for (const auto& b : bs)
        for (const auto& b2 : idx_.next(P::EquivalentClass, b)) emit(a, P::SubClassOf, b2);
  }
};

void collect_clashes(const TripleSet& all, P positive, P negative, const char* code,
                     std::vector<Diagnostic>& out) {
  for (const auto& t : all) {
    const auto* prim = std::get_if<P>(&t.predicate);
    if (!prim || *prim != positive) continue;
    const auto& other = std::get<Iri>(t.object);
    if (!(t.subject < other)) continue;
    if (all.contains(Triple{t.subject, negative, other}))
      out.push_back(Diagnostic{code, t.subject.local, other.local});
  }
}

}  // namespace

bool is_trivial_reflexive(const Triple& t) {
  const auto* prim = std::get_if<P>(&t.predicate);
  const auto* object = std::get_if<Iri>(&t.object);
  if (!prim || !object || t.subject != *object) return false;
  switch (*prim) {
    case P::SubClassOf:
    case P::EquivalentClass:
    case P::SubProperty:
    case P::EquivalentProperty:
    case P::SameAs:
      return true;
    default:
      return false;
  }
}

TripleSet apply_rules_once(const TripleSet& triples, const Ontology& o) {
  return RulePass(triples, o).run();
}

bool is_saturated(const TripleSet& triples, const Ontology& o) {
  return apply_rules_once(triples, o).empty();
}

SaturatedSet saturate_triples(const TripleSet& base, const Ontology& o) {
  SaturatedSet s;
  for (const auto& t : base)
    if (!is_trivial_reflexive(t)) s.base_.insert(t);
  s.all_ = s.base_;
  for (;;) {
    TripleSet fresh = apply_rules_once(s.all_, o);
    ++s.rounds_;
    if (fresh.empty()) break;
    for (const auto& t : fresh) {
      s.all_.insert(t);
      s.inferred_.insert(t);
    }
  }
  collect_clashes(s.all_, P::EquivalentClass, P::DisjointClass, "DisjointnessViolation",
                  s.diagnostics_);
  collect_clashes(s.all_, P::EquivalentProperty, P::DisjointProperty, "DisjointnessViolation",
                  s.diagnostics_);
  collect_clashes(s.all_, P::SameAs, P::DifferentFrom, "DifferentFromViolation", s.diagnostics_);
  return s;
}

SaturatedSet saturate(const Ontology& o) { return saturate_triples(o.asserted(), o); }

std::string dump_triples(const TripleSet& triples) {
  std::vector<std::string> lines;
  lines.reserve(triples.size());
  for (const auto& t : triples)
    lines.push_back(display_name(t.subject) + "\t" + rel_type_name(t.predicate) + "\t" +
                    display_name(t.object));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::string dump_inferred(const SaturatedSet& s) { return dump_triples(s.inferred()); }

}  // namespace ontoquery
