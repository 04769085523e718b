#pragma once

#include <string>
#include <vector>

#include "ontoquery/ontology.hpp"
#include "ontoquery/rdf.hpp"

namespace ontoquery {

// Inconsistency found while saturating, e.g. a class pair that is both
// equivalent and disjoint. Saturation still completes.
struct Diagnostic {
  std::string code;  // "DisjointnessViolation", "DifferentFromViolation"
  std::string subject;
  std::string other;

  bool operator==(const Diagnostic&) const = default;
};

// Fixed inference rules, applied in rounds until a round derives nothing.
//  R1 SubClassOf transitivity
//  R2 SubProperty transitivity
//  R3 EquivalentClass / EquivalentProperty / SameAs symmetry + transitivity
//  R4 equivalence implies mutual subsumption (classes and properties)
//  R5 DisjointClass / DisjointProperty / DifferentFrom symmetry
//  R6 InverseOf symmetry
//  R7 InstanceOf propagates up SubClassOf
//  R8 instance-level assertions materialise through InverseOf
//  R9 SubClassOf(A,B) and EquivalentClass(B,B') give SubClassOf(A,B')
// Reflexive self-facts (C SubClassOf C, C EquivalentClass C, ...) are never
// stored, and owl:Nothing / bottom-property universality is not materialised.

class SaturatedSet {
 public:
  SaturatedSet() = default;

  const TripleSet& base() const { return base_; }
  const TripleSet& inferred() const { return inferred_; }
  // base union inferred
  const TripleSet& all() const { return all_; }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
  std::size_t rounds() const { return rounds_; }

  bool contains(const Triple& t) const { return all_.contains(t); }

 private:
  friend SaturatedSet saturate_triples(const TripleSet& base, const Ontology& o);

  TripleSet base_;
  TripleSet inferred_;
  TripleSet all_;
  std::vector<Diagnostic> diagnostics_;
  std::size_t rounds_ = 0;
};

SaturatedSet saturate(const Ontology& o);

// Saturates an arbitrary triple set whose entities are registered in `o`.
SaturatedSet saturate_triples(const TripleSet& base, const Ontology& o);

// New triples derivable from `triples` by one pass of every rule.
TripleSet apply_rules_once(const TripleSet& triples, const Ontology& o);

// True iff one full rule pass adds nothing.
bool is_saturated(const TripleSet& triples, const Ontology& o);

// True for self-facts that are never stored (C SubClassOf C, x SameAs x, ...).
bool is_trivial_reflexive(const Triple& t);

// One inferred triple per line, "S\tP\tO", lexicographically sorted.
std::string dump_inferred(const SaturatedSet& s);
std::string dump_triples(const TripleSet& triples);

}  // namespace ontoquery
