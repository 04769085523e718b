#include <gtest/gtest.h>

#include <random>

#include "ontoquery/dual_exec.hpp"
#include "ontoquery/error.hpp"
#include "support/oracles.hpp"

using namespace ontoquery;

namespace {

using P = PrimitivePredicate;

const std::string kMiniNs = "http://ex.org/pizza";

Iri mini(const std::string& local) { return Iri{kMiniNs, local}; }

std::shared_ptr<const KnowledgeBase> mini_kb() {
  return KnowledgeBase::build(parse_ontology(oracle::read_data("pizza-mini.ttl"), "pizza-mini"), {});
}

Bgp bgp1(Term s, Term p, Term o) { return Bgp{{TriplePattern{std::move(s), std::move(p), std::move(o)}}}; }

EntityRef ref(const Ontology& o, const std::string& name) {
  const auto e = entity_kind(o, name);
  return EntityRef{o.id(), e->iri, e->kind};
}

InfoQuery info(InfoTag tag, const Ontology& o, const std::string& name) {
  for (auto& q : entity_queries(ref(o, name)))
    if (q.tag == tag) return q;
  throw std::runtime_error("no such query");
}

std::vector<EntityRef> explicit_entities(const Ontology& o) {
  std::vector<EntityRef> out;
  for (auto k : {EntityKind::Class, EntityKind::ObjectProperty, EntityKind::DataProperty, EntityKind::Instance})
    for (const auto& n : o.names(k)) out.push_back(ref(o, n));
  return out;
}

}  // namespace

TEST(EvalBgp, InstancesOfCountry) {
  const auto kb = mini_kb();
  EXPECT_EQ(eval_bgp(kb->saturated, bgp1(var("?x"), P::InstanceOf, mini("Country"))).column(),
            (std::vector<std::string>{"America", "Italy"}));
}

TEST(EvalBgp, SubclassesOfFoodMatchClosure) {
  const auto kb = mini_kb();
  const auto q = bgp1(var("?x"), P::SubClassOf, mini("Food"));
  EXPECT_EQ(eval_bgp(kb->saturated, q).column(), (std::vector<std::string>{"FishTopping", "Pizza", "Topping"}));
  const auto all = oracle::render(kb->saturated.all());
  EXPECT_EQ(eval_bgp(kb->saturated, q), oracle::brute_force_bgp(all, q, oracle::term_domain(all)));
}

TEST(EvalBgp, NoReflexiveAnswer) {
  const auto kb = mini_kb();
  const auto r = eval_bgp(kb->saturated, bgp1(mini("Pizza"), P::SubClassOf, mini("Pizza")));
  EXPECT_TRUE(r.empty());
  EXPECT_TRUE(r.variables.empty());
}

TEST(EvalBgp, GroundPatternYieldsOneEmptyRow) {
  const auto kb = mini_kb();
  const auto r = eval_bgp(kb->saturated, bgp1(mini("America"), P::InstanceOf, mini("Country")));
  EXPECT_EQ(r.size(), 1u);
}

TEST(EvalBgp, UnknownConstantIsEmpty) {
  const auto kb = mini_kb();
  EXPECT_TRUE(eval_bgp(kb->saturated, bgp1(var("?x"), P::SubClassOf, mini("Unicorn"))).empty());
}

TEST(EvalBgp, JoinPropagatesBindings) {
  const auto kb = mini_kb();
  const Bgp q{{TriplePattern{var("?x"), P::SubClassOf, var("?y")}, TriplePattern{var("?y"), P::SubClassOf, mini("Food")}}};
  EXPECT_EQ(eval_bgp(kb->saturated, q).rows, (std::set<std::vector<std::string>>{{"FishTopping", "Topping"}}));
  EXPECT_EQ(eval_bgp(kb->saturated, q), eval_bgp(kb->index, q));
}

TEST(EvalBgp, RepeatedVariableMustAgree) {
  const auto kb = mini_kb();
  EXPECT_TRUE(eval_bgp(kb->index, bgp1(var("?x"), P::SubClassOf, var("?x"))).empty());
}

TEST(Translate, OneEdgePerPattern) {
  EXPECT_EQ(translate(bgp1(var("?x"), P::SubClassOf, mini("Topping"))),
            (GraphPattern{{EdgeConstraint{var("?x"), RelType{"SUB_CLASS_OF"}, NodeName{"Topping"}}}}));
  EXPECT_EQ(translate(bgp1(mini("Country"), mini("hasBase"), var("?x"))),
            (GraphPattern{{EdgeConstraint{NodeName{"Country"}, RelType{"hasBase"}, var("?x")}}}));
  EXPECT_EQ(translate(bgp1(var("?x"), var("?p"), mini("Topping"))),
            (GraphPattern{{EdgeConstraint{var("?x"), var("?p"), NodeName{"Topping"}}}}));
  EXPECT_EQ(translate(bgp1(mini("Pizza"), P::HasLabel, Literal{"Pizza"})),
            (GraphPattern{{EdgeConstraint{NodeName{"Pizza"}, RelType{"HAS_LABEL"}, NodeName{"\"Pizza\""}}}}));
}

TEST(Translate, LiteralSubjectRejected) {
  try {
    translate(bgp1(Literal{"x"}, P::HasLabel, var("?y")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UntranslatablePattern);
  }
}

TEST(Translate, InjectiveOnPlannerQueries) {
  const auto o = parse_ontology(oracle::read_data("pizza-plus.ttl"), "pizza-plus");
  const auto entities = explicit_entities(o);
  std::map<GraphPattern, Bgp> seen;
  for (std::size_t i = 0; i < entities.size(); ++i)
    for (std::size_t j = i; j < entities.size(); ++j) {
      std::vector<EntityRef> es = {entities[i]};
      if (j != i) es.push_back(entities[j]);
      const auto plan = plan_entities(es, Facet::all(), {&o});
      for (const auto* q : plan.all_queries()) {
        const auto [it, fresh] = seen.emplace(translate(q->bgp), q->bgp);
        if (!fresh) {
          EXPECT_EQ(it->second, q->bgp);
        }
      }
    }
  EXPECT_GT(seen.size(), 50u);
}

TEST(Emit, SubclassesGolden) {
  const auto o = parse_ontology(oracle::read_data("pizza-mini.ttl"), "pizza-mini");
  const auto q = info(InfoTag::SubClasses, o, "Topping");
  EXPECT_EQ(emit_sparqldl(q, kMiniNs), "PREFIX : <http://ex.org/pizza#>\nSELECT ?x WHERE { SubClassOf(?x, :Topping) }");
  EXPECT_EQ(emit_cypher(q), "MATCH (x)-[:SUB_CLASS_OF]->(c {name:\"Topping\"}) RETURN x.name");
}

TEST(Emit, AnnotationAtoms) {
  const auto o = parse_ontology(oracle::read_data("pizza-mini.ttl"), "pizza-mini");
  const auto q = info(InfoTag::Annotation, o, "Country");
  EXPECT_EQ(emit_sparqldl(q, kMiniNs),
            "PREFIX : <http://ex.org/pizza#>\nPREFIX rdfs: <http://www.w3.org/2000/01/rdf-schema#>\n"
            "SELECT ?label WHERE { Annotation(:Country, rdfs:label, ?label) }");
  EXPECT_EQ(emit_cypher(q), "MATCH (c {name:\"Country\"})-[:HAS_LABEL]->(label) RETURN label.name");
}

TEST(Emit, ViaPropertyAndPredicateVariable) {
  EXPECT_EQ(emit_sparqldl(bgp1(mini("Country"), mini("hasBase"), var("?x")), kMiniNs),
            "PREFIX : <http://ex.org/pizza#>\nSELECT ?x WHERE { PropertyValue(:Country, :hasBase, ?x) }");
  EXPECT_EQ(emit_cypher(bgp1(mini("Country"), mini("hasBase"), var("?x"))),
            "MATCH (c {name:\"Country\"})-[:hasBase]->(x) RETURN x.name");
  EXPECT_EQ(emit_cypher(bgp1(mini("Pizza"), var("?p"), mini("Topping"))),
            "MATCH (c {name:\"Pizza\"})-[p]->(c1 {name:\"Topping\"}) RETURN type(p)");
}

TEST(Emit, GroundQueryAndRepeatedConstant) {
  const Bgp q{{TriplePattern{mini("America"), P::InstanceOf, var("?class")},
               TriplePattern{mini("Italy"), P::InstanceOf, var("?class")}}};
  EXPECT_EQ(emit_sparqldl(q, kMiniNs),
            "PREFIX : <http://ex.org/pizza#>\nSELECT ?class WHERE { Type(:America, ?class), Type(:Italy, ?class) }");
  EXPECT_EQ(emit_cypher(q),
            "MATCH (c {name:\"America\"})-[:INSTANCE_OF]->(class), (c1 {name:\"Italy\"})-[:INSTANCE_OF]->(class) "
            "RETURN class.name");
  const auto ask = bgp1(mini("America"), P::InstanceOf, mini("Country"));
  EXPECT_EQ(emit_sparqldl(ask, kMiniNs), "PREFIX : <http://ex.org/pizza#>\nASK WHERE { Type(:America, :Country) }");
  EXPECT_EQ(emit_cypher(ask), "MATCH (c {name:\"America\"})-[:INSTANCE_OF]->(c1 {name:\"Country\"}) RETURN true");
  const Bgp twice{{TriplePattern{mini("Pizza"), var("?p"), var("?c")}, TriplePattern{var("?c"), var("?q"), mini("Pizza")}}};
  EXPECT_EQ(emit_cypher(twice), "MATCH (c1 {name:\"Pizza\"})-[p]->(c), (c)-[q]->(c1) RETURN type(p), c.name, type(q)");
}

TEST(Emit, OtherNamespacesAndOddNames) {
  const Bgp q = bgp1(Iri{"http://ex.org/mouse", "MA-0001480"}, P::SubClassOf, owl_iri("Thing"));
  EXPECT_EQ(emit_sparqldl(q, "http://ex.org/mouse"),
            "PREFIX : <http://ex.org/mouse#>\nPREFIX owl: <http://www.w3.org/2002/07/owl#>\n"
            "ASK WHERE { SubClassOf(:MA-0001480, owl:Thing) }");
  EXPECT_EQ(emit_cypher(bgp1(var("?x"), Iri{"http://ex.org/mouse", "UNDEFINED_part_of"}, var("?y"))),
            "MATCH (x)-[:UNDEFINED_part_of]->(y) RETURN x.name, y.name");
  EXPECT_EQ(emit_cypher(bgp1(var("?x"), P::SubClassOf, Iri{"http://ex.org/mouse", "MA-0001480"})),
            "MATCH (x)-[:SUB_CLASS_OF]->(c {name:\"MA-0001480\"}) RETURN x.name");
}

TEST(Emit, Deterministic) {
  const auto o = parse_ontology(oracle::read_data("pizza-plus.ttl"), "pizza-plus");
  for (const auto& e : explicit_entities(o))
    for (const auto& q : entity_queries(e)) {
      EXPECT_EQ(emit_sparqldl(q, "http://ex.org/pizza-plus"), emit_sparqldl(q, "http://ex.org/pizza-plus"));
      EXPECT_EQ(emit_cypher(q), emit_cypher(q));
    }
}

TEST(ExecuteDual, Examples) {
  const auto kb = mini_kb();
  const auto sub = execute_dual(*kb, info(InfoTag::SubClasses, kb->ontology, "Topping"));
  EXPECT_TRUE(sub.equal);
  EXPECT_EQ(sub.triple_results.column(), (std::vector<std::string>{"FishTopping"}));
  EXPECT_EQ(sub.graph_results, sub.triple_results);
  EXPECT_FALSE(sub.sparqldl_text.empty());
  EXPECT_FALSE(sub.cypher_text.empty());

  const auto plan = plan_entities({ref(kb->ontology, "Country"), ref(kb->ontology, "hasBase")}, Facet::all(),
                                  {&kb->ontology});
  bool saw_range = false;
  for (const auto& q : plan.combinations) {
    if (q.tag != InfoTag::RangeOfClassVia) continue;
    saw_range = true;
    const auto r = execute_dual(*kb, q);
    EXPECT_TRUE(r.equal);
    EXPECT_TRUE(r.triple_results.empty());
  }
  EXPECT_TRUE(saw_range);
}

TEST(ExecuteDual, AgreeOnEveryPairPlanOfPizzaPlus) {
  SynonymLexicon lex;
  lex.add("topping", "garnish");
  const auto kb = KnowledgeBase::build(parse_ontology(oracle::read_data("pizza-plus.ttl"), "pizza-plus"), lex);
  const auto entities = explicit_entities(kb->ontology);
  std::size_t queries = 0;
  for (std::size_t i = 0; i < entities.size(); ++i)
    for (std::size_t j = i; j < entities.size(); ++j) {
      std::vector<EntityRef> es = {entities[i]};
      if (j != i) es.push_back(entities[j]);
      const auto plan = plan_entities(es, Facet::all(), {&kb->ontology});
      for (const auto* q : plan.all_queries()) {
        const auto r = execute_dual(*kb, *q);
        EXPECT_TRUE(r.equal) << r.sparqldl_text;
        ++queries;
      }
    }
  EXPECT_GT(queries, 500u);
}

// Planner-generated patterns on random ontologies of up to 200 entities,
// against assignment enumeration.
TEST(EvalBgp, PlannerQueriesAgreeWithBruteForce) {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> nc(5, 80), np(1, 20), ni(1, 100);
  for (int round = 0; round < 50; ++round) {
    const auto r = oracle::random_ontology(rng, nc(rng), np(rng), ni(rng));
    const auto o = parse_ontology(r.turtle, "r");
    const auto s = saturate(o);
    const TripleIndex index(s.all());
    const auto all = oracle::render(s.all());
    const auto domain = oracle::term_domain(all);
    const auto entities = explicit_entities(o);
    ASSERT_LE(entities.size(), 200u);
    std::uniform_int_distribution<std::size_t> pick(0, entities.size() - 1);
    for (int k = 0; k < 6; ++k) {
      std::vector<EntityRef> es;
      const int n = 1 + k % 3;
      for (int m = 0; m < n; ++m) es.push_back(entities[pick(rng)]);
      const auto plan = plan_entities(es, Facet::all(), {&o});
      for (const auto* q : plan.all_queries()) {
        EXPECT_EQ(eval_bgp(index, q->bgp), oracle::brute_force_bgp(all, q->bgp, domain))
            << "round " << round << " " << emit_sparqldl(*q, "http://ex.org/r");
      }
    }
  }
}

// Up to three variables over a small ontology, where |domain|^3 stays cheap.
TEST(EvalBgp, RandomJoinsAgreeWithBruteForce) {
  std::mt19937 rng(99);
  for (int round = 0; round < 50; ++round) {
    const auto r = oracle::random_ontology(rng, 8, 3, 5);
    const auto o = parse_ontology(r.turtle, "r");
    const auto s = saturate(o);
    const auto all = oracle::render(s.all());
    const auto domain = oracle::term_domain(all);
    const auto entities = explicit_entities(o);
    std::uniform_int_distribution<std::size_t> pick(0, entities.size() - 1);
    std::uniform_int_distribution<int> coin(0, 2);
    const std::vector<Term> preds = {P::SubClassOf, P::InstanceOf, P::Domain, P::Range, P::SameAs, var("?p")};
    std::uniform_int_distribution<std::size_t> pred(0, preds.size() - 1);
    const std::vector<std::string> vars = {"?a", "?b", "?c"};
    auto term = [&]() -> Term {
      if (coin(rng) == 0) return entities[pick(rng)].iri;
      return var(vars[static_cast<std::size_t>(coin(rng))]);
    };
    Bgp q;
    for (int k = 0; k < 1 + round % 3; ++k) q.patterns.push_back(TriplePattern{term(), preds[pred(rng)], term()});
    if (bgp_vars(q).size() > 3) continue;
    EXPECT_EQ(eval_bgp(s, q), oracle::brute_force_bgp(all, q, domain)) << "round " << round;
  }
}
