#include <gtest/gtest.h>

#include "ontoquery/error.hpp"
#include "ontoquery/ontology.hpp"
#include "support/oracles.hpp"

using namespace ontoquery;

namespace {

const char* kHeader =
    "@prefix : <http://ex.org/t#> .\n"
    "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
    "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n";

Ontology parse(const std::string& body) { return parse_ontology(std::string(kHeader) + body, "t"); }

ErrorCode error_of(const std::string& body) {
  try {
    parse(body);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << body;
  return ErrorCode::InvalidArgument;
}

void expect_counts(const std::string& file) {
  const auto text = oracle::read_data(file);
  const auto expected = oracle::count_declarations(text);
  const auto o = parse_ontology(text, file);
  const auto c = o.counts();
  EXPECT_EQ(c.classes, expected.classes.size()) << file;
  EXPECT_EQ(c.object_properties, expected.object_properties.size()) << file;
  EXPECT_EQ(c.data_properties, expected.data_properties.size()) << file;
  EXPECT_EQ(c.instances, expected.instances.size()) << file;
  const auto class_names = o.names(EntityKind::Class);
  EXPECT_EQ(std::set<std::string>(class_names.begin(), class_names.end()), expected.classes);
}

}  // namespace

TEST(ParseOntology, PizzaMiniCountsMatchLineScan) {
  expect_counts("pizza-mini.ttl");
  const auto c = parse_ontology(oracle::read_data("pizza-mini.ttl"), "pizza-mini").counts();
  EXPECT_EQ(c, (EntityCounts{8, 3, 0, 2}));
}

TEST(ParseOntology, OtherFixturesMatchLineScan) {
  expect_counts("pizza-plus.ttl");
  expect_counts("mouse-mini.ttl");
}

TEST(ParseOntology, KindConflict) {
  try {
    parse(":X a owl:Class . :X a owl:ObjectProperty .");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KindConflict);
    EXPECT_EQ(e.detail(), ":X");
  }
}

TEST(ParseOntology, NamedIndividualIsAThing) {
  const auto o = parse(":x a owl:NamedIndividual .");
  EXPECT_TRUE(o.asserted().contains(
      Triple{Iri{"http://ex.org/t", "x"}, PrimitivePredicate::InstanceOf, owl_iri("Thing")}));
  EXPECT_EQ(o.find("x")->kind, EntityKind::Instance);
}

TEST(ParseOntology, ErrorCodes) {
  EXPECT_EQ(error_of(":A a owl:Class ; rdfs:subClassOf :B ."), ErrorCode::DanglingReference);
  EXPECT_EQ(error_of(":A a owl:Class . :p a owl:ObjectProperty . :A rdfs:subClassOf :p ."),
            ErrorCode::InvalidAxiom);
  EXPECT_EQ(error_of(":A a foo:Class ."), ErrorCode::UnknownPrefix);
  EXPECT_EQ(error_of(":A a owl:Class"), ErrorCode::SyntaxError);
  EXPECT_EQ(error_of(":d a owl:DatatypeProperty ; rdfs:range :d ."), ErrorCode::InvalidAxiom);
  EXPECT_EQ(error_of(":A a owl:Class . <http://other.org/x#A> a owl:Class ."),
            ErrorCode::DuplicateName);
}

TEST(ParseOntology, BadPrefixIri) {
  try {
    parse_ontology("@prefix : <http://ex.org/t> .\n", "t");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedIri);
  }
}

TEST(ParseOntology, ErrorPositions) {
  try {
    parse_ontology("@prefix : <http://ex.org/t#> .\n:A a owl:Class .\n", "t");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownPrefix);
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 0);
  }
}

TEST(EntityKind, Lookup) {
  const auto o = parse_ontology(oracle::read_data("pizza-mini.ttl"), "pizza-mini");
  EXPECT_EQ(entity_kind(o, "hasBase")->kind, EntityKind::ObjectProperty);
  EXPECT_EQ(entity_kind(o, "Country")->kind, EntityKind::Class);
  EXPECT_EQ(entity_kind(o, "Country")->iri.full(), "http://ex.org/pizza#Country");
  EXPECT_FALSE(entity_kind(o, "Unicorn"));
  EXPECT_FALSE(entity_kind(o, "country"));
}

TEST(ParseOntology, AnnotationsAndSignatures) {
  const auto o = parse_ontology(oracle::read_data("pizza-plus.ttl"), "pizza-plus");
  ASSERT_EQ(o.labels("TomatoTopping").size(), 1u);
  EXPECT_EQ(o.labels("TomatoTopping")[0].value, "Tomato");
  EXPECT_EQ(o.comments("hasIngredient").size(), 1u);
  const auto& sig = o.signatures().at("hasCalorificContentValue");
  EXPECT_TRUE(sig.ranges.contains(xsd_iri("integer")));
  EXPECT_TRUE(o.asserted().contains(Triple{Iri{"http://ex.org/pizza-plus", "MargheritaExample"},
                                           Iri{"http://ex.org/pizza-plus", "hasCalorificContentValue"},
                                           Literal{"263", Datatype::Integer}}));
}

TEST(ParseOntology, ImplicitTopAndBottom) {
  const auto o = parse("");
  EXPECT_TRUE(o.find("Thing")->implicit);
  EXPECT_TRUE(o.find("Nothing")->implicit);
  EXPECT_EQ(o.counts(), EntityCounts{});
}

TEST(ParseOntology, DeterministicAcrossRuns) {
  const auto text = oracle::read_data("pizza-plus.ttl");
  EXPECT_EQ(parse_ontology(text, "a"), parse_ontology(text, "a"));
}
