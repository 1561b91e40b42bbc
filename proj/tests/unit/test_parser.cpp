#include "doctest.h"
#include "helpers.hpp"
#include "ontoforge/dataset.hpp"
#include "ontoforge/error.hpp"

using namespace ontoforge;
using testing::doc;
using testing::T;

TEST_CASE("Arthritis subclass axiom") {
    auto r = parse_ontology(doc(
        "SubClassOf(:Arthritis ObjectIntersectionOf(:Arthropathy "
        "ObjectSomeValuesFrom(:hasMorphology :Inflammatory)))"));
    REQUIRE(r.ontology.axioms.size() == 1);
    const auto& ax = std::get<SubClassOf>(r.ontology.axioms[0]);
    CHECK(ax.sub == T("Arthritis"));
    CHECK(ax.super == ConceptExpr::conjunction(
                          {T("Arthropathy"),
                           ConceptExpr::some(PropertyExpr{Iri("urn:t:hasMorphology")}, T("Inflammatory"))}));
    CHECK(r.warnings.empty());
    CHECK(r.ontology.concepts.size() == 3);
    CHECK(r.ontology.properties.count(Iri("urn:t:hasMorphology")) == 1);
}

TEST_CASE("empty document") {
    auto r = parse_ontology("");
    CHECK(r.ontology == Ontology{});
    CHECK(r.warnings.empty());
    auto only_ws = parse_ontology("  # comment only\n\n");
    CHECK(only_ws.ontology.axioms.empty());
}

TEST_CASE("cardinality restriction is skipped with a warning") {
    auto text = read_file(testing::data("unsupported.ofn"));
    auto r = parse_ontology(text);
    REQUIRE(r.warnings.size() == 2);
    CHECK(r.warnings[0] == ParseWarning{8, "ObjectMinCardinality"});
    CHECK(r.warnings[1] == ParseWarning{9, "DisjointClasses"});
    CHECK(r.ontology.axioms.size() == 1);
    CHECK(warnings_to_jsonl(r.warnings) ==
          "{\"line\":8,\"construct\":\"ObjectMinCardinality\"}\n"
          "{\"line\":9,\"construct\":\"DisjointClasses\"}\n");

    ParseOptions strict;
    strict.on_unsupported = OnUnsupported::Fail;
    try {
        parse_ontology(text, strict);
        FAIL("expected UnsupportedConstruct");
    } catch (const UnsupportedConstruct& e) {
        CHECK(e.construct() == "ObjectMinCardinality");
        CHECK(e.line() == 8);
    }
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_ontology("Prefix(:=<urn:t:>)\nOntology(<urn:t>\nSubClassOf(:A :B\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() >= 3);
    }
    try {
        parse_ontology(doc("SubClassOf(:A undefined:B)"));
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() > 0);
    }
    CHECK_THROWS_AS(parse_ontology(doc("SubClassOf(:A)")), SyntaxError);
    CHECK_THROWS_AS(parse_ontology(doc("SubClassOf(:A \"text\")")), SyntaxError);
    CHECK_THROWS_AS(parse_ontology(doc("SubClassOf(:B ObjectIntersectionOf(:A))")), SyntaxError);
}

TEST_CASE("n-ary equivalence becomes pairs with the first operand") {
    auto r = parse_ontology(doc("EquivalentClasses(:A :B :C)"));
    REQUIRE(r.ontology.axioms.size() == 2);
    CHECK(std::get<EquivalentClasses>(r.ontology.axioms[0]) == EquivalentClasses{T("A"), T("B")});
    CHECK(std::get<EquivalentClasses>(r.ontology.axioms[1]) == EquivalentClasses{T("A"), T("C")});
}

TEST_CASE("definitions are stored with the named side first") {
    auto r = parse_ontology(doc("EquivalentClasses(ObjectSomeValuesFrom(:r :X) :A)"));
    REQUIRE(r.ontology.axioms.size() == 1);
    const auto& e = std::get<EquivalentClasses>(r.ontology.axioms[0]);
    CHECK(e.first == T("A"));
    CHECK(definition_anchors(r.ontology).size() == 1);
}

TEST_CASE("complex-complex equivalence is kept but is not an anchor") {
    auto r = parse_ontology(doc("EquivalentClasses(ObjectSomeValuesFrom(:r :X) ObjectAllValuesFrom(:r :Y))"));
    CHECK(r.ontology.axioms.size() == 1);
    CHECK(definition_anchors(r.ontology).empty());
}

TEST_CASE("owl:Thing and owl:Nothing map to the constants") {
    auto r = parse_ontology(
        "Prefix(:=<urn:t:>)\nPrefix(owl:=<http://www.w3.org/2002/07/owl#>)\n"
        "SubClassOf(:A owl:Thing)\nSubClassOf(owl:Nothing :A)\n");
    REQUIRE(r.ontology.axioms.size() == 2);
    CHECK(std::get<SubClassOf>(r.ontology.axioms[0]).super == ConceptExpr::top());
    CHECK(std::get<SubClassOf>(r.ontology.axioms[1]).sub == ConceptExpr::bottom());
    CHECK(r.ontology.concepts.size() == 1);
}

TEST_CASE("labels follow annotation-property precedence; other languages are ignored") {
    auto r = parse_ontology(doc(
        "AnnotationAssertion(<http://www.geneontology.org/formats/oboInOwl#hasExactSynonym> :A \"exact\")\n"
        "AnnotationAssertion(rdfs:label :A \"main\"@en)\n"
        "AnnotationAssertion(rdfs:label :A \"principal\"@fr)\n"
        "AnnotationAssertion(<http://www.geneontology.org/formats/oboInOwl#hasSynonym> :A \"syn\")\n"
        "AnnotationAssertion(rdfs:comment :A \"a comment\")"));
    const auto& labels = r.ontology.labels.at(Iri("urn:t:A"));
    CHECK(labels == std::vector<std::string>{"main", "syn", "exact"});
    CHECK(r.ontology.display_name(Iri("urn:t:A")) == "main");
    CHECK_FALSE(r.ontology.display_name(Iri("urn:t:B")).has_value());
}

TEST_CASE("deprecation flag") {
    auto r = parse_ontology(doc(
        "AnnotationAssertion(owl:deprecated :Old \"true\"^^xsd:boolean)\n"
        "AnnotationAssertion(owl:deprecated :Fine \"false\"^^xsd:boolean)"));
    CHECK(r.ontology.deprecated == std::set<Iri>{Iri("urn:t:Old")});
}

TEST_CASE("an IRI used in two roles is skipped as punning") {
    auto r = parse_ontology(doc(
        "Declaration(Class(:p))\nSubClassOf(:A ObjectSomeValuesFrom(:p :B))"));
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].construct == "Punning");
    CHECK(r.ontology.axioms.empty());
}

TEST_CASE("axiom annotations and ontology annotations are ignored") {
    auto r = parse_ontology(doc(
        "Annotation(rdfs:comment \"ontology level\")\n"
        "SubClassOf(Annotation(rdfs:comment \"why\") :A :B)"));
    REQUIRE(r.ontology.axioms.size() == 1);
    CHECK(r.warnings.empty());
}

TEST_CASE("inverse properties are unsupported") {
    auto r = parse_ontology(doc("SubClassOf(:A ObjectSomeValuesFrom(ObjectInverseOf(:r) :B))"));
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].construct == "ObjectInverseOf");
}

TEST_CASE("parsing is deterministic") {
    auto text = read_file(testing::data("food30.ofn"));
    auto a = parse_ontology(text);
    auto b = parse_ontology(text);
    CHECK(a.ontology == b.ontology);
    CHECK(a.warnings == b.warnings);
}

TEST_CASE("parse_concept: documented examples") {
    CHECK(parse_concept("Meat") == ConceptExpr::atomic("Meat"));
    CHECK(parse_concept("(Meat and (derivesFrom some Cattle) and (partOf only Continuant))") ==
          ConceptExpr::conjunction({ConceptExpr::atomic("Meat"),
                                    ConceptExpr::some(PropertyExpr{Iri("derivesFrom")}, ConceptExpr::atomic("Cattle")),
                                    ConceptExpr::only(PropertyExpr{Iri("partOf")}, ConceptExpr::atomic("Continuant"))}));
    CHECK(parse_concept("(not Meat)") == ConceptExpr::negation(ConceptExpr::atomic("Meat")));
    CHECK(parse_concept("  Thing ") == ConceptExpr::top());
}

TEST_CASE("parse_concept: malformed text") {
    CHECK_THROWS_AS(parse_concept(""), SyntaxError);
    CHECK_THROWS_AS(parse_concept("(A and B"), SyntaxError);
    CHECK_THROWS_AS(parse_concept("(A and B or C)"), SyntaxError);
    CHECK_THROWS_AS(parse_concept("((A and B))"), SyntaxError);
    CHECK_THROWS_AS(parse_concept("A B"), SyntaxError);
    CHECK_THROWS_AS(parse_concept("(r some)"), SyntaxError);
    try {
        parse_concept("(A and and)");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.column() == 8);
    }
}
