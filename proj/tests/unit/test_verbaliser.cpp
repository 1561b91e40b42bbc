#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "ontoforge/error.hpp"
#include "ontoforge/verbaliser.hpp"

using namespace ontoforge;

namespace {

const std::string kNs = "http://example.org/golden#";

ConceptExpr N(const std::string& local) { return ConceptExpr::atomic(kNs + local); }
PropertyExpr R(const std::string& local) { return {Iri(kNs + local)}; }

const LabelMap& golden_labels() {
    static const LabelMap labels =
        load_ontology(testing::data("golden.ofn"), resolve_preset("default")).ontology.labels;
    return labels;
}

std::string V(const ConceptExpr& e) {
    return verbalise(e, golden_labels(), VerbaliserLexicon::defaults());
}

}  // namespace

TEST_CASE("golden verbalisation rows") {
    CHECK(V(ConceptExpr::conjunction({N("BioRegulation"), ConceptExpr::some(R("negRegulate"), N("ProlineBiosynProc"))})) ==
          "biological regulation that negatively regulates some proline biosynthetic process");
    CHECK(V(ConceptExpr::conjunction({N("ApoptoticProc"), ConceptExpr::some(R("partOf"), N("Luteolysis"))})) ==
          "apoptotic process that is part of some lutelysis");
    CHECK(V(ConceptExpr::conjunction(
              {N("ConcnOf"), ConceptExpr::some(R("charOf"), ConceptExpr::conjunction(
                                                                 {N("fucose"), ConceptExpr::some(R("partOf"), N("MaterialEnt"))}))})) ==
          "concentration of something that is characteristic of some fucose that is part of some material entity");
    CHECK(V(ConceptExpr::conjunction(
              {ConceptExpr::some(R("derivesFrom"), ConceptExpr::disjunction({N("TimothyPlant"), N("TrifoliumPratense")})),
               N("Silage"), N("PlantFoodProd")})) ==
          "silage and plant food product that derives from some timothy plant or trifolium pratense");
    CHECK(V(ConceptExpr::conjunction({N("Apple"), ConceptExpr::negation(ConceptExpr::some(R("hasPart"), N("ApplePeel")))})) ==
          "apple (whole or parts) and not something that has part some apple peel");
}

TEST_CASE("named conjuncts keep their relative order") {
    // Same row with the named conjuncts swapped.
    CHECK(V(ConceptExpr::conjunction(
              {ConceptExpr::some(R("derivesFrom"), ConceptExpr::disjunction({N("TimothyPlant"), N("TrifoliumPratense")})),
               N("PlantFoodProd"), N("Silage")})) ==
          "plant food product and silage that derives from some timothy plant or trifolium pratense");
}

TEST_CASE("single restrictions and pure restriction lists") {
    CHECK(V(ConceptExpr::some(R("partOf"), N("Luteolysis"))) == "something that is part of some lutelysis");
    CHECK(V(ConceptExpr::only(R("partOf"), N("Luteolysis"))) == "something that is part of only lutelysis");
    CHECK(V(ConceptExpr::conjunction({ConceptExpr::some(R("partOf"), N("Luteolysis")),
                                      ConceptExpr::only(R("hasPart"), N("ApplePeel"))})) ==
          "something that is part of some lutelysis and has part only apple peel");
    CHECK(V(ConceptExpr::disjunction({ConceptExpr::some(R("partOf"), N("Luteolysis")),
                                      ConceptExpr::some(R("hasPart"), N("ApplePeel"))})) ==
          "something that is part of some lutelysis or has part some apple peel");
}

TEST_CASE("restrictions are merged before verbalising") {
    CHECK(V(ConceptExpr::conjunction({N("Silage"), ConceptExpr::some(R("derivesFrom"), N("TimothyPlant")),
                                      ConceptExpr::some(R("derivesFrom"), N("TrifoliumPratense"))})) ==
          "silage that derives from some timothy plant and trifolium pratense");
}

TEST_CASE("named lists and mixed disjunctions") {
    CHECK(V(ConceptExpr::conjunction({N("Silage"), N("PlantFoodProd")})) == "silage and plant food product");
    CHECK(V(ConceptExpr::disjunction({N("Silage"), N("PlantFoodProd")})) == "silage or plant food product");
    CHECK(V(ConceptExpr::disjunction({N("Silage"), ConceptExpr::some(R("partOf"), N("Luteolysis"))})) ==
          "silage or something that is part of some lutelysis");
}

TEST_CASE("negation and constants") {
    CHECK(V(ConceptExpr::negation(N("Silage"))) == "not silage");
    CHECK(V(ConceptExpr::top()) == "thing");
    CHECK(V(ConceptExpr::bottom()) == "nothing");
}

TEST_CASE("missing labels raise LabelError") {
    CHECK_THROWS_AS(V(N("Unlabelled")), LabelError);
    CHECK_THROWS_AS(V(ConceptExpr::some(R("noLabel"), N("Silage"))), LabelError);
}

TEST_CASE("property label fix") {
    const auto lex = VerbaliserLexicon::defaults();
    CHECK(fix_property_label("characteristic of", lex) == "is characteristic of");
    CHECK(fix_property_label("realised in", lex) == "is realised in");
    CHECK(fix_property_label("derives from", lex) == "derives from");
    CHECK(fix_property_label("part of", lex) == "is part of");
    CHECK(fix_property_label("has part", lex) == "has part");
    CHECK(fix_property_label("negatively regulates", lex) == "negatively regulates");
    CHECK(fix_property_label("located in", lex) == "is located in");
    CHECK(fix_property_label("often with", lex) == "often with");
    CHECK(fix_property_label("is part of", lex) == "is part of");
    CHECK(fix_property_label(fix_property_label("realised in", lex), lex) == "is realised in");
    CHECK(verbalise_property(R("realisedIn"), golden_labels(), lex) == "is realised in");
    CHECK_THROWS_AS(verbalise_property(R("noLabel"), golden_labels(), lex), LabelError);
}

TEST_CASE("lexicon is overridable") {
    auto lex = VerbaliserLexicon::defaults();
    lex.known_nouns.insert("derives");
    CHECK(fix_property_label("derives from", lex) == "is derives from");
}

TEST_CASE("article") {
    CHECK(article("apple") == "an");
    CHECK(article("something") == "");
    CHECK(article("meat") == "a");
    CHECK(article("Orange juice") == "an");
}

TEST_CASE("verbalisation never leaks symbols or IRIs and keeps every label") {
    std::mt19937_64 rng(9);
    oracle::Signature sig{{Iri(kNs + "Silage"), Iri(kNs + "Apple"), Iri(kNs + "fucose"), Iri(kNs + "Luteolysis")},
                          {Iri(kNs + "partOf"), Iri(kNs + "hasPart"), Iri(kNs + "derivesFrom")}};
    const auto lex = VerbaliserLexicon::defaults();
    for (int i = 0; i < 500; ++i) {
        auto e = oracle::random_expr(rng, sig, 3, false);
        auto text = V(e);
        CHECK(V(e) == text);
        for (const char* sym : {"⊓", "⊔", "∃", "∀", "¬", "http", "  "}) CHECK(text.find(sym) == std::string::npos);
        for (const auto& a : atomic_occurrences(e))
            CHECK(text.find(golden_labels().at(a).front()) != std::string::npos);
        for (const auto& p : property_occurrences(e))
            CHECK(text.find(golden_labels().at(p).front()) != std::string::npos);
    }
}
