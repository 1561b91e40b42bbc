#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ontoforge/concept.hpp"

namespace ontoforge {

struct SubClassOf {
    ConceptExpr sub;
    ConceptExpr super;
    friend bool operator==(const SubClassOf&, const SubClassOf&) = default;
};

/// Ordered pair. When exactly one side is atomic it is stored first.
struct EquivalentClasses {
    ConceptExpr first;
    ConceptExpr second;
    friend bool operator==(const EquivalentClasses&, const EquivalentClasses&) = default;
};

struct ClassAssertion {
    ConceptExpr type;
    Iri individual;
    friend bool operator==(const ClassAssertion&, const ClassAssertion&) = default;
};

using Axiom = std::variant<SubClassOf, EquivalentClasses, ClassAssertion>;

/// Label texts per entity, ordered by annotation-property precedence.
using LabelMap = std::map<Iri, std::vector<std::string>>;

struct Ontology {
    std::set<Iri> concepts;
    std::set<Iri> properties;
    std::set<Iri> individuals;
    std::vector<Axiom> axioms;
    LabelMap labels;
    /// Entities annotated owl:deprecated true.
    std::set<Iri> deprecated;

    /// First label under the configured precedence, if any.
    std::optional<std::string> display_name(const Iri& iri) const;

    friend bool operator==(const Ontology&, const Ontology&) = default;
};

/// Named concepts and properties mentioned by an axiom.
std::set<Iri> axiom_signature(const Axiom& axiom);

/// Flips an equivalence so that a lone atomic side comes first.
EquivalentClasses normalise_equivalence(ConceptExpr a, ConceptExpr b);

/// Anchor axioms A == C with A a named concept and C complex, in axiom order.
std::vector<EquivalentClasses> definition_anchors(const Ontology& onto);

}  // namespace ontoforge
