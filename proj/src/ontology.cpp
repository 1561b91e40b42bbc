#include "ontoforge/ontology.hpp"

namespace ontoforge {

std::optional<std::string> Ontology::display_name(const Iri& iri) const {
    auto it = labels.find(iri);
    if (it == labels.end() || it->second.empty()) return std::nullopt;
    return it->second.front();
}

namespace {

void add_signature(const ConceptExpr& e, std::set<Iri>& out) {
    for (auto& iri : atomic_occurrences(e)) out.insert(iri);
    for (auto& iri : property_occurrences(e)) out.insert(iri);
}

}  // namespace

std::set<Iri> axiom_signature(const Axiom& axiom) {
    std::set<Iri> out;
    std::visit(
        [&](const auto& ax) {
            using T = std::decay_t<decltype(ax)>;
            if constexpr (std::is_same_v<T, SubClassOf>) {
                add_signature(ax.sub, out);
                add_signature(ax.super, out);
            } else if constexpr (std::is_same_v<T, EquivalentClasses>) {
                add_signature(ax.first, out);
                add_signature(ax.second, out);
            } else {
                add_signature(ax.type, out);
                out.insert(ax.individual);
            }
        },
        axiom);
    return out;
}

EquivalentClasses normalise_equivalence(ConceptExpr a, ConceptExpr b) {
    if (!a.is_atomic() && b.is_atomic()) return EquivalentClasses{std::move(b), std::move(a)};
    return EquivalentClasses{std::move(a), std::move(b)};
}

std::vector<EquivalentClasses> definition_anchors(const Ontology& onto) {
    std::vector<EquivalentClasses> out;
    for (const auto& ax : onto.axioms) {
        const auto* eq = std::get_if<EquivalentClasses>(&ax);
        if (eq == nullptr) continue;
        if (eq->first.is_atomic() && !eq->second.is_named_or_constant()) out.push_back(*eq);
    }
    return out;
}

}  // namespace ontoforge
