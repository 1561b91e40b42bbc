#include "ontoforge/concept.hpp"

#include <stdexcept>

namespace ontoforge {

Iri::Iri(std::string value) : value_(std::move(value)) {
    if (value_.empty()) throw std::invalid_argument("IRI must be non-empty");
}

std::string_view Iri::local_name() const noexcept {
    std::string_view v = value_;
    auto pos = v.find_last_of("#/:");
    if (pos == std::string_view::npos || pos + 1 == v.size()) return v;
    return v.substr(pos + 1);
}

std::string_view kind_name(ConceptKind kind) noexcept {
    switch (kind) {
        case ConceptKind::Atomic: return "Atomic";
        case ConceptKind::Top: return "Top";
        case ConceptKind::Bottom: return "Bottom";
        case ConceptKind::Not: return "Not";
        case ConceptKind::And: return "And";
        case ConceptKind::Or: return "Or";
        case ConceptKind::Exists: return "Exists";
        case ConceptKind::Forall: return "Forall";
    }
    return "?";
}

ConceptExpr ConceptExpr::atomic(Iri iri) {
    if (iri.empty()) throw std::invalid_argument("atomic concept needs an IRI");
    return ConceptExpr(ConceptKind::Atomic, std::move(iri), {});
}

ConceptExpr ConceptExpr::top() { return ConceptExpr(ConceptKind::Top, Iri(), {}); }

ConceptExpr ConceptExpr::bottom() { return ConceptExpr(ConceptKind::Bottom, Iri(), {}); }

ConceptExpr ConceptExpr::negation(ConceptExpr operand) {
    std::vector<ConceptExpr> ops;
    ops.push_back(std::move(operand));
    return ConceptExpr(ConceptKind::Not, Iri(), std::move(ops));
}

ConceptExpr ConceptExpr::conjunction(std::vector<ConceptExpr> operands) {
    if (operands.size() < 2) throw std::invalid_argument("And needs at least two operands");
    return ConceptExpr(ConceptKind::And, Iri(), std::move(operands));
}

ConceptExpr ConceptExpr::disjunction(std::vector<ConceptExpr> operands) {
    if (operands.size() < 2) throw std::invalid_argument("Or needs at least two operands");
    return ConceptExpr(ConceptKind::Or, Iri(), std::move(operands));
}

ConceptExpr ConceptExpr::some(PropertyExpr property, ConceptExpr filler) {
    if (property.iri.empty()) throw std::invalid_argument("restriction needs a property");
    std::vector<ConceptExpr> ops;
    ops.push_back(std::move(filler));
    return ConceptExpr(ConceptKind::Exists, std::move(property.iri), std::move(ops));
}

ConceptExpr ConceptExpr::only(PropertyExpr property, ConceptExpr filler) {
    if (property.iri.empty()) throw std::invalid_argument("restriction needs a property");
    std::vector<ConceptExpr> ops;
    ops.push_back(std::move(filler));
    return ConceptExpr(ConceptKind::Forall, std::move(property.iri), std::move(ops));
}

const Iri& ConceptExpr::iri() const {
    if (kind_ != ConceptKind::Atomic) throw std::logic_error("iri() on non-atomic concept");
    return iri_;
}

PropertyExpr ConceptExpr::property() const {
    if (!is_restriction()) throw std::logic_error("property() on non-restriction");
    return PropertyExpr{iri_};
}

const ConceptExpr& ConceptExpr::operand() const {
    if (kind_ != ConceptKind::Not && !is_restriction())
        throw std::logic_error("operand() on node without a single operand");
    return operands_.front();
}

std::size_t ConceptExpr::size() const noexcept {
    std::size_t n = 1;
    for (const auto& op : operands_) n += op.size();
    return n;
}

std::strong_ordering operator<=>(const ConceptExpr& a, const ConceptExpr& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.iri_ <=> b.iri_; c != 0) return c;
    const auto n = std::min(a.operands_.size(), b.operands_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a.operands_[i] <=> b.operands_[i]; c != 0) return c;
    }
    return a.operands_.size() <=> b.operands_.size();
}

namespace {

void collect_atoms(const ConceptExpr& e, std::vector<Iri>& out) {
    if (e.is_atomic()) out.push_back(e.iri());
    for (const auto& op : e.operands()) collect_atoms(op, out);
}

void collect_properties(const ConceptExpr& e, std::vector<Iri>& out) {
    if (e.is_restriction()) out.push_back(e.property().iri);
    for (const auto& op : e.operands()) collect_properties(op, out);
}

// Rebuilds `e` with the counter-th matching occurrence replaced. `counter`
// counts down as occurrences are visited in pre-order.
ConceptExpr rebuild(const ConceptExpr& e, std::size_t& counter, const Iri& replacement,
                    bool properties) {
    switch (e.kind()) {
        case ConceptKind::Atomic:
            if (!properties && counter-- == 0) return ConceptExpr::atomic(replacement);
            return e;
        case ConceptKind::Top:
        case ConceptKind::Bottom:
            return e;
        case ConceptKind::Not:
            return ConceptExpr::negation(rebuild(e.operand(), counter, replacement, properties));
        case ConceptKind::And:
        case ConceptKind::Or: {
            std::vector<ConceptExpr> ops;
            ops.reserve(e.operands().size());
            for (const auto& op : e.operands())
                ops.push_back(rebuild(op, counter, replacement, properties));
            return e.kind() == ConceptKind::And ? ConceptExpr::conjunction(std::move(ops))
                                                : ConceptExpr::disjunction(std::move(ops));
        }
        case ConceptKind::Exists:
        case ConceptKind::Forall: {
            PropertyExpr prop = e.property();
            if (properties && counter-- == 0) prop = PropertyExpr{replacement};
            auto filler = rebuild(e.operand(), counter, replacement, properties);
            return e.kind() == ConceptKind::Exists ? ConceptExpr::some(prop, std::move(filler))
                                                   : ConceptExpr::only(prop, std::move(filler));
        }
    }
    return e;
}

}  // namespace

std::vector<Iri> atomic_occurrences(const ConceptExpr& expr) {
    std::vector<Iri> out;
    collect_atoms(expr, out);
    return out;
}

std::vector<Iri> property_occurrences(const ConceptExpr& expr) {
    std::vector<Iri> out;
    collect_properties(expr, out);
    return out;
}

ConceptExpr replace_atomic_occurrence(const ConceptExpr& expr, std::size_t index,
                                      const Iri& replacement) {
    if (index >= atomic_occurrences(expr).size())
        throw std::out_of_range("replace_atomic_occurrence: index " + std::to_string(index) + " out of range");
    std::size_t counter = index;
    return rebuild(expr, counter, replacement, false);
}

ConceptExpr replace_property_occurrence(const ConceptExpr& expr, std::size_t index,
                                        const Iri& replacement) {
    if (index >= property_occurrences(expr).size())
        throw std::out_of_range("replace_property_occurrence: index " + std::to_string(index) + " out of range");
    std::size_t counter = index;
    return rebuild(expr, counter, replacement, true);
}

}  // namespace ontoforge
