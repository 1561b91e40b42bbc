#include "ontoforge/rewrite.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace ontoforge {

namespace {

ConceptExpr make_list(ConceptKind kind, std::vector<ConceptExpr> ops) {
    if (ops.size() == 1) return std::move(ops.front());
    return kind == ConceptKind::And ? ConceptExpr::conjunction(std::move(ops))
                                    : ConceptExpr::disjunction(std::move(ops));
}

ConceptExpr make_restriction(ConceptKind kind, PropertyExpr prop, ConceptExpr filler) {
    return kind == ConceptKind::Exists ? ConceptExpr::some(std::move(prop), std::move(filler))
                                       : ConceptExpr::only(std::move(prop), std::move(filler));
}

struct Slot {
    std::optional<ConceptExpr> plain;  // non-restriction operand
    ConceptKind quantifier = ConceptKind::Exists;
    PropertyExpr property;
    std::vector<ConceptExpr> fillers;
};

ConceptExpr merge_list(ConceptKind kind, const std::vector<ConceptExpr>& operands);

ConceptExpr merge(const ConceptExpr& e) {
    switch (e.kind()) {
        case ConceptKind::Atomic:
        case ConceptKind::Top:
        case ConceptKind::Bottom:
            return e;
        case ConceptKind::Not:
            return ConceptExpr::negation(merge(e.operand()));
        case ConceptKind::Exists:
        case ConceptKind::Forall:
            return make_restriction(e.kind(), e.property(), merge(e.operand()));
        case ConceptKind::And:
        case ConceptKind::Or:
            return merge_list(e.kind(), e.operands());
    }
    return e;
}

ConceptExpr merge_list(ConceptKind kind, const std::vector<ConceptExpr>& operands) {
    std::vector<Slot> slots;
    for (const auto& raw : operands) {
        ConceptExpr op = merge(raw);
        if (!op.is_restriction()) {
            slots.push_back(Slot{std::move(op), {}, {}, {}});
            continue;
        }
        const auto prop = op.property();
        auto it = std::find_if(slots.begin(), slots.end(), [&](const Slot& s) {
            return !s.plain && s.quantifier == op.kind() && s.property == prop;
        });
        if (it == slots.end()) {
            slots.push_back(Slot{std::nullopt, op.kind(), prop, {op.operand()}});
        } else {
            it->fillers.push_back(op.operand());
        }
    }

    std::vector<ConceptExpr> out;
    out.reserve(slots.size());
    for (auto& s : slots) {
        if (s.plain) {
            out.push_back(std::move(*s.plain));
            continue;
        }
        if (s.fillers.size() == 1) {
            out.push_back(make_restriction(s.quantifier, s.property, std::move(s.fillers.front())));
            continue;
        }
        // Fillers join with the connective of the enclosing node; nested
        // lists of the same connective are flattened before re-merging.
        std::vector<ConceptExpr> joined;
        for (auto& f : s.fillers) {
            if (f.kind() == kind) {
                joined.insert(joined.end(), f.operands().begin(), f.operands().end());
            } else {
                joined.push_back(std::move(f));
            }
        }
        out.push_back(
            make_restriction(s.quantifier, s.property, merge_list(kind, joined)));
    }
    return make_list(kind, std::move(out));
}

}  // namespace

ConceptExpr merge_restrictions(const ConceptExpr& expr) { return merge(expr); }

}  // namespace ontoforge
