#pragma once

// Concept-expression AST for the supported description-logic fragment:
// named concepts, top/bottom, complement, n-ary intersection and union,
// and existential/universal restrictions over named object properties.
//
// Expressions are plain values. Operand lists of And/Or keep insertion
// order because verbalisation output follows it.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace ontoforge {

class Iri {
public:
    Iri() = default;
    explicit Iri(std::string value);

    const std::string& str() const noexcept { return value_; }
    bool empty() const noexcept { return value_.empty(); }

    /// Text after the last '#', '/' or ':'; the whole IRI if none.
    std::string_view local_name() const noexcept;

    friend bool operator==(const Iri&, const Iri&) = default;
    friend std::strong_ordering operator<=>(const Iri&, const Iri&) = default;

private:
    std::string value_;
};

struct IriHash {
    std::size_t operator()(const Iri& iri) const noexcept {
        return std::hash<std::string>{}(iri.str());
    }
};

struct PropertyExpr {
    Iri iri;

    friend bool operator==(const PropertyExpr&, const PropertyExpr&) = default;
    friend std::strong_ordering operator<=>(const PropertyExpr&, const PropertyExpr&) = default;
};

enum class ConceptKind : std::uint8_t { Atomic, Top, Bottom, Not, And, Or, Exists, Forall };

std::string_view kind_name(ConceptKind kind) noexcept;

class ConceptExpr {
public:
    /// Default value is Top.
    ConceptExpr() = default;

    static ConceptExpr atomic(Iri iri);
    static ConceptExpr atomic(std::string iri) { return atomic(Iri(std::move(iri))); }
    static ConceptExpr top();
    static ConceptExpr bottom();
    static ConceptExpr negation(ConceptExpr operand);
    /// Throws std::invalid_argument for fewer than two operands.
    static ConceptExpr conjunction(std::vector<ConceptExpr> operands);
    static ConceptExpr disjunction(std::vector<ConceptExpr> operands);
    static ConceptExpr some(PropertyExpr property, ConceptExpr filler);
    static ConceptExpr only(PropertyExpr property, ConceptExpr filler);

    ConceptKind kind() const noexcept { return kind_; }
    bool is_atomic() const noexcept { return kind_ == ConceptKind::Atomic; }
    bool is_restriction() const noexcept {
        return kind_ == ConceptKind::Exists || kind_ == ConceptKind::Forall;
    }
    bool is_named_or_constant() const noexcept {
        return kind_ == ConceptKind::Atomic || kind_ == ConceptKind::Top ||
               kind_ == ConceptKind::Bottom;
    }

    /// Named concept IRI; valid only for Atomic.
    const Iri& iri() const;
    /// Restricted property; valid only for Exists/Forall.
    PropertyExpr property() const;
    /// Operand of Not, filler of Exists/Forall.
    const ConceptExpr& operand() const;
    /// Operands of And/Or (one element for Not/Exists/Forall, none otherwise).
    const std::vector<ConceptExpr>& operands() const noexcept { return operands_; }

    /// Total number of nodes in the tree.
    std::size_t size() const noexcept;

    friend bool operator==(const ConceptExpr&, const ConceptExpr&) = default;
    friend std::strong_ordering operator<=>(const ConceptExpr& a, const ConceptExpr& b);

private:
    ConceptExpr(ConceptKind kind, Iri iri, std::vector<ConceptExpr> operands)
        : kind_(kind), iri_(std::move(iri)), operands_(std::move(operands)) {}

    ConceptKind kind_ = ConceptKind::Top;
    Iri iri_;  // concept for Atomic, property for Exists/Forall
    std::vector<ConceptExpr> operands_;
};

/// Named concepts in pre-order, with repetitions.
std::vector<Iri> atomic_occurrences(const ConceptExpr& expr);
/// Properties in pre-order, with repetitions.
std::vector<Iri> property_occurrences(const ConceptExpr& expr);

/// Structural rewrite: replace the n-th named-concept occurrence (pre-order).
ConceptExpr replace_atomic_occurrence(const ConceptExpr& expr, std::size_t index,
                                      const Iri& replacement);
/// Structural rewrite: replace the n-th property occurrence (pre-order).
ConceptExpr replace_property_occurrence(const ConceptExpr& expr, std::size_t index,
                                        const Iri& replacement);

}  // namespace ontoforge
