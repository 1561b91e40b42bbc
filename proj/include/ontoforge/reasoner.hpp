#pragma once

// Told-hierarchy reasoning over an Ontology.
//
// ToldGraph keeps the asserted subsumptions between named concepts (with
// equivalences split into two directions), the complex superclass
// expressions told for each named concept, the complex-to-named axioms,
// and asserted instance types. On top of that it answers a structural
// subsumption test that is sound with respect to description-logic
// semantics but deliberately incomplete: a `true` is always entailed, a
// `false` only means "not derivable by the structural rules".
//
// The graph is immutable after build(). Ancestor/descendant sets are
// memoised lazily under a mutex, so every query is safe to call
// concurrently.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ontoforge/concept.hpp"
#include "ontoforge/ontology.hpp"

namespace ontoforge {

class ToldGraph {
public:
    static ToldGraph build(const Ontology& onto);

    ToldGraph(ToldGraph&&) noexcept;
    ToldGraph& operator=(ToldGraph&&) noexcept;
    ~ToldGraph();

    /// Named concepts, sorted.
    const std::vector<Iri>& nodes() const noexcept;
    bool contains(const Iri& iri) const noexcept;

    /// Told direct parents / children (atomic edges only). Throw UnknownIri.
    std::vector<Iri> parents(const Iri& a) const;
    std::vector<Iri> children(const Iri& a) const;

    /// Complex told superclass expressions of `a` (And unfolded).
    const std::vector<ConceptExpr>& told_supers(const Iri& a) const;

    /// Reflexive-transitive ancestors/descendants along told edges, sorted.
    std::vector<Iri> ancestors(const Iri& a) const;
    std::vector<Iri> descendants(const Iri& a) const;

    /// Individuals with their asserted types.
    const std::map<Iri, std::vector<ConceptExpr>>& instance_types() const noexcept;

    /// `sub<TAB>super` per line for every reachable pair (reflexive pairs
    /// omitted), lexicographically sorted.
    std::string dump_closure() const;

private:
    friend bool entails_named(const ToldGraph&, const Iri&, const Iri&);
    friend class StructuralReasoner;

    struct Impl;
    explicit ToldGraph(std::unique_ptr<Impl> impl);
    std::unique_ptr<Impl> impl_;
};

/// True iff `b` is reachable from `a` (reflexive). Throws UnknownIri.
bool entails_named(const ToldGraph& g, const Iri& a, const Iri& b);

/// Sound, incomplete structural subsumption test sub ⊑ super.
bool entails_structural(const ToldGraph& g, const ConceptExpr& sub, const ConceptExpr& super);

/// Every named A with entails_structural(A, e).
std::set<Iri> named_descendants(const ToldGraph& g, const ConceptExpr& e);

/// Whether `individual` is derivably an instance of `c`.
bool is_instance_of(const ToldGraph& g, const Iri& individual, const ConceptExpr& c);

/// Some named individual derivably belongs to both c and d.
bool common_instance_exists(const ToldGraph& g, const ConceptExpr& c, const ConceptExpr& d);

/// No subsumption either way, no common named instance, no common named
/// descendant.
bool assumed_disjoint(const ToldGraph& g, const ConceptExpr& c, const ConceptExpr& d);

/// Concepts sharing a told direct parent with `a`, excluding `a`.
std::set<Iri> siblings(const ToldGraph& g, const Iri& a);

}  // namespace ontoforge
