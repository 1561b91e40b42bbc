#pragma once

#include "ontoforge/concept.hpp"

namespace ontoforge {

/// Merges same-quantifier, same-property restrictions that are siblings
/// inside an And/Or node: (r some X) and (r some Y) becomes
/// r some (X and Y); inside an Or node the filler becomes (X or Y).
/// Universal restrictions merge the same way. Applied bottom-up, and again
/// inside each newly built filler, so the result is a fixpoint.
///
/// This is a fluency rewrite for verbalisation. It is not
/// equivalence-preserving for existentials under And, nor for universals
/// under Or.
ConceptExpr merge_restrictions(const ConceptExpr& expr);

}  // namespace ontoforge
