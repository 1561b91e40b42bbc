#pragma once

// Canonical text form of concept expressions, used for dataset fields and
// deduplication keys:
//
//   atom      := NAME | <IRI> | Thing | Nothing
//   expr      := atom
//              | "(" "not" expr ")"
//              | "(" expr ("and" expr)+ ")"
//              | "(" expr ("or" expr)+ ")"
//              | "(" NAME "some" expr ")"
//              | "(" NAME "only" expr ")"
//
// Every non-atomic node is parenthesised. IRIs that are not plain names
// (or that collide with a keyword) are written in angle brackets.
// parse_concept() in parser.hpp reads this form back.

#include <string>

#include "ontoforge/concept.hpp"

namespace ontoforge {

std::string canonical_form(const ConceptExpr& expr);

/// The token used for an IRI inside canonical text.
std::string canonical_name(const Iri& iri);

/// Dedup key for an ordered (sub, super) pair.
std::string pair_key(const ConceptExpr& sub, const ConceptExpr& super);

}  // namespace ontoforge
