#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ontoforge/concept.hpp"
#include "ontoforge/ontology.hpp"

namespace ontoforge {

inline constexpr std::string_view kRdfsLabel = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view kOwlDeprecated = "http://www.w3.org/2002/07/owl#deprecated";
inline constexpr std::string_view kHasSynonym =
    "http://www.geneontology.org/formats/oboInOwl#hasSynonym";
inline constexpr std::string_view kHasExactSynonym =
    "http://www.geneontology.org/formats/oboInOwl#hasExactSynonym";

enum class OnUnsupported { SkipWithWarning, Fail };

struct ParseOptions {
    OnUnsupported on_unsupported = OnUnsupported::SkipWithWarning;
    /// Seeded with owl, rdf, rdfs, xsd and oboInOwl; document Prefix()
    /// declarations are added on top.
    std::map<std::string, std::string> curie_prefixes = default_prefixes();
    /// Annotation properties that carry names, highest precedence first.
    std::vector<std::string> label_properties = {std::string(kRdfsLabel),
                                                 std::string(kHasSynonym),
                                                 std::string(kHasExactSynonym)};

    static std::map<std::string, std::string> default_prefixes();
};

struct ParseWarning {
    std::size_t line = 0;
    std::string construct;

    friend bool operator==(const ParseWarning&, const ParseWarning&) = default;
};

struct ParseResult {
    Ontology ontology;
    std::vector<ParseWarning> warnings;
};

/// Reads an OWL 2 functional-style document restricted to the supported
/// fragment. Axioms outside it are skipped with a warning, or raise
/// UnsupportedConstruct under OnUnsupported::Fail. Malformed text raises
/// SyntaxError.
ParseResult parse_ontology(std::string_view text, const ParseOptions& opts = {});

/// Reads the canonical form written by canonical_form().
ConceptExpr parse_concept(std::string_view text);

/// One `{"line": N, "construct": "..."}` object per line.
std::string warnings_to_jsonl(const std::vector<ParseWarning>& warnings);

}  // namespace ontoforge
