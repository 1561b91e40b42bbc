#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontoforge/ontology.hpp"

namespace ontoforge {

/// `pattern` is searched in the label; on a match the label becomes the
/// text of capture group `keep` (0 = whole match). ECMAScript dialect, which
/// covers the Perl-compatible subset used by the presets.
struct RegexRewrite {
    std::string pattern;
    std::size_t keep = 1;
};

struct PreprocessConfig {
    bool remove_deprecated = true;
    bool lowercase_labels = true;
    bool strip_underscores = true;
    bool camel_case_split = false;
    std::vector<RegexRewrite> regex_rewrites;
    std::set<Iri> concept_blocklist;

    static PreprocessConfig from_json_text(std::string_view text);
    static PreprocessConfig load(const std::filesystem::path& path);
};

struct PruneWarning {
    Iri iri;
    std::string reason;  // "deprecated" or "blocklisted"
};

struct PruneResult {
    Ontology ontology;
    std::vector<PruneWarning> warnings;  // one per removed concept
};

/// Drops deprecated and blocklisted concepts with every axiom mentioning them.
PruneResult prune(const Ontology& onto, const PreprocessConfig& cfg);

/// Regex rewrites (first match wins), camel-case split, lowercasing,
/// underscore removal, whitespace trim, in that order. Throws LabelError
/// when nothing usable is left.
std::string normalise_label(std::string_view raw, const PreprocessConfig& cfg);

/// Splits Java-identifier style names: "APIReference" -> "API Reference".
std::string split_camel_case(std::string_view text);

struct PreprocessResult {
    Ontology ontology;
    std::vector<PruneWarning> warnings;
};

/// prune() followed by normalise_label() on every label. Unusable labels
/// are dropped; an entity left with none gets a "no usable label" warning.
PreprocessResult preprocess(const Ontology& onto, const PreprocessConfig& cfg);

}  // namespace ontoforge
