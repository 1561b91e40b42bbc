#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontoforge/concept.hpp"
#include "ontoforge/ontology.hpp"

namespace ontoforge {

/// Word lists behind the rule-based part-of-speech decisions. All entries
/// are lowercase.
struct VerbaliserLexicon {
    /// A first token ending in one of these (and longer than the suffix by
    /// at least three letters) is read as a passive participle.
    std::vector<std::string> passive_verb_suffixes = {"ed", "en"};
    std::set<std::string> known_adjectives;
    std::set<std::string> known_nouns;
    /// Participle-looking words that are not passive verbs ("often", "seven").
    std::set<std::string> non_passive_words;
    /// A named antecedent ending in one of these keeps its "something"
    /// ("concentration of something that ...").
    std::set<std::string> prepositions;
    std::string is_prefix = "is";

    static VerbaliserLexicon defaults();
};

/// Property label with the copula fix: "part of" -> "is part of".
/// Throws LabelError when the property has no label.
std::string verbalise_property(const PropertyExpr& property, const LabelMap& labels,
                               const VerbaliserLexicon& lex);

/// Same rule on a bare label.
std::string fix_property_label(std::string_view label, const VerbaliserLexicon& lex);

/// Indefinite article for the word that follows: "an", "a", or "" before
/// "something".
std::string article(std::string_view next_word);

/// Natural-language rendering of a concept expression. Restrictions are
/// merged first. Throws LabelError for a concept or property without a label.
std::string verbalise(const ConceptExpr& expr, const LabelMap& labels,
                      const VerbaliserLexicon& lex);

}  // namespace ontoforge
