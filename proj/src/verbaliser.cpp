#include "ontoforge/verbaliser.hpp"

#include <algorithm>
#include <cctype>

#include "ontoforge/error.hpp"
#include "ontoforge/rewrite.hpp"

namespace ontoforge {

VerbaliserLexicon VerbaliserLexicon::defaults() {
    VerbaliserLexicon lex;
    lex.known_adjectives = {"adjacent",  "anterior",   "capable",     "characteristic",
                            "dependent", "distal",     "equivalent",  "homologous",
                            "independent", "posterior", "proximal",   "similar"};
    lex.known_nouns = {"agent",   "ancestor",  "bearer",   "cause",     "component",
                       "contributor", "descendant", "disposition", "function", "input",
                       "member",  "output",    "part",     "participant", "precursor",
                       "product", "quality",   "role",     "site",      "source",
                       "substrate"};
    lex.non_passive_words = {"bleed",  "breed", "eleven", "embed",  "even",   "exceed",
                             "feed",   "happen", "listen", "need",  "often",  "open",
                             "proceed", "seed",  "seven",  "speed", "succeed"};
    lex.prepositions = {"about", "at",   "between", "by",   "for",    "from",   "in",
                        "into",  "of",   "on",      "onto", "to",     "via",    "with",
                        "within", "without"};
    return lex;
}

namespace {

std::string_view first_token(std::string_view s) {
    auto start = s.find_first_not_of(' ');
    if (start == std::string_view::npos) return {};
    auto end = s.find(' ', start);
    return s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
}

std::string_view last_token(std::string_view s) {
    auto end = s.find_last_not_of(' ');
    if (end == std::string_view::npos) return {};
    auto start = s.rfind(' ', end);
    start = start == std::string_view::npos ? 0 : start + 1;
    return s.substr(start, end - start + 1);
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

const std::string& label_of(const Iri& iri, const LabelMap& labels, const char* what) {
    auto it = labels.find(iri);
    if (it == labels.end() || it->second.empty())
        throw LabelError(std::string("no label for ") + what + " " + iri.str());
    return it->second.front();
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

class Verbaliser {
public:
    Verbaliser(const LabelMap& labels, const VerbaliserLexicon& lex) : labels_(labels), lex_(lex) {}

    std::string phrase(const ConceptExpr& e) const {
        switch (e.kind()) {
            case ConceptKind::Atomic:
                return label_of(e.iri(), labels_, "concept");
            case ConceptKind::Top:
                return "thing";
            case ConceptKind::Bottom:
                return "nothing";
            case ConceptKind::Not:
                return "not " + phrase(e.operand());
            case ConceptKind::Exists:
            case ConceptKind::Forall:
                return "something that " + clause(e);
            case ConceptKind::And:
            case ConceptKind::Or:
                return list(e);
        }
        throw Error("unsupported construct " + std::string(kind_name(e.kind())));
    }

private:
    // "V(r) some V(C)" without the leading "something that".
    std::string clause(const ConceptExpr& e) const {
        const char* quantifier = e.kind() == ConceptKind::Exists ? " some " : " only ";
        return verbalise_property(e.property(), labels_, lex_) + quantifier + phrase(e.operand());
    }

    std::string list(const ConceptExpr& e) const {
        const bool conj = e.kind() == ConceptKind::And;
        const std::string_view sep = conj ? " and " : " or ";
        std::vector<std::string> named;
        std::vector<std::string> clauses;
        for (const auto& op : e.operands()) {
            if (op.is_restriction()) {
                clauses.push_back(clause(op));
            } else {
                named.push_back(phrase(op));
            }
        }
        if (named.empty()) return "something that " + join(clauses, sep);
        if (clauses.empty()) return join(named, sep);
        if (!conj) {
            // Mixed disjunction: every disjunct verbalised on its own, in order.
            std::vector<std::string> all;
            for (const auto& op : e.operands()) all.push_back(phrase(op));
            return join(all, sep);
        }
        std::string antecedent = join(named, sep);
        if (lex_.prepositions.count(lower(last_token(antecedent)))) antecedent += " something";
        return antecedent + " that " + join(clauses, sep);
    }

    const LabelMap& labels_;
    const VerbaliserLexicon& lex_;
};

}  // namespace

std::string fix_property_label(std::string_view label, const VerbaliserLexicon& lex) {
    const std::string head = lower(first_token(label));
    std::string text(label);
    if (head.empty() || head == lex.is_prefix) return text;
    bool prepend = lex.known_adjectives.count(head) || lex.known_nouns.count(head);
    if (!prepend && !lex.non_passive_words.count(head)) {
        prepend = std::any_of(lex.passive_verb_suffixes.begin(), lex.passive_verb_suffixes.end(),
                              [&](const std::string& s) {
                                  return ends_with(head, s) && head.size() >= s.size() + 3;
                              });
    }
    return prepend ? lex.is_prefix + " " + text : text;
}

std::string verbalise_property(const PropertyExpr& property, const LabelMap& labels,
                               const VerbaliserLexicon& lex) {
    return fix_property_label(label_of(property.iri, labels, "property"), lex);
}

std::string article(std::string_view next_word) {
    auto word = first_token(next_word);
    if (lower(word) == "something") return "";
    if (!word.empty()) {
        char c = static_cast<char>(std::tolower(static_cast<unsigned char>(word.front())));
        if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return "an";
    }
    return "a";
}

std::string verbalise(const ConceptExpr& expr, const LabelMap& labels,
                      const VerbaliserLexicon& lex) {
    return Verbaliser(labels, lex).phrase(merge_restrictions(expr));
}

}  // namespace ontoforge
