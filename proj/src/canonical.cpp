#include "ontoforge/canonical.hpp"

#include <array>
#include <string_view>

namespace ontoforge {

namespace {

constexpr std::array<std::string_view, 7> kKeywords = {"and", "or", "not", "some",
                                                       "only", "Thing", "Nothing"};

bool is_plain_name(std::string_view s) {
    if (s.empty()) return false;
    for (auto kw : kKeywords)
        if (s == kw) return false;
    for (char c : s) {
        auto u = static_cast<unsigned char>(c);
        if (u <= 0x20 || c == '(' || c == ')' || c == '<' || c == '>' || c == '"') return false;
    }
    return true;
}

void write(const ConceptExpr& e, std::string& out) {
    switch (e.kind()) {
        case ConceptKind::Atomic:
            out += canonical_name(e.iri());
            return;
        case ConceptKind::Top:
            out += "Thing";
            return;
        case ConceptKind::Bottom:
            out += "Nothing";
            return;
        case ConceptKind::Not:
            out += "(not ";
            write(e.operand(), out);
            out += ')';
            return;
        case ConceptKind::And:
        case ConceptKind::Or: {
            const std::string_view sep = e.kind() == ConceptKind::And ? " and " : " or ";
            out += '(';
            bool first = true;
            for (const auto& op : e.operands()) {
                if (!first) out += sep;
                first = false;
                write(op, out);
            }
            out += ')';
            return;
        }
        case ConceptKind::Exists:
        case ConceptKind::Forall:
            out += '(';
            out += canonical_name(e.property().iri);
            out += e.kind() == ConceptKind::Exists ? " some " : " only ";
            write(e.operand(), out);
            out += ')';
            return;
    }
}

}  // namespace

std::string canonical_name(const Iri& iri) {
    if (is_plain_name(iri.str())) return iri.str();
    return "<" + iri.str() + ">";
}

std::string canonical_form(const ConceptExpr& expr) {
    std::string out;
    write(expr, out);
    return out;
}

std::string pair_key(const ConceptExpr& sub, const ConceptExpr& super) {
    return canonical_form(sub) + "\t" + canonical_form(super);
}

}  // namespace ontoforge
