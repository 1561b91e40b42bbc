#include "ontoforge/prompt.hpp"

#include <stdexcept>

#include "ontoforge/verbaliser.hpp"

namespace ontoforge {

std::string strip_trailing_punctuation(std::string_view text) {
    auto end = text.find_last_not_of(" \t\r\n.,;:!?");
    if (end == std::string_view::npos) return {};
    auto start = text.find_first_not_of(" \t\r\n");
    return std::string(text.substr(start, end - start + 1));
}

namespace {

// "It is a meat" / "it is something that ..." with the blank article
// collapsing its space.
std::string clause(std::string_view lead, const std::string& text) {
    std::string a = article(text);
    std::string out(lead);
    out += ' ';
    if (!a.empty()) {
        out += a;
        out += ' ';
    }
    out += text;
    return out;
}

}  // namespace

std::string render(std::string_view v_sub, std::string_view v_super, const Template& t) {
    auto premise = strip_trailing_punctuation(v_sub);
    auto hypothesis = strip_trailing_punctuation(v_super);
    if (premise.empty() || hypothesis.empty())
        throw std::invalid_argument("render: empty premise or hypothesis");
    if (premise.find(t.mask_token) != std::string::npos ||
        hypothesis.find(t.mask_token) != std::string::npos)
        throw std::invalid_argument("render: input contains the mask token");

    auto p = clause("It is", premise);
    auto h = clause("it is", hypothesis);
    if (t.id == TemplateId::T1) return p + "? " + t.mask_token + ", " + h + ".";
    return "\"" + p + "\"? " + t.mask_token + ", \"" + h + "\".";
}

LabelWordSet label_words(LabelSetId id) {
    switch (id) {
        case LabelSetId::L1: return {id, {"Yes"}, {"No"}};
        case LabelSetId::L2: return {id, {"Right"}, {"Wrong"}};
        case LabelSetId::L3: return {id, {"Yes", "Right"}, {"No", "Wrong"}};
    }
    throw std::invalid_argument("unknown label set");
}

TemplateId parse_template_id(std::string_view text) {
    if (text == "T1") return TemplateId::T1;
    if (text == "T2") return TemplateId::T2;
    throw std::invalid_argument("unknown template id: " + std::string(text));
}

LabelSetId parse_label_set_id(std::string_view text) {
    if (text == "L1") return LabelSetId::L1;
    if (text == "L2") return LabelSetId::L2;
    if (text == "L3") return LabelSetId::L3;
    throw std::invalid_argument("unknown label set id: " + std::string(text));
}

std::string to_string(TemplateId id) { return id == TemplateId::T1 ? "T1" : "T2"; }

std::string to_string(LabelSetId id) {
    switch (id) {
        case LabelSetId::L1: return "L1";
        case LabelSetId::L2: return "L2";
        case LabelSetId::L3: return "L3";
    }
    return "?";
}

}  // namespace ontoforge
