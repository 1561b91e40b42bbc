#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ontoforge {

enum class TemplateId { T1, T2 };
enum class LabelSetId { L1, L2, L3 };

struct Template {
    TemplateId id = TemplateId::T1;
    std::string mask_token = "<MASK>";
};

struct LabelWordSet {
    LabelSetId id = LabelSetId::L1;
    std::vector<std::string> positive;
    std::vector<std::string> negative;
};

/// T1: It is <A> {sub}? <MASK>, it is <A> {super}.
/// T2: "It is <A> {sub}"? <MASK>, "it is <A> {super}".
/// Trailing punctuation is stripped from both inputs first. Throws
/// std::invalid_argument if an input is empty or contains the mask token.
std::string render(std::string_view v_sub, std::string_view v_super, const Template& t);

LabelWordSet label_words(LabelSetId id);

/// "T1"/"T2" and "L1".."L3"; throw std::invalid_argument otherwise.
TemplateId parse_template_id(std::string_view text);
LabelSetId parse_label_set_id(std::string_view text);
std::string to_string(TemplateId id);
std::string to_string(LabelSetId id);

std::string strip_trailing_punctuation(std::string_view text);

}  // namespace ontoforge
