#include "ontoforge/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>

#include "json.hpp"

#include "ontoforge/error.hpp"

namespace ontoforge {

PreprocessConfig PreprocessConfig::from_json_text(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("preprocess config: ") + e.what());
    }
    PreprocessConfig cfg;
    cfg.remove_deprecated = j.value("remove_deprecated", cfg.remove_deprecated);
    cfg.lowercase_labels = j.value("lowercase_labels", cfg.lowercase_labels);
    cfg.strip_underscores = j.value("strip_underscores", cfg.strip_underscores);
    cfg.camel_case_split = j.value("camel_case_split", cfg.camel_case_split);
    for (const auto& r : j.value("regex_rewrites", nlohmann::json::array())) {
        RegexRewrite rw{r.at("pattern").get<std::string>(), r.value("keep", std::size_t{1})};
        try {
            std::regex check(rw.pattern);
            if (rw.keep > check.mark_count())
                throw Error("preprocess config: capture group " + std::to_string(rw.keep) +
                            " missing in pattern " + rw.pattern);
        } catch (const std::regex_error& e) {
            throw Error("preprocess config: bad pattern " + rw.pattern + ": " + e.what());
        }
        cfg.regex_rewrites.push_back(std::move(rw));
    }
    for (const auto& iri : j.value("concept_blocklist", nlohmann::json::array()))
        cfg.concept_blocklist.insert(Iri(iri.get<std::string>()));
    return cfg;
}

PreprocessConfig PreprocessConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read preprocess config " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

PruneResult prune(const Ontology& onto, const PreprocessConfig& cfg) {
    PruneResult out;
    std::set<Iri> removed;
    for (const auto& c : onto.concepts) {
        if (cfg.concept_blocklist.count(c)) {
            removed.insert(c);
            out.warnings.push_back({c, "blocklisted"});
        } else if (cfg.remove_deprecated && onto.deprecated.count(c)) {
            removed.insert(c);
            out.warnings.push_back({c, "deprecated"});
        }
    }
    if (removed.empty()) {
        out.ontology = onto;
        return out;
    }

    Ontology& o = out.ontology;
    o.properties = onto.properties;
    o.individuals = onto.individuals;
    for (const auto& c : onto.concepts)
        if (!removed.count(c)) o.concepts.insert(c);
    for (const auto& ax : onto.axioms) {
        auto sig = axiom_signature(ax);
        bool hit = std::any_of(sig.begin(), sig.end(), [&](const Iri& i) { return removed.count(i); });
        if (!hit) o.axioms.push_back(ax);
    }
    for (const auto& [iri, texts] : onto.labels)
        if (!removed.count(iri)) o.labels.emplace(iri, texts);
    for (const auto& d : onto.deprecated)
        if (!removed.count(d)) o.deprecated.insert(d);
    return out;
}

namespace {

const std::regex& compiled(const std::string& pattern) {
    static std::mutex mu;
    static std::map<std::string, std::regex> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(pattern);
    if (it == cache.end()) it = cache.emplace(pattern, std::regex(pattern)).first;
    return it->second;
}

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    bool pending_space = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out += ' ';
        pending_space = false;
        out += c;
    }
    return out;
}

}  // namespace

std::string split_camel_case(std::string_view text) {
    std::string out;
    out.reserve(text.size() + 4);
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (i > 0 && is_upper(c)) {
            char prev = text[i - 1];
            bool lower_to_upper = is_lower(prev) || is_digit(prev);
            bool acronym_end =
                is_upper(prev) && i + 1 < text.size() && is_lower(text[i + 1]);
            if (lower_to_upper || acronym_end) out += ' ';
        }
        out += c;
    }
    return out;
}

std::string normalise_label(std::string_view raw, const PreprocessConfig& cfg) {
    std::string s(raw);
    for (const auto& rw : cfg.regex_rewrites) {
        std::smatch m;
        if (std::regex_search(s, m, compiled(rw.pattern))) {
            s = m[rw.keep].str();
            break;
        }
    }
    if (cfg.camel_case_split) s = split_camel_case(s);
    if (cfg.lowercase_labels)
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (cfg.strip_underscores) std::replace(s.begin(), s.end(), '_', ' ');
    s = collapse_whitespace(s);
    if (s.empty()) throw LabelError("label '" + std::string(raw) + "' is empty after normalisation");
    return s;
}

PreprocessResult preprocess(const Ontology& onto, const PreprocessConfig& cfg) {
    auto pruned = prune(onto, cfg);
    PreprocessResult out{std::move(pruned.ontology), std::move(pruned.warnings)};
    LabelMap normalised;
    for (const auto& [iri, texts] : out.ontology.labels) {
        std::vector<std::string> kept;
        for (const auto& t : texts) {
            try {
                auto n = normalise_label(t, cfg);
                if (std::find(kept.begin(), kept.end(), n) == kept.end()) kept.push_back(std::move(n));
            } catch (const LabelError&) {
            }
        }
        if (kept.empty()) {
            out.warnings.push_back({iri, "no usable label"});
        } else {
            normalised.emplace(iri, std::move(kept));
        }
    }
    out.ontology.labels = std::move(normalised);
    return out;
}

}  // namespace ontoforge
