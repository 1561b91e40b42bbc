#include "ontoforge/dataset.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ontoforge/canonical.hpp"
#include "ontoforge/error.hpp"
#include "ontoforge/parser.hpp"

namespace ontoforge {

DatasetRecord make_record(const SubsumptionSample& sample, const LabelMap& labels,
                          const VerbaliserLexicon& lex) {
    return DatasetRecord{sample, verbalise(sample.sub, labels, lex),
                         verbalise(sample.super, labels, lex), std::nullopt, std::nullopt};
}

void attach_prompt(DatasetRecord& record, const Template& t, LabelSetId labels) {
    record.prompt = render(record.v_sub, record.v_super, t);
    record.labels = to_string(labels);
}

nlohmann::ordered_json to_json(const DatasetRecord& r) {
    nlohmann::ordered_json j;
    j["sub"] = canonical_form(r.sample.sub);
    j["super"] = canonical_form(r.sample.super);
    j["v_sub"] = r.v_sub;
    j["v_super"] = r.v_super;
    j["label"] = to_string(r.sample.label);
    j["provenance"] = to_string(r.sample.provenance);
    j["anchor"] = r.sample.anchor ? nlohmann::ordered_json(r.sample.anchor->str())
                                  : nlohmann::ordered_json(nullptr);
    if (r.prompt) j["prompt"] = *r.prompt;
    if (r.labels) j["labels"] = *r.labels;
    return j;
}

DatasetRecord record_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("record is not an object");
    auto str = [&](const char* field) {
        auto it = j.find(field);
        if (it == j.end() || !it->is_string())
            throw std::invalid_argument(std::string("missing string field '") + field + "'");
        return it->get<std::string>();
    };
    DatasetRecord r;
    r.sample.sub = parse_concept(str("sub"));
    r.sample.super = parse_concept(str("super"));
    r.v_sub = str("v_sub");
    r.v_super = str("v_super");
    r.sample.label = parse_sample_label(str("label"));
    r.sample.provenance = parse_provenance(str("provenance"));
    auto anchor = j.find("anchor");
    if (anchor != j.end() && anchor->is_string()) r.sample.anchor = Iri(anchor->get<std::string>());
    if (j.contains("prompt")) r.prompt = str("prompt");
    if (j.contains("labels")) r.labels = str("labels");
    return r;
}

std::string to_jsonl(const std::vector<DatasetRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        out += to_json(r).dump();
        out += '\n';
    }
    return out;
}

std::vector<DatasetRecord> records_from_jsonl(std::string_view text) {
    std::vector<DatasetRecord> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        try {
            out.push_back(record_from_json(nlohmann::json::parse(line)));
        } catch (const std::exception& e) {
            throw SyntaxError(std::string("malformed record: ") + e.what(), line_no, 0);
        }
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace ontoforge
