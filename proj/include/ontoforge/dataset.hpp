#pragma once

// JSONL records for samples. Field order is fixed:
//   sub, super, v_sub, v_super, label, provenance, anchor[, prompt, labels]

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ontoforge/ontology.hpp"
#include "ontoforge/prompt.hpp"
#include "ontoforge/sampler.hpp"
#include "ontoforge/verbaliser.hpp"

namespace ontoforge {

struct DatasetRecord {
    SubsumptionSample sample;
    std::string v_sub;
    std::string v_super;
    std::optional<std::string> prompt;
    std::optional<std::string> labels;
};

DatasetRecord make_record(const SubsumptionSample& sample, const LabelMap& labels,
                          const VerbaliserLexicon& lex);

/// Adds the rendered prompt and label-set id.
void attach_prompt(DatasetRecord& record, const Template& t, LabelSetId labels);

nlohmann::ordered_json to_json(const DatasetRecord& record);
/// Throws std::invalid_argument on a missing or malformed field.
DatasetRecord record_from_json(const nlohmann::json& j);

std::string to_jsonl(const std::vector<DatasetRecord>& records);

/// Parses JSONL text; blank lines are skipped. Throws SyntaxError with the
/// 1-based line number of the first bad line.
std::vector<DatasetRecord> records_from_jsonl(std::string_view text);

std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace ontoforge
