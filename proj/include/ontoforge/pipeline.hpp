#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "ontoforge/parser.hpp"
#include "ontoforge/preprocess.hpp"
#include "ontoforge/prompt.hpp"
#include "ontoforge/sampler.hpp"

namespace ontoforge {

enum class Task { Atomic, Complex };

struct JobConfig {
    std::filesystem::path input;
    /// Preset name (looked up in the preset directory) or path to a JSON file.
    std::string preset = "default";
    Task task = Task::Atomic;
    SplitRatios ratios = SplitRatios::standard();
    std::uint64_t seed = 42;
    std::size_t cap = 4;
    std::vector<std::size_t> k_list;
    TemplateId template_id = TemplateId::T1;
    LabelSetId label_set = LabelSetId::L1;
    std::filesystem::path output_dir = "out";
    bool direct_only = false;
    bool sibling_replacement = true;
    std::size_t attempt_factor = 50;

    nlohmann::ordered_json to_json() const;
    /// Unknown keys are rejected; missing keys keep their defaults.
    static JobConfig from_json(const nlohmann::json& j);
    static JobConfig from_json(const nlohmann::json& j, JobConfig base);
    static JobConfig load(const std::filesystem::path& path);

    /// ONTOFORGE_SEED, when set, replaces the seed.
    void apply_environment();
};

/// Directory searched for named presets: $ONTOFORGE_PRESET_DIR, else the
/// source tree's presets/.
std::filesystem::path preset_directory();
PreprocessConfig resolve_preset(const std::string& preset);

struct LoadedOntology {
    Ontology ontology;
    std::vector<ParseWarning> parse_warnings;
    std::vector<PruneWarning> preprocess_warnings;
};

/// parse_ontology() + preprocess() on a file.
LoadedOntology load_ontology(const std::filesystem::path& path, const PreprocessConfig& cfg,
                             const ParseOptions& opts = {});

/// Every IRI with at least one label: the sampling vocabulary.
std::set<Iri> labelled_vocabulary(const Ontology& onto);

/// Writes train/dev/test JSONL, k-shot subsets, warnings.jsonl and
/// manifest.json under cfg.output_dir. Returns the manifest. Module
/// failures surface as StageError.
nlohmann::ordered_json run(const JobConfig& cfg);

/// Counts per partition, label and provenance, unique concepts, and
/// cross-partition key violations. `path` is a dataset directory (its
/// train/dev/test.jsonl) or a single JSONL file.
nlohmann::ordered_json stats(const std::filesystem::path& path);

std::string to_string(Task task);
Task parse_task(const std::string& text);
/// "8:1:1" or "0.2:0.1:0.7"; normalised to sum to 1.
SplitRatios parse_ratios(const std::string& text);

}  // namespace ontoforge
