#include "ontoforge/pipeline.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

#include "ontoforge/canonical.hpp"
#include "ontoforge/dataset.hpp"
#include "ontoforge/error.hpp"
#include "ontoforge/reasoner.hpp"

#ifndef ONTOFORGE_PRESET_DIR
#define ONTOFORGE_PRESET_DIR "presets"
#endif

namespace ontoforge {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

std::string to_string(Task task) { return task == Task::Atomic ? "atomic" : "complex"; }

Task parse_task(const std::string& text) {
    if (text == "atomic") return Task::Atomic;
    if (text == "complex") return Task::Complex;
    throw std::invalid_argument("unknown task: " + text);
}

namespace {

SplitRatios normalised_ratios(double train, double dev, double test) {
    const double sum = train + dev + test;
    if (sum <= 0 || train < 0 || dev < 0 || test < 0) throw std::invalid_argument("bad split ratios");
    return {train / sum, dev / sum, test / sum};
}

}  // namespace

SplitRatios parse_ratios(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad ratios '" + text + "'");
        }
    }
    if (parts.size() != 3) throw std::invalid_argument("ratios need three parts: '" + text + "'");
    return normalised_ratios(parts[0], parts[1], parts[2]);
}

ojson JobConfig::to_json() const {
    ojson j;
    j["input"] = input.string();
    j["preset"] = preset;
    j["task"] = to_string(task);
    j["ratios"] = {ratios.train, ratios.dev, ratios.test};
    j["seed"] = seed;
    j["cap"] = cap;
    j["k_list"] = k_list;
    j["template"] = to_string(template_id);
    j["labels"] = to_string(label_set);
    j["output_dir"] = output_dir.string();
    j["direct_only"] = direct_only;
    j["sibling_replacement"] = sibling_replacement;
    j["attempt_factor"] = attempt_factor;
    return j;
}

JobConfig JobConfig::from_json(const nlohmann::json& j) { return from_json(j, JobConfig{}); }

JobConfig JobConfig::from_json(const nlohmann::json& j, JobConfig cfg) {
    if (!j.is_object()) throw Error("job config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "input") {
            cfg.input = value.get<std::string>();
        } else if (key == "preset") {
            cfg.preset = value.get<std::string>();
        } else if (key == "task") {
            cfg.task = parse_task(value.get<std::string>());
        } else if (key == "ratios") {
            if (value.is_string()) {
                cfg.ratios = parse_ratios(value.get<std::string>());
            } else {
                auto r = value.get<std::vector<double>>();
                if (r.size() != 3) throw Error("ratios needs three numbers");
                cfg.ratios = normalised_ratios(r[0], r[1], r[2]);
            }
        } else if (key == "seed") {
            cfg.seed = value.get<std::uint64_t>();
        } else if (key == "cap") {
            cfg.cap = value.get<std::size_t>();
        } else if (key == "k_list") {
            cfg.k_list = value.get<std::vector<std::size_t>>();
        } else if (key == "template") {
            cfg.template_id = parse_template_id(value.get<std::string>());
        } else if (key == "labels") {
            cfg.label_set = parse_label_set_id(value.get<std::string>());
        } else if (key == "output_dir") {
            cfg.output_dir = value.get<std::string>();
        } else if (key == "direct_only") {
            cfg.direct_only = value.get<bool>();
        } else if (key == "sibling_replacement") {
            cfg.sibling_replacement = value.get<bool>();
        } else if (key == "attempt_factor") {
            cfg.attempt_factor = value.get<std::size_t>();
        } else {
            throw Error("unknown job config key: " + key);
        }
    }
    return cfg;
}

JobConfig JobConfig::load(const fs::path& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw Error("job config " + path.string() + ": " + e.what());
    }
    auto cfg = from_json(j);
    // Relative paths in a config file are relative to the file.
    const auto base = path.parent_path();
    if (!cfg.input.empty() && cfg.input.is_relative()) cfg.input = base / cfg.input;
    if (cfg.output_dir.is_relative()) cfg.output_dir = base / cfg.output_dir;
    return cfg;
}

void JobConfig::apply_environment() {
    if (const char* s = std::getenv("ONTOFORGE_SEED"); s != nullptr && *s != '\0') {
        try {
            std::size_t used = 0;
            seed = std::stoull(s, &used);
            if (s[used] != '\0') throw std::invalid_argument(s);
        } catch (const std::exception&) {
            throw Error(std::string("ONTOFORGE_SEED is not an unsigned integer: ") + s);
        }
    }
}

fs::path preset_directory() {
    if (const char* d = std::getenv("ONTOFORGE_PRESET_DIR"); d != nullptr && *d != '\0') return d;
    return ONTOFORGE_PRESET_DIR;
}

PreprocessConfig resolve_preset(const std::string& preset) {
    fs::path p(preset);
    if (fs::is_regular_file(p)) return PreprocessConfig::load(p);
    auto named = preset_directory() / (preset + ".json");
    if (fs::is_regular_file(named)) return PreprocessConfig::load(named);
    throw Error("unknown preprocess preset '" + preset + "'");
}

LoadedOntology load_ontology(const fs::path& path, const PreprocessConfig& cfg,
                             const ParseOptions& opts) {
    auto parsed = parse_ontology(read_file(path), opts);
    auto pre = preprocess(parsed.ontology, cfg);
    return {std::move(pre.ontology), std::move(parsed.warnings), std::move(pre.warnings)};
}

std::set<Iri> labelled_vocabulary(const Ontology& onto) {
    std::set<Iri> out;
    for (const auto& [iri, texts] : onto.labels)
        if (!texts.empty()) out.insert(iri);
    return out;
}

namespace {

std::string fnv1a_hex(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

template <typename F>
auto stage(const char* name, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(name, e.what());
    }
}

ojson label_counts(const std::vector<DatasetRecord>& records) {
    std::size_t pos = 0;
    for (const auto& r : records)
        if (r.sample.label == SampleLabel::Positive) ++pos;
    ojson j;
    j["total"] = records.size();
    j["positive"] = pos;
    j["negative"] = records.size() - pos;
    return j;
}

std::vector<DatasetRecord> to_records(const std::vector<SubsumptionSample>& samples,
                                      const Ontology& onto, const JobConfig& cfg,
                                      const VerbaliserLexicon& lex) {
    const Template t{cfg.template_id, "<MASK>"};
    std::vector<DatasetRecord> out;
    out.reserve(samples.size());
    for (const auto& s : samples) {
        auto r = stage("verbalise", [&] { return make_record(s, onto.labels, lex); });
        stage("render", [&] {
            attach_prompt(r, t, cfg.label_set);
            return 0;
        });
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

ojson run(const JobConfig& cfg) {
    const auto preprocess_cfg = stage("preprocess", [&] { return resolve_preset(cfg.preset); });
    const auto loaded = stage("parse", [&] { return load_ontology(cfg.input, preprocess_cfg); });
    const Ontology& onto = loaded.ontology;
    const auto graph = stage("reason", [&] { return ToldGraph::build(onto); });

    SamplerOptions opts;
    opts.vocabulary = labelled_vocabulary(onto);
    opts.direct_only = cfg.direct_only;
    opts.sibling_replacement = cfg.sibling_replacement;
    opts.attempt_factor = cfg.attempt_factor;

    Rng rng(cfg.seed);
    std::vector<SamplerWarning> sampler_warnings;
    auto samples = stage("sample", [&] {
        if (cfg.task == Task::Atomic) {
            auto pos = positive_atomic(graph, rng, opts);
            if (pos.empty()) throw SamplingError("no entailed atomic subsumptions");
            auto neg = negative_atomic(graph, rng, pos.size(), opts);
            pos.insert(pos.end(), neg.begin(), neg.end());
            return pos;
        }
        return complex_samples(graph, onto, rng, cfg.cap, opts, &sampler_warnings);
    });
    const auto parts = stage("split", [&] { return split(std::move(samples), cfg.ratios, rng); });

    const auto lex = VerbaliserLexicon::defaults();
    const std::map<std::string, std::vector<DatasetRecord>> partitions = {
        {"train", to_records(parts.train, onto, cfg, lex)},
        {"dev", to_records(parts.dev, onto, cfg, lex)},
        {"test", to_records(parts.test, onto, cfg, lex)},
    };

    ojson manifest;
    manifest["task"] = to_string(cfg.task);
    manifest["seed"] = cfg.seed;
    // The output location does not affect content, so it stays out of the hash.
    auto hashed = cfg.to_json();
    hashed.erase("output_dir");
    manifest["config_hash"] = fnv1a_hex(hashed.dump());
    manifest["config"] = cfg.to_json();
    manifest["ontology"] = {{"concepts", onto.concepts.size()},
                            {"properties", onto.properties.size()},
                            {"equivalence_anchors", definition_anchors(onto).size()}};

    stage("write", [&] {
        fs::create_directories(cfg.output_dir);
        ojson counts;
        ojson balance;
        std::vector<std::string> files;
        for (const auto* name : {"train", "dev", "test"}) {
            const auto& records = partitions.at(name);
            auto c = label_counts(records);
            balance[name] = c["positive"] == c["negative"];
            counts[name] = std::move(c);
            const std::string file = std::string(name) + ".jsonl";
            write_file_atomic(cfg.output_dir / file, to_jsonl(records));
            files.push_back(file);
        }
        manifest["counts"] = std::move(counts);
        manifest["balanced"] = std::move(balance);

        ojson kshots = ojson::object();
        for (auto k : cfg.k_list) {
            auto subset = stage("k_shot", [&] { return k_shot(parts, k, cfg.seed + k); });
            auto tr = to_records(subset.train, onto, cfg, lex);
            auto dv = to_records(subset.dev, onto, cfg, lex);
            const auto tr_file = "train_k" + std::to_string(k) + ".jsonl";
            const auto dv_file = "dev_k" + std::to_string(k) + ".jsonl";
            write_file_atomic(cfg.output_dir / tr_file, to_jsonl(tr));
            write_file_atomic(cfg.output_dir / dv_file, to_jsonl(dv));
            files.push_back(tr_file);
            files.push_back(dv_file);
            kshots[std::to_string(k)] = {{"train", label_counts(tr)}, {"dev", label_counts(dv)}};
        }
        manifest["k_shot"] = std::move(kshots);

        std::string warnings;
        for (const auto& w : loaded.parse_warnings) {
            ojson j;
            j["stage"] = "parse";
            j["line"] = w.line;
            j["construct"] = w.construct;
            warnings += j.dump() + "\n";
        }
        for (const auto& w : loaded.preprocess_warnings) {
            ojson j;
            j["stage"] = "preprocess";
            j["iri"] = w.iri.str();
            j["reason"] = w.reason;
            warnings += j.dump() + "\n";
        }
        for (const auto& w : sampler_warnings) {
            ojson j;
            j["stage"] = "sample";
            j["anchor"] = w.anchor;
            j["message"] = w.message;
            warnings += j.dump() + "\n";
        }
        write_file_atomic(cfg.output_dir / "warnings.jsonl", warnings);
        files.push_back("warnings.jsonl");
        manifest["warnings"] = loaded.parse_warnings.size() + loaded.preprocess_warnings.size() +
                               sampler_warnings.size();
        manifest["files"] = files;
        write_file_atomic(cfg.output_dir / "manifest.json", manifest.dump(2) + "\n");
        return 0;
    });
    return manifest;
}

ojson stats(const fs::path& path) {
    std::vector<std::pair<std::string, fs::path>> files;
    if (fs::is_directory(path)) {
        for (const auto* name : {"train", "dev", "test"}) {
            auto p = path / (std::string(name) + ".jsonl");
            if (fs::exists(p)) files.emplace_back(name, p);
        }
    } else {
        files.emplace_back(path.stem().string(), path);
    }

    ojson report;
    ojson parts = ojson::object();
    std::set<Iri> concepts;
    std::set<std::string> expressions;
    std::map<std::string, std::set<std::string>> key_partitions;
    std::size_t total = 0;
    for (const auto& [name, file] : files) {
        std::vector<DatasetRecord> records;
        try {
            records = records_from_jsonl(read_file(file));
        } catch (const SyntaxError& e) {
            throw Error(file.string() + ": " + e.what());
        }
        auto c = label_counts(records);
        std::map<std::string, std::size_t> prov;
        for (const auto& r : records) {
            ++prov[to_string(r.sample.provenance)];
            for (const auto* e : {&r.sample.sub, &r.sample.super}) {
                for (auto& i : atomic_occurrences(*e)) concepts.insert(i);
                expressions.insert(canonical_form(*e));
            }
            key_partitions[r.sample.key()].insert(name);
        }
        c["provenance"] = prov;
        total += records.size();
        parts[name] = std::move(c);
    }
    ojson violations = ojson::array();
    for (const auto& [key, names] : key_partitions) {
        if (names.size() < 2) continue;
        auto tab = key.find('\t');
        ojson v;
        v["sub"] = key.substr(0, tab);
        v["super"] = key.substr(tab + 1);
        v["partitions"] = names;
        violations.push_back(std::move(v));
    }
    report["partitions"] = std::move(parts);
    report["total"] = total;
    report["unique_concepts"] = concepts.size();
    report["unique_expressions"] = expressions.size();
    report["violations"] = std::move(violations);
    return report;
}

}  // namespace ontoforge
