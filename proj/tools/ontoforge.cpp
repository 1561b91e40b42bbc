// ontoforge: build subsumption-inference probing datasets from OWL
// functional-syntax ontologies.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ontoforge/canonical.hpp"
#include "ontoforge/dataset.hpp"
#include "ontoforge/error.hpp"
#include "ontoforge/parser.hpp"
#include "ontoforge/pipeline.hpp"
#include "ontoforge/reasoner.hpp"
#include "ontoforge/rng.hpp"
#include "ontoforge/sampler.hpp"
#include "ontoforge/verbaliser.hpp"

namespace of = ontoforge;

namespace {

struct Common {
    std::string input;
    std::string preset = "default";
    std::uint64_t seed = 42;
};

std::uint64_t effective_seed(const Common& c) {
    of::JobConfig cfg;
    cfg.seed = c.seed;
    cfg.apply_environment();
    return cfg.seed;
}

of::SamplerOptions sampler_options(const of::Ontology& onto) {
    of::SamplerOptions opts;
    opts.vocabulary = of::labelled_vocabulary(onto);
    return opts;
}

void print_records(const std::vector<of::SubsumptionSample>& samples, const of::Ontology& onto) {
    const auto lex = of::VerbaliserLexicon::defaults();
    for (const auto& s : samples) std::cout << of::to_json(of::make_record(s, onto.labels, lex)).dump() << '\n';
}

std::string read_all(std::istream& in) {
    std::string all, line;
    while (std::getline(in, line)) all += line + '\n';
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subsumption-inference dataset builder"};
    app.require_subcommand(1);

    // parse
    auto* parse_cmd = app.add_subcommand("parse", "Parse an ontology and report its contents");
    std::string parse_input, parse_preset;
    bool closure = false, strict = false;
    parse_cmd->add_option("input", parse_input, "Functional-syntax ontology")->required();
    parse_cmd->add_option("--preset", parse_preset, "Also preprocess with this preset");
    parse_cmd->add_flag("--closure", closure, "Print the told subsumption closure");
    parse_cmd->add_flag("--fail-on-unsupported", strict, "Error on unsupported axioms");

    // verbalise
    auto* verb_cmd = app.add_subcommand("verbalise", "Verbalise canonical-form expressions, one per line");
    std::string verb_input, verb_preset = "default";
    std::vector<std::string> verb_exprs;
    verb_cmd->add_option("--ontology", verb_input, "Ontology providing labels")->required();
    verb_cmd->add_option("--preset", verb_preset, "Preprocess preset");
    verb_cmd->add_option("expr", verb_exprs, "Expressions (read from stdin when absent)");

    // sample-atomic / sample-complex
    Common atomic, complex;
    bool direct_only = false;
    std::size_t cap = 4;
    auto* atomic_cmd = app.add_subcommand("sample-atomic", "Sample atomic subsumption pairs as JSONL");
    atomic_cmd->add_option("input", atomic.input)->required();
    atomic_cmd->add_option("--preset", atomic.preset);
    atomic_cmd->add_option("--seed", atomic.seed);
    atomic_cmd->add_flag("--direct-only", direct_only, "Positives from told parents only");
    auto* complex_cmd = app.add_subcommand("sample-complex", "Sample complex subsumption pairs as JSONL");
    complex_cmd->add_option("input", complex.input)->required();
    complex_cmd->add_option("--preset", complex.preset);
    complex_cmd->add_option("--seed", complex.seed);
    complex_cmd->add_option("--cap", cap, "Samples per label per anchor")->check(CLI::PositiveNumber);

    // render
    auto* render_cmd = app.add_subcommand("render", "Add prompt and labels fields to JSONL records");
    std::string render_input, tmpl = "T1", labels = "L1";
    render_cmd->add_option("input", render_input, "JSONL file (stdin when absent)");
    render_cmd->add_option("--template", tmpl)->check(CLI::IsMember({"T1", "T2"}));
    render_cmd->add_option("--labels", labels)->check(CLI::IsMember({"L1", "L2", "L3"}));

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "Statistics for a dataset directory or JSONL file");
    std::string stats_input;
    stats_cmd->add_option("path", stats_input)->required();

    // run
    auto* run_cmd = app.add_subcommand("run", "Full pipeline");
    std::string config_path, run_input, run_preset, run_task, run_ratios, run_out, run_tmpl, run_labels;
    std::uint64_t run_seed = 0;
    std::size_t run_cap = 0;
    std::vector<std::size_t> run_k;
    bool run_direct = false;
    run_cmd->add_option("--config", config_path, "JSON job config");
    run_cmd->add_option("--input", run_input);
    run_cmd->add_option("--preset", run_preset);
    run_cmd->add_option("--task", run_task)->check(CLI::IsMember({"atomic", "complex"}));
    run_cmd->add_option("--ratios", run_ratios, "e.g. 8:1:1");
    auto* seed_opt = run_cmd->add_option("--seed", run_seed);
    auto* cap_opt = run_cmd->add_option("--cap", run_cap)->check(CLI::PositiveNumber);
    run_cmd->add_option("--k", run_k, "k-shot sizes");
    run_cmd->add_option("--template", run_tmpl)->check(CLI::IsMember({"T1", "T2"}));
    run_cmd->add_option("--labels", run_labels)->check(CLI::IsMember({"L1", "L2", "L3"}));
    run_cmd->add_option("--out", run_out, "Output directory");
    auto* direct_opt = run_cmd->add_flag("--direct-only", run_direct);

    CLI11_PARSE(app, argc, argv);

    try {
        if (parse_cmd->parsed()) {
            of::ParseOptions opts;
            if (strict) opts.on_unsupported = of::OnUnsupported::Fail;
            auto parsed = of::parse_ontology(of::read_file(parse_input), opts);
            std::vector<of::PruneWarning> pruned;
            if (!parse_preset.empty()) {
                auto pre = of::preprocess(parsed.ontology, of::resolve_preset(parse_preset));
                parsed.ontology = std::move(pre.ontology);
                pruned = std::move(pre.warnings);
            }
            const auto& o = parsed.ontology;
            if (closure) {
                std::cout << of::ToldGraph::build(o).dump_closure();
            } else {
                nlohmann::ordered_json j;
                j["concepts"] = o.concepts.size();
                j["properties"] = o.properties.size();
                j["individuals"] = o.individuals.size();
                j["axioms"] = o.axioms.size();
                j["equivalence_anchors"] = of::definition_anchors(o).size();
                j["labelled"] = of::labelled_vocabulary(o).size();
                j["warnings"] = parsed.warnings.size();
                j["pruned"] = pruned.size();
                std::cout << j.dump(2) << '\n';
            }
            std::cerr << of::warnings_to_jsonl(parsed.warnings);
        } else if (verb_cmd->parsed()) {
            auto loaded = of::load_ontology(verb_input, of::resolve_preset(verb_preset));
            const auto lex = of::VerbaliserLexicon::defaults();
            auto emit = [&](const std::string& text) {
                if (text.find_first_not_of(" \t\r") == std::string::npos) return;
                std::cout << of::verbalise(of::parse_concept(text), loaded.ontology.labels, lex) << '\n';
            };
            if (verb_exprs.empty()) {
                std::string line;
                while (std::getline(std::cin, line)) emit(line);
            } else {
                for (const auto& e : verb_exprs) emit(e);
            }
        } else if (atomic_cmd->parsed()) {
            auto loaded = of::load_ontology(atomic.input, of::resolve_preset(atomic.preset));
            auto g = of::ToldGraph::build(loaded.ontology);
            auto opts = sampler_options(loaded.ontology);
            opts.direct_only = direct_only;
            of::Rng rng(effective_seed(atomic));
            auto pos = of::positive_atomic(g, rng, opts);
            auto neg = of::negative_atomic(g, rng, pos.size(), opts);
            print_records(pos, loaded.ontology);
            print_records(neg, loaded.ontology);
        } else if (complex_cmd->parsed()) {
            auto loaded = of::load_ontology(complex.input, of::resolve_preset(complex.preset));
            auto g = of::ToldGraph::build(loaded.ontology);
            of::Rng rng(effective_seed(complex));
            std::vector<of::SamplerWarning> warnings;
            auto samples = of::complex_samples(g, loaded.ontology, rng, cap,
                                               sampler_options(loaded.ontology), &warnings);
            print_records(samples, loaded.ontology);
            for (const auto& w : warnings) std::cerr << w.anchor << ": " << w.message << '\n';
        } else if (render_cmd->parsed()) {
            const std::string text = render_input.empty() ? read_all(std::cin) : of::read_file(render_input);
            auto records = of::records_from_jsonl(text);
            const of::Template t{of::parse_template_id(tmpl), "<MASK>"};
            for (auto& r : records) of::attach_prompt(r, t, of::parse_label_set_id(labels));
            std::cout << of::to_jsonl(records);
        } else if (stats_cmd->parsed()) {
            std::cout << of::stats(stats_input).dump(2) << '\n';
        } else if (run_cmd->parsed()) {
            of::JobConfig cfg = config_path.empty() ? of::JobConfig{} : of::JobConfig::load(config_path);
            if (!run_input.empty()) cfg.input = run_input;
            if (!run_preset.empty()) cfg.preset = run_preset;
            if (!run_task.empty()) cfg.task = of::parse_task(run_task);
            if (!run_ratios.empty()) cfg.ratios = of::parse_ratios(run_ratios);
            if (seed_opt->count()) cfg.seed = run_seed;
            if (cap_opt->count()) cfg.cap = run_cap;
            if (!run_k.empty()) cfg.k_list = run_k;
            if (!run_tmpl.empty()) cfg.template_id = of::parse_template_id(run_tmpl);
            if (!run_labels.empty()) cfg.label_set = of::parse_label_set_id(run_labels);
            if (!run_out.empty()) cfg.output_dir = run_out;
            if (direct_opt->count()) cfg.direct_only = run_direct;
            cfg.apply_environment();
            if (cfg.input.empty()) throw of::Error("no input ontology (use --input or a config file)");
            std::cout << of::run(cfg).dump(2) << '\n';
        }
    } catch (const of::StageError& e) {
        std::cerr << "error [" << e.stage() << "]: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
