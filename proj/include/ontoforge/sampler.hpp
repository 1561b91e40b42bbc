#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontoforge/concept.hpp"
#include "ontoforge/ontology.hpp"
#include "ontoforge/reasoner.hpp"
#include "ontoforge/rng.hpp"

namespace ontoforge {

enum class SampleLabel { Positive, Negative };
enum class Provenance { Entailed, Soft, Hard, CorruptNamed, CorruptProperty };

std::string to_string(SampleLabel label);  // "entailment" / "non-entailment"
std::string to_string(Provenance p);        // "entailed", "soft", "hard", ...
SampleLabel parse_sample_label(const std::string& text);
Provenance parse_provenance(const std::string& text);

struct SubsumptionSample {
    ConceptExpr sub;
    ConceptExpr super;
    SampleLabel label = SampleLabel::Positive;
    Provenance provenance = Provenance::Entailed;
    std::optional<Iri> anchor;

    std::string key() const;

    friend bool operator==(const SubsumptionSample&, const SubsumptionSample&) = default;
};

struct SamplerOptions {
    /// IRIs (concepts and properties) allowed to appear in samples; empty
    /// means unrestricted. The pipeline passes every labelled IRI.
    std::set<Iri> vocabulary;
    /// Positive atomic pairs from told parents only instead of the closure.
    bool direct_only = false;
    /// Candidate draws allowed per requested negative.
    std::size_t attempt_factor = 50;
    /// Corruptions prefer concepts sharing a told parent with the replaced one.
    bool sibling_replacement = true;

    bool usable(const Iri& iri) const { return vocabulary.empty() || vocabulary.count(iri) > 0; }
};

struct SamplerWarning {
    std::string anchor;
    std::string message;
};

/// Every entailed ordered pair of distinct named concepts, shuffled.
std::vector<SubsumptionSample> positive_atomic(const ToldGraph& g, Rng& rng,
                                               const SamplerOptions& opts = {});

/// n_pos soft and n_pos hard candidates that pass assumed_disjoint, deduplicated
/// and truncated to n_pos. Throws SamplingError if fewer than n_pos were found
/// within the attempt budget.
std::vector<SubsumptionSample> negative_atomic(const ToldGraph& g, Rng& rng, std::size_t n_pos,
                                               const SamplerOptions& opts = {});

/// A corruption of an anchor A == C: one named concept (A itself or inside C)
/// or one property inside C replaced.
struct Corruption {
    ConceptExpr named;    // A or A'
    ConceptExpr complex;  // C or C'
    Provenance provenance = Provenance::CorruptNamed;
};

/// occurrence 0 is the anchor concept, then named concepts of C in pre-order,
/// then properties of C in pre-order.
Corruption corrupt(const EquivalentClasses& anchor, std::size_t occurrence, const Iri& replacement);
std::size_t corruption_sites(const EquivalentClasses& anchor);

/// Up to `cap` positives and `cap` negatives per A == C anchor.
std::vector<SubsumptionSample> complex_samples(const ToldGraph& g, const Ontology& onto, Rng& rng,
                                               std::size_t cap = 4,
                                               const SamplerOptions& opts = {},
                                               std::vector<SamplerWarning>* warnings = nullptr);

struct SplitRatios {
    double train = 0.8;
    double dev = 0.1;
    double test = 0.1;

    static SplitRatios standard() { return {0.8, 0.1, 0.1}; }
    static SplitRatios small_dataset() { return {0.2, 0.1, 0.7}; }
};

struct DatasetSplit {
    std::vector<SubsumptionSample> train;
    std::vector<SubsumptionSample> dev;
    std::vector<SubsumptionSample> test;
    std::uint64_t seed = 0;
    SplitRatios ratios;
};

/// Stratified split. With `balance`, the dominant label is truncated to the
/// other's count first so every partition is exactly balanced. Duplicate
/// keys are dropped (first kept). Throws SamplingError on empty input and
/// std::invalid_argument on ratios not summing to 1.
DatasetSplit split(std::vector<SubsumptionSample> samples, const SplitRatios& ratios, Rng& rng,
                   bool balance = true);

struct KShot {
    std::vector<SubsumptionSample> train;
    std::vector<SubsumptionSample> dev;
};

/// k positives and k negatives from train and, independently, from dev.
KShot k_shot(const DatasetSplit& split, std::size_t k, std::uint64_t seed);

}  // namespace ontoforge
