#include "ontoforge/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "ontoforge/canonical.hpp"
#include "ontoforge/error.hpp"

namespace ontoforge {

std::string to_string(SampleLabel label) {
    return label == SampleLabel::Positive ? "entailment" : "non-entailment";
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Entailed: return "entailed";
        case Provenance::Soft: return "soft";
        case Provenance::Hard: return "hard";
        case Provenance::CorruptNamed: return "corrupt_named";
        case Provenance::CorruptProperty: return "corrupt_property";
    }
    return "?";
}

SampleLabel parse_sample_label(const std::string& text) {
    if (text == "entailment") return SampleLabel::Positive;
    if (text == "non-entailment") return SampleLabel::Negative;
    throw std::invalid_argument("unknown label: " + text);
}

Provenance parse_provenance(const std::string& text) {
    for (auto p : {Provenance::Entailed, Provenance::Soft, Provenance::Hard,
                   Provenance::CorruptNamed, Provenance::CorruptProperty})
        if (to_string(p) == text) return p;
    throw std::invalid_argument("unknown provenance: " + text);
}

std::string SubsumptionSample::key() const { return pair_key(sub, super); }

namespace {

std::vector<Iri> usable_nodes(const ToldGraph& g, const SamplerOptions& opts) {
    std::vector<Iri> out;
    for (const auto& n : g.nodes())
        if (opts.usable(n)) out.push_back(n);
    return out;
}

SubsumptionSample atomic_sample(const Iri& a, const Iri& b, SampleLabel label, Provenance p) {
    return SubsumptionSample{ConceptExpr::atomic(a), ConceptExpr::atomic(b), label, p, std::nullopt};
}

bool all_usable(const ConceptExpr& e, const SamplerOptions& opts) {
    for (const auto& i : atomic_occurrences(e))
        if (!opts.usable(i)) return false;
    for (const auto& i : property_occurrences(e))
        if (!opts.usable(i)) return false;
    return true;
}

}  // namespace

std::vector<SubsumptionSample> positive_atomic(const ToldGraph& g, Rng& rng,
                                               const SamplerOptions& opts) {
    std::vector<SubsumptionSample> out;
    for (const auto& a : usable_nodes(g, opts)) {
        auto supers = opts.direct_only ? g.parents(a) : g.ancestors(a);
        for (const auto& b : supers) {
            if (b == a || !opts.usable(b)) continue;
            out.push_back(atomic_sample(a, b, SampleLabel::Positive, Provenance::Entailed));
        }
    }
    rng.shuffle(out);
    return out;
}

std::vector<SubsumptionSample> negative_atomic(const ToldGraph& g, Rng& rng, std::size_t n_pos,
                                               const SamplerOptions& opts) {
    if (n_pos == 0) throw std::invalid_argument("negative_atomic: n_pos must be positive");
    const auto pool = usable_nodes(g, opts);
    std::unordered_set<std::string> tried;
    auto consider = [&](const Iri& a, const Iri& b, Provenance p,
                        std::vector<SubsumptionSample>& into) {
        if (a == b) return;
        auto s = atomic_sample(a, b, SampleLabel::Negative, p);
        if (!tried.insert(s.key()).second) return;
        if (assumed_disjoint(g, s.sub, s.super)) into.push_back(std::move(s));
    };

    std::vector<SubsumptionSample> soft;
    if (pool.size() >= 2) {
        for (std::size_t budget = opts.attempt_factor * n_pos; budget > 0 && soft.size() < n_pos;
             --budget) {
            const auto& a = pool[rng.below(pool.size())];
            const auto& b = pool[rng.below(pool.size())];
            consider(a, b, Provenance::Soft, soft);
        }
    }

    // Sibling pairs: a parent is chosen with weight k(k-1) over its k usable
    // children, then an ordered pair of distinct children uniformly, which is
    // uniform over (parent, child, child) triples.
    std::vector<std::vector<Iri>> families;
    std::vector<std::uint64_t> cumulative;
    std::uint64_t total = 0;
    for (const auto& p : g.nodes()) {
        std::vector<Iri> kids;
        for (auto& c : g.children(p))
            if (opts.usable(c)) kids.push_back(c);
        if (kids.size() < 2) continue;
        total += static_cast<std::uint64_t>(kids.size()) * (kids.size() - 1);
        cumulative.push_back(total);
        families.push_back(std::move(kids));
    }
    std::vector<SubsumptionSample> hard;
    if (total > 0) {
        for (std::size_t budget = opts.attempt_factor * n_pos; budget > 0 && hard.size() < n_pos;
             --budget) {
            auto r = rng.below(total);
            auto f = std::upper_bound(cumulative.begin(), cumulative.end(), r) - cumulative.begin();
            const auto& kids = families[static_cast<std::size_t>(f)];
            auto i = rng.below(kids.size());
            auto j = rng.below(kids.size() - 1);
            if (j >= i) ++j;
            consider(kids[i], kids[j], Provenance::Hard, hard);
        }
    }

    std::vector<SubsumptionSample> all = std::move(soft);
    const auto n_soft = all.size();
    all.insert(all.end(), std::make_move_iterator(hard.begin()),
               std::make_move_iterator(hard.end()));
    if (all.size() < n_pos) {
        throw SamplingError("negative_atomic: needed " + std::to_string(n_pos) +
                            " negatives, found soft=" + std::to_string(n_soft) +
                            " hard=" + std::to_string(all.size() - n_soft));
    }
    rng.shuffle(all);
    all.resize(n_pos);
    return all;
}

std::size_t corruption_sites(const EquivalentClasses& anchor) {
    return 1 + atomic_occurrences(anchor.second).size() + property_occurrences(anchor.second).size();
}

Corruption corrupt(const EquivalentClasses& anchor, std::size_t occurrence, const Iri& replacement) {
    if (occurrence == 0) return {ConceptExpr::atomic(replacement), anchor.second, Provenance::CorruptNamed};
    const auto n_atoms = atomic_occurrences(anchor.second).size();
    if (occurrence <= n_atoms)
        return {anchor.first, replace_atomic_occurrence(anchor.second, occurrence - 1, replacement),
                Provenance::CorruptNamed};
    const auto n_props = property_occurrences(anchor.second).size();
    if (occurrence > n_atoms + n_props) throw std::out_of_range("corrupt: occurrence out of range");
    return {anchor.first,
            replace_property_occurrence(anchor.second, occurrence - 1 - n_atoms, replacement),
            Provenance::CorruptProperty};
}

std::vector<SubsumptionSample> complex_samples(const ToldGraph& g, const Ontology& onto, Rng& rng,
                                               std::size_t cap, const SamplerOptions& opts,
                                               std::vector<SamplerWarning>* warnings) {
    auto warn = [&](const Iri& anchor, std::string message) {
        if (warnings != nullptr) warnings->push_back({anchor.str(), std::move(message)});
    };
    const auto concept_pool = usable_nodes(g, opts);
    std::vector<Iri> property_pool;
    for (const auto& p : onto.properties)
        if (opts.usable(p)) property_pool.push_back(p);

    std::unordered_set<std::string> emitted;
    std::vector<SubsumptionSample> out;
    // The cap is shared by all definitions of the same A, since records only
    // identify the anchor by A.
    std::map<Iri, std::pair<std::size_t, std::size_t>> used;
    for (const auto& anchor : definition_anchors(onto)) {
        const Iri& a = anchor.first.iri();
        const ConceptExpr& c = anchor.second;
        if (!g.contains(a) || !opts.usable(a) || !all_usable(c, opts)) {
            warn(a, "anchor mentions an unusable (unlabelled) entity");
            continue;
        }

        std::vector<SubsumptionSample> positives;
        for (const auto& d : g.descendants(a)) {
            if (!opts.usable(d)) continue;
            positives.push_back({ConceptExpr::atomic(d), c, SampleLabel::Positive,
                                 Provenance::Entailed, a});
        }
        for (const auto& u : g.ancestors(a)) {
            if (!opts.usable(u)) continue;
            positives.push_back({c, ConceptExpr::atomic(u), SampleLabel::Positive,
                                 Provenance::Entailed, a});
        }
        rng.shuffle(positives);
        auto& [n_pos, n_neg] = used[a];
        const std::size_t pos_before = n_pos, neg_before = n_neg;
        for (auto& s : positives) {
            if (n_pos == cap) break;
            if (!entails_structural(g, s.sub, s.super)) continue;
            if (!emitted.insert(s.key()).second) continue;
            out.push_back(std::move(s));
            ++n_pos;
        }

        const auto sites = corruption_sites(anchor);
        const auto n_atoms = atomic_occurrences(c).size();
        for (std::size_t budget = cap * opts.attempt_factor; budget > 0 && n_neg < cap; --budget) {
            const auto site = static_cast<std::size_t>(rng.below(sites));
            std::optional<Iri> replacement;
            if (site <= n_atoms) {
                const Iri original = site == 0 ? a : atomic_occurrences(c)[site - 1];
                std::vector<Iri> pool;
                if (opts.sibling_replacement && g.contains(original)) {
                    for (const auto& s : siblings(g, original))
                        if (opts.usable(s)) pool.push_back(s);
                }
                if (pool.empty()) {
                    for (const auto& n : concept_pool)
                        if (n != original) pool.push_back(n);
                }
                if (!pool.empty()) replacement = pool[rng.below(pool.size())];
            } else {
                const Iri original = property_occurrences(c)[site - 1 - n_atoms];
                std::vector<Iri> pool;
                for (const auto& p : property_pool)
                    if (p != original) pool.push_back(p);
                if (!pool.empty()) replacement = pool[rng.below(pool.size())];
            }
            if (!replacement) continue;

            auto corrupted = corrupt(anchor, site, *replacement);
            SubsumptionSample s{corrupted.named, corrupted.complex, SampleLabel::Negative,
                                corrupted.provenance, a};
            if (rng.coin()) std::swap(s.sub, s.super);
            if (s.sub == s.super || emitted.count(s.key())) continue;
            if (!assumed_disjoint(g, s.sub, s.super)) continue;
            emitted.insert(s.key());
            out.push_back(std::move(s));
            ++n_neg;
        }

        if (n_pos == pos_before && n_neg == neg_before) warn(a, "anchor yielded no samples");
    }
    return out;
}

DatasetSplit split(std::vector<SubsumptionSample> samples, const SplitRatios& ratios, Rng& rng,
                   bool balance) {
    if (samples.empty()) throw SamplingError("split: no samples");
    if (ratios.train < 0 || ratios.dev < 0 || ratios.test < 0 ||
        std::abs(ratios.train + ratios.dev + ratios.test - 1.0) > 1e-9)
        throw std::invalid_argument("split: ratios must be non-negative and sum to 1");

    std::unordered_set<std::string> seen;
    std::vector<SubsumptionSample> pos;
    std::vector<SubsumptionSample> neg;
    for (auto& s : samples) {
        if (!seen.insert(s.key()).second) continue;
        (s.label == SampleLabel::Positive ? pos : neg).push_back(std::move(s));
    }
    rng.shuffle(pos);
    rng.shuffle(neg);
    if (balance) {
        const auto n = std::min(pos.size(), neg.size());
        pos.resize(n);
        neg.resize(n);
    }

    DatasetSplit out;
    out.seed = rng.seed();
    out.ratios = ratios;
    auto distribute = [&](std::vector<SubsumptionSample>& items) {
        const auto m = items.size();
        auto n_train = static_cast<std::size_t>(std::llround(static_cast<double>(m) * ratios.train));
        auto n_dev = static_cast<std::size_t>(std::llround(static_cast<double>(m) * ratios.dev));
        n_train = std::min(n_train, m);
        n_dev = std::min(n_dev, m - n_train);
        auto it = std::make_move_iterator(items.begin());
        out.train.insert(out.train.end(), it, it + static_cast<std::ptrdiff_t>(n_train));
        it += static_cast<std::ptrdiff_t>(n_train);
        out.dev.insert(out.dev.end(), it, it + static_cast<std::ptrdiff_t>(n_dev));
        it += static_cast<std::ptrdiff_t>(n_dev);
        out.test.insert(out.test.end(), it, std::make_move_iterator(items.end()));
    };
    distribute(pos);
    distribute(neg);
    rng.shuffle(out.train);
    rng.shuffle(out.dev);
    rng.shuffle(out.test);
    return out;
}

namespace {

std::vector<SubsumptionSample> draw_k(const std::vector<SubsumptionSample>& from, std::size_t k,
                                      Rng& rng, const char* partition) {
    std::vector<SubsumptionSample> pos;
    std::vector<SubsumptionSample> neg;
    for (const auto& s : from) (s.label == SampleLabel::Positive ? pos : neg).push_back(s);
    if (k > pos.size() || k > neg.size())
        throw SamplingError("k_shot: k=" + std::to_string(k) + " exceeds " + partition +
                            " per-label counts (" + std::to_string(pos.size()) + " positive, " +
                            std::to_string(neg.size()) + " negative)");
    rng.shuffle(pos);
    rng.shuffle(neg);
    std::vector<SubsumptionSample> out(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(k));
    out.insert(out.end(), neg.begin(), neg.begin() + static_cast<std::ptrdiff_t>(k));
    rng.shuffle(out);
    return out;
}

}  // namespace

KShot k_shot(const DatasetSplit& split, std::size_t k, std::uint64_t seed) {
    Rng rng(seed);
    KShot out;
    out.train = draw_k(split.train, k, rng, "train");
    out.dev = draw_k(split.dev, k, rng, "dev");
    return out;
}

}  // namespace ontoforge
