#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "ontoforge/canonical.hpp"
#include "ontoforge/error.hpp"
#include "ontoforge/reasoner.hpp"
#include "ontoforge/sampler.hpp"

using namespace ontoforge;
using testing::doc;
using testing::T;

namespace {

SubsumptionSample pos(const ConceptExpr& a, const ConceptExpr& b) {
    return {a, b, SampleLabel::Positive, Provenance::Entailed, std::nullopt};
}
SubsumptionSample neg(const ConceptExpr& a, const ConceptExpr& b) {
    return {a, b, SampleLabel::Negative, Provenance::Soft, std::nullopt};
}

std::vector<SubsumptionSample> synthetic(std::size_t n_pos, std::size_t n_neg) {
    std::vector<SubsumptionSample> out;
    for (std::size_t i = 0; i < n_pos; ++i) out.push_back(pos(T("p" + std::to_string(i)), T("P")));
    for (std::size_t i = 0; i < n_neg; ++i) out.push_back(neg(T("n" + std::to_string(i)), T("N")));
    return out;
}

std::size_t count(const std::vector<SubsumptionSample>& v, SampleLabel l) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [&](const auto& s) { return s.label == l; }));
}

std::set<std::string> keys(const std::vector<SubsumptionSample>& v) {
    std::set<std::string> out;
    for (const auto& s : v) out.insert(s.key());
    return out;
}

const Ontology& food() {
    static const Ontology o = load_ontology(testing::data("food30.ofn"), resolve_preset("foodon")).ontology;
    return o;
}

}  // namespace

TEST_CASE("Rng is reproducible and bounded") {
    Rng a(7), b(7), c(8);
    std::vector<std::uint64_t> xa, xb, xc;
    for (int i = 0; i < 100; ++i) {
        xa.push_back(a.below(10));
        xb.push_back(b.below(10));
        xc.push_back(c.below(10));
    }
    CHECK(xa == xb);
    CHECK(xa != xc);
    CHECK(std::all_of(xa.begin(), xa.end(), [](auto x) { return x < 10; }));
    std::vector<int> v{1, 2, 3, 4, 5, 6, 7, 8};
    Rng r(1);
    r.shuffle(v);
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("positives: chain and equivalence") {
    auto chain = ToldGraph::build(testing::parse(doc("SubClassOf(:A :B)\nSubClassOf(:B :C)")));
    Rng rng(1);
    auto p = positive_atomic(chain, rng);
    CHECK(p.size() == 3);
    CHECK(keys(p) == keys({pos(T("A"), T("B")), pos(T("B"), T("C")), pos(T("A"), T("C"))}));
    for (const auto& s : p) {
        CHECK(s.label == SampleLabel::Positive);
        CHECK(s.provenance == Provenance::Entailed);
    }

    auto eq = ToldGraph::build(testing::parse(doc("EquivalentClasses(:A :B)")));
    CHECK(positive_atomic(eq, rng).size() == 2);

    SamplerOptions direct;
    direct.direct_only = true;
    CHECK(positive_atomic(chain, rng, direct).size() == 2);
}

TEST_CASE("star: hard negatives are siblings, all negatives re-verify") {
    std::string body;
    for (int i = 0; i < 6; ++i) body += "SubClassOf(:L" + std::to_string(i) + " :Root)\n";
    body += "SubClassOf(:Root :Top)\nSubClassOf(:Other :Top)\nSubClassOf(:Leaf :Other)\n";
    auto g = ToldGraph::build(testing::parse(doc(body)));
    Rng rng(3);
    auto n = negative_atomic(g, rng, 10);
    CHECK(n.size() == 10);
    CHECK(keys(n).size() == 10);
    for (const auto& s : n) {
        CHECK(s.label == SampleLabel::Negative);
        CHECK(assumed_disjoint(g, s.sub, s.super));
        CHECK_FALSE(entails_structural(g, s.sub, s.super));
        if (s.provenance == Provenance::Hard) {
            auto ps = g.parents(s.sub.iri());
            auto qs = g.parents(s.super.iri());
            bool shared = std::any_of(ps.begin(), ps.end(), [&](const Iri& x) {
                return std::find(qs.begin(), qs.end(), x) != qs.end();
            });
            CHECK(shared);
        }
    }
}

TEST_CASE("negatives fail loudly when the budget is exhausted") {
    auto g = ToldGraph::build(testing::parse(doc("SubClassOf(:A :B)")));
    Rng rng(1);
    CHECK_THROWS_AS(negative_atomic(g, rng, 5), SamplingError);
}

TEST_CASE("corruption sites") {
    const auto& o = food();
    auto anchors = definition_anchors(o);
    auto it = std::find_if(anchors.begin(), anchors.end(), [](const auto& a) {
        return a.first.iri().str() == "http://example.org/food#SunflowerSeed";
    });
    REQUIRE(it != anchors.end());
    CHECK(corruption_sites(*it) == 4);
    const Iri fruit("http://example.org/food#Fruit");
    auto c0 = corrupt(*it, 0, fruit);
    CHECK(c0.named == ConceptExpr::atomic(fruit));
    CHECK(c0.complex == it->second);
    auto c1 = corrupt(*it, 1, fruit);
    CHECK(c1.named == it->first);
    CHECK(canonical_form(c1.complex) ==
          "(http://example.org/food#Fruit and (http://example.org/food#derivesFrom some http://example.org/food#HelianthusAnnuus))");
    auto c3 = corrupt(*it, 3, Iri("http://example.org/food#partOf"));
    CHECK(c3.provenance == Provenance::CorruptProperty);
    CHECK_THROWS_AS(corrupt(*it, 4, fruit), std::out_of_range);

    auto g = ToldGraph::build(o);
    CHECK(assumed_disjoint(g, c1.complex, c1.named));
    CHECK(assumed_disjoint(g, c0.named, c0.complex));
}

TEST_CASE("complex samples respect the cap and re-verify") {
    const auto& o = food();
    auto g = ToldGraph::build(o);
    SamplerOptions opts;
    opts.vocabulary = labelled_vocabulary(o);
    for (std::size_t cap : {1u, 2u, 4u}) {
        Rng rng(11);
        std::vector<SamplerWarning> w;
        auto s = complex_samples(g, o, rng, cap, opts, &w);
        std::map<std::string, std::pair<std::size_t, std::size_t>> per;
        for (const auto& x : s) {
            REQUIRE(x.anchor.has_value());
            auto& c = per[x.anchor->str()];
            if (x.label == SampleLabel::Positive) {
                ++c.first;
                CHECK(entails_structural(g, x.sub, x.super));
            } else {
                ++c.second;
                CHECK(assumed_disjoint(g, x.sub, x.super));
            }
            CHECK((x.sub.is_atomic() != x.super.is_atomic()));
        }
        CHECK(keys(s).size() == s.size());
        for (const auto& [a, c] : per) {
            CHECK(c.first <= cap);
            CHECK(c.second <= cap);
        }
        CHECK(per.size() == 5);
    }
}

TEST_CASE("split: balance and ratios") {
    Rng rng(5);
    auto s = split(synthetic(100, 100), SplitRatios::standard(), rng);
    CHECK(s.train.size() == 160);
    CHECK(s.dev.size() == 20);
    CHECK(s.test.size() == 20);
    for (const auto* part : {&s.train, &s.dev, &s.test})
        CHECK(count(*part, SampleLabel::Positive) == count(*part, SampleLabel::Negative));

    Rng rng2(5);
    auto t = split(synthetic(100, 60), SplitRatios::standard(), rng2);
    CHECK(t.train.size() + t.dev.size() + t.test.size() == 120);
    CHECK(count(t.train, SampleLabel::Positive) == 48);

    Rng rng3(5);
    auto u = split(synthetic(50, 50), SplitRatios::small_dataset(), rng3);
    CHECK(u.train.size() == 20);
    CHECK(u.dev.size() == 10);
    CHECK(u.test.size() == 70);

    Rng rng4(5);
    auto v = split(synthetic(10, 30), SplitRatios::standard(), rng4, false);
    CHECK(v.train.size() + v.dev.size() + v.test.size() == 40);
}

TEST_CASE("split: partitions are disjoint, duplicates dropped") {
    auto in = synthetic(30, 30);
    in.push_back(in.front());
    Rng rng(2);
    auto s = split(in, SplitRatios::standard(), rng);
    auto a = keys(s.train), b = keys(s.dev), c = keys(s.test);
    CHECK(a.size() + b.size() + c.size() == 60);
    std::set<std::string> all(a.begin(), a.end());
    all.insert(b.begin(), b.end());
    all.insert(c.begin(), c.end());
    CHECK(all.size() == 60);
}

TEST_CASE("split: errors") {
    Rng rng(1);
    CHECK_THROWS_AS(split({}, SplitRatios::standard(), rng), SamplingError);
    CHECK_THROWS_AS(split(synthetic(2, 2), SplitRatios{0.5, 0.5, 0.5}, rng), std::invalid_argument);
}

TEST_CASE("split is deterministic per seed") {
    Rng a(9), b(9), c(10);
    auto x = split(synthetic(40, 40), SplitRatios::standard(), a);
    auto y = split(synthetic(40, 40), SplitRatios::standard(), b);
    auto z = split(synthetic(40, 40), SplitRatios::standard(), c);
    CHECK(x.train == y.train);
    CHECK(x.test == y.test);
    CHECK(keys(x.test) != keys(z.test));
}

TEST_CASE("k-shot") {
    Rng rng(4);
    auto s = split(synthetic(100, 100), SplitRatios::standard(), rng);
    auto k4 = k_shot(s, 4, 100);
    CHECK(count(k4.train, SampleLabel::Positive) == 4);
    CHECK(count(k4.train, SampleLabel::Negative) == 4);
    CHECK(count(k4.dev, SampleLabel::Positive) == 4);
    CHECK(count(k4.dev, SampleLabel::Negative) == 4);
    auto tr = keys(s.train);
    for (const auto& x : k4.train) CHECK(tr.count(x.key()) == 1);
    CHECK(k_shot(s, 0, 100).train.empty());
    CHECK(k_shot(s, 4, 100).train == k4.train);
    CHECK_THROWS_AS(k_shot(s, 11, 100), SamplingError);
}

TEST_CASE("labels and provenance round-trip as text") {
    for (auto l : {SampleLabel::Positive, SampleLabel::Negative}) CHECK(parse_sample_label(to_string(l)) == l);
    for (auto p : {Provenance::Entailed, Provenance::Soft, Provenance::Hard, Provenance::CorruptNamed,
                   Provenance::CorruptProperty})
        CHECK(parse_provenance(to_string(p)) == p);
    CHECK(to_string(SampleLabel::Positive) == "entailment");
    CHECK_THROWS(parse_provenance("bogus"));
}
