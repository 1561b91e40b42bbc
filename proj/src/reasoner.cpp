#include "ontoforge/reasoner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "ontoforge/canonical.hpp"
#include "ontoforge/error.hpp"

namespace ontoforge {

struct ToldGraph::Impl {
    using Index = std::uint32_t;
    using IndexList = std::vector<Index>;

    std::vector<Iri> nodes;
    std::unordered_map<Iri, Index, IriHash> index;
    std::vector<IndexList> up;
    std::vector<IndexList> down;
    std::vector<std::vector<ConceptExpr>> told;
    IndexList told_holders;
    // Complex left-hand sides (canonical text) and what they are told to imply.
    std::map<std::string, std::vector<ConceptExpr>> general;
    std::map<Iri, std::vector<ConceptExpr>> types;

    mutable std::mutex mu;
    mutable std::vector<std::shared_ptr<const IndexList>> anc_cache;
    mutable std::vector<std::shared_ptr<const IndexList>> desc_cache;

    std::optional<Index> find(const Iri& iri) const {
        auto it = index.find(iri);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }

    Index require(const Iri& iri) const {
        auto i = find(iri);
        if (!i) throw UnknownIri(iri.str());
        return *i;
    }

    std::shared_ptr<const IndexList> closure(Index start, bool upward) const {
        auto& cache = upward ? anc_cache : desc_cache;
        {
            std::lock_guard lock(mu);
            if (cache[start]) return cache[start];
        }
        const auto& edges = upward ? up : down;
        std::vector<char> seen(nodes.size(), 0);
        std::deque<Index> queue{start};
        seen[start] = 1;
        IndexList out;
        while (!queue.empty()) {
            Index n = queue.front();
            queue.pop_front();
            out.push_back(n);
            for (Index m : edges[n]) {
                if (!seen[m]) {
                    seen[m] = 1;
                    queue.push_back(m);
                }
            }
        }
        std::sort(out.begin(), out.end());
        auto shared = std::make_shared<const IndexList>(std::move(out));
        std::lock_guard lock(mu);
        if (!cache[start]) cache[start] = shared;
        return cache[start];
    }

    bool reachable(Index a, Index b) const {
        auto anc = closure(a, true);
        return std::binary_search(anc->begin(), anc->end(), b);
    }

    void add_edge(Index sub, Index super) {
        if (sub == super) return;
        auto& u = up[sub];
        if (std::find(u.begin(), u.end(), super) == u.end()) u.push_back(super);
        auto& d = down[super];
        if (std::find(d.begin(), d.end(), sub) == d.end()) d.push_back(sub);
    }

    // sub ⊑ super with a named left-hand side; conjunctions are unfolded.
    void add_told(Index sub, const ConceptExpr& super) {
        switch (super.kind()) {
            case ConceptKind::Top:
                return;
            case ConceptKind::Atomic:
                add_edge(sub, require(super.iri()));
                return;
            case ConceptKind::And:
                for (const auto& op : super.operands()) add_told(sub, op);
                return;
            default:
                told[sub].push_back(super);
        }
    }

    void add_subsumption(const ConceptExpr& sub, const ConceptExpr& super) {
        if (sub.is_atomic()) {
            add_told(require(sub.iri()), super);
        } else if (!sub.is_named_or_constant()) {
            general[canonical_form(sub)].push_back(super);
        }
    }
};

ToldGraph::ToldGraph(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
ToldGraph::ToldGraph(ToldGraph&&) noexcept = default;
ToldGraph& ToldGraph::operator=(ToldGraph&&) noexcept = default;
ToldGraph::~ToldGraph() = default;

ToldGraph ToldGraph::build(const Ontology& onto) {
    auto impl = std::make_unique<Impl>();
    std::set<Iri> names = onto.concepts;
    for (const auto& ax : onto.axioms) {
        std::visit(
            [&](const auto& a) {
                using T = std::decay_t<decltype(a)>;
                auto add = [&](const ConceptExpr& e) {
                    for (auto& i : atomic_occurrences(e)) names.insert(i);
                };
                if constexpr (std::is_same_v<T, SubClassOf>) {
                    add(a.sub);
                    add(a.super);
                } else if constexpr (std::is_same_v<T, EquivalentClasses>) {
                    add(a.first);
                    add(a.second);
                } else {
                    add(a.type);
                }
            },
            ax);
    }
    impl->nodes.assign(names.begin(), names.end());
    const auto n = impl->nodes.size();
    for (std::size_t i = 0; i < n; ++i)
        impl->index.emplace(impl->nodes[i], static_cast<Impl::Index>(i));
    impl->up.resize(n);
    impl->down.resize(n);
    impl->told.resize(n);
    impl->anc_cache.resize(n);
    impl->desc_cache.resize(n);

    for (const auto& ax : onto.axioms) {
        if (const auto* s = std::get_if<SubClassOf>(&ax)) {
            impl->add_subsumption(s->sub, s->super);
        } else if (const auto* e = std::get_if<EquivalentClasses>(&ax)) {
            impl->add_subsumption(e->first, e->second);
            impl->add_subsumption(e->second, e->first);
        } else {
            const auto& c = std::get<ClassAssertion>(ax);
            impl->types[c.individual].push_back(c.type);
        }
    }
    for (const auto& i : onto.individuals) impl->types.try_emplace(i);
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(impl->up[i].begin(), impl->up[i].end());
        std::sort(impl->down[i].begin(), impl->down[i].end());
        if (!impl->told[i].empty()) impl->told_holders.push_back(static_cast<Impl::Index>(i));
    }
    return ToldGraph(std::move(impl));
}

const std::vector<Iri>& ToldGraph::nodes() const noexcept { return impl_->nodes; }

bool ToldGraph::contains(const Iri& iri) const noexcept { return impl_->find(iri).has_value(); }

namespace {

std::vector<Iri> to_iris(const std::vector<Iri>& nodes, const std::vector<std::uint32_t>& idx) {
    std::vector<Iri> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(nodes[i]);
    return out;
}

}  // namespace

std::vector<Iri> ToldGraph::parents(const Iri& a) const {
    return to_iris(impl_->nodes, impl_->up[impl_->require(a)]);
}

std::vector<Iri> ToldGraph::children(const Iri& a) const {
    return to_iris(impl_->nodes, impl_->down[impl_->require(a)]);
}

const std::vector<ConceptExpr>& ToldGraph::told_supers(const Iri& a) const {
    return impl_->told[impl_->require(a)];
}

std::vector<Iri> ToldGraph::ancestors(const Iri& a) const {
    return to_iris(impl_->nodes, *impl_->closure(impl_->require(a), true));
}

std::vector<Iri> ToldGraph::descendants(const Iri& a) const {
    return to_iris(impl_->nodes, *impl_->closure(impl_->require(a), false));
}

const std::map<Iri, std::vector<ConceptExpr>>& ToldGraph::instance_types() const noexcept {
    return impl_->types;
}

std::string ToldGraph::dump_closure() const {
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < impl_->nodes.size(); ++i) {
        for (auto j : *impl_->closure(static_cast<Impl::Index>(i), true)) {
            if (j == i) continue;
            lines.push_back(impl_->nodes[i].str() + "\t" + impl_->nodes[j].str());
        }
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

bool entails_named(const ToldGraph& g, const Iri& a, const Iri& b) {
    const auto& impl = *g.impl_;
    return impl.reachable(impl.require(a), impl.require(b));
}

// Recursive structural rules. Re-entering a (sub, super) pair that is still
// being evaluated answers false, which keeps every derivation finite and
// every `true` backed by a well-founded proof.
class StructuralReasoner {
public:
    explicit StructuralReasoner(const ToldGraph& g) : g_(*g.impl_) {}

    bool entails(const ConceptExpr& sub, const ConceptExpr& sup) {
        if (sub.is_atomic()) {
            if (auto id = g_.find(sub.iri())) return entails_atomic(*id, sup);
        }
        Key key{0, &sub, 0, &sup};
        return guarded(key, [&] { return entails_general(sub, sup); });
    }

    bool entails_atomic(ToldGraph::Impl::Index a, const ConceptExpr& sup) {
        Key key{1, nullptr, a, &sup};
        return guarded(key, [&] { return atomic_rules(a, sup); });
    }

private:
    using Key = std::tuple<int, const ConceptExpr*, ToldGraph::Impl::Index, const ConceptExpr*>;

    template <typename F>
    bool guarded(const Key& key, F&& body) {
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (!active_.insert(key).second) return false;
        bool r = body();
        active_.erase(key);
        memo_.emplace(key, r);
        return r;
    }

    bool atomic_rules(ToldGraph::Impl::Index a, const ConceptExpr& sup) {
        switch (sup.kind()) {
            case ConceptKind::Top:
                return true;
            case ConceptKind::Atomic: {
                auto b = g_.find(sup.iri());
                if (b && g_.reachable(a, *b)) return true;
                break;
            }
            case ConceptKind::And:
                return std::all_of(sup.operands().begin(), sup.operands().end(),
                                   [&](const ConceptExpr& d) { return entails_atomic(a, d); });
            case ConceptKind::Or:
                if (std::any_of(sup.operands().begin(), sup.operands().end(),
                                [&](const ConceptExpr& d) { return entails_atomic(a, d); }))
                    return true;
                break;
            default:
                break;
        }
        for (auto x : *g_.closure(a, true)) {
            for (const auto& told : g_.told[x])
                if (entails(told, sup)) return true;
        }
        return false;
    }

    bool entails_general(const ConceptExpr& sub, const ConceptExpr& sup) {
        if (sub == sup) return true;
        if (sup.kind() == ConceptKind::Top || sub.kind() == ConceptKind::Bottom) return true;
        if (sup.kind() == ConceptKind::And)
            return std::all_of(sup.operands().begin(), sup.operands().end(),
                               [&](const ConceptExpr& d) { return entails(sub, d); });
        if (sub.kind() == ConceptKind::Or)
            return std::all_of(sub.operands().begin(), sub.operands().end(),
                               [&](const ConceptExpr& c) { return entails(c, sup); });
        if (sub.is_atomic()) {
            // Not in the graph: only disjunctions can still match by equality.
            if (sup.kind() == ConceptKind::Or)
                return std::any_of(sup.operands().begin(), sup.operands().end(),
                                   [&](const ConceptExpr& d) { return entails(sub, d); });
            return false;
        }
        if (sub.kind() == ConceptKind::And &&
            std::any_of(sub.operands().begin(), sub.operands().end(),
                        [&](const ConceptExpr& c) { return entails(c, sup); }))
            return true;
        if (sup.kind() == ConceptKind::Or &&
            std::any_of(sup.operands().begin(), sup.operands().end(),
                        [&](const ConceptExpr& d) { return entails(sub, d); }))
            return true;
        if (sub.is_restriction() && sub.kind() == sup.kind() && sub.property() == sup.property() &&
            entails(sub.operand(), sup.operand()))
            return true;
        if (sub.kind() == ConceptKind::Not && sup.kind() == ConceptKind::Not &&
            entails(sup.operand(), sub.operand()))
            return true;
        if (!g_.general.empty() && !sub.is_named_or_constant()) {
            auto it = g_.general.find(canonical_form(sub));
            if (it != g_.general.end()) {
                for (const auto& implied : it->second)
                    if (entails(implied, sup)) return true;
            }
        }
        return false;
    }

    const ToldGraph::Impl& g_;
    std::set<Key> active_;
    std::map<Key, bool> memo_;
};

bool entails_structural(const ToldGraph& g, const ConceptExpr& sub, const ConceptExpr& super) {
    return StructuralReasoner(g).entails(sub, super);
}

namespace {

// Beyond told edges, a named concept reaches `e` only through a told
// superclass expression of one of its ancestors.
void add_told_descendants(const ToldGraph& g, const ConceptExpr& e, std::set<Iri>& out) {
    for (const auto& holder : g.nodes()) {
        const auto& told = g.told_supers(holder);
        bool hit = std::any_of(told.begin(), told.end(), [&](const ConceptExpr& t) {
            return entails_structural(g, t, e);
        });
        if (!hit) continue;
        for (auto& d : g.descendants(holder)) out.insert(d);
    }
}

std::set<Iri> descendants_of(const ToldGraph& g, const ConceptExpr& e) {
    switch (e.kind()) {
        case ConceptKind::Top:
            return {g.nodes().begin(), g.nodes().end()};
        case ConceptKind::Atomic: {
            std::set<Iri> out;
            if (g.contains(e.iri())) {
                auto d = g.descendants(e.iri());
                out.insert(d.begin(), d.end());
            }
            // Also reached through a complex told superclass, below.
            add_told_descendants(g, e, out);
            return out;
        }
        case ConceptKind::And: {
            std::set<Iri> acc = descendants_of(g, e.operands().front());
            for (std::size_t i = 1; i < e.operands().size() && !acc.empty(); ++i) {
                auto next = descendants_of(g, e.operands()[i]);
                std::set<Iri> both;
                std::set_intersection(acc.begin(), acc.end(), next.begin(), next.end(),
                                      std::inserter(both, both.end()));
                acc = std::move(both);
            }
            return acc;
        }
        default:
            break;
    }
    std::set<Iri> out;
    if (e.kind() == ConceptKind::Or) {
        for (const auto& d : e.operands()) {
            auto part = descendants_of(g, d);
            out.insert(part.begin(), part.end());
        }
    }
    add_told_descendants(g, e, out);
    return out;
}

}  // namespace

std::set<Iri> named_descendants(const ToldGraph& g, const ConceptExpr& e) {
    return descendants_of(g, e);
}

bool is_instance_of(const ToldGraph& g, const Iri& individual, const ConceptExpr& c) {
    const auto& types = g.instance_types();
    auto it = types.find(individual);
    if (it == types.end()) return false;
    StructuralReasoner r(g);
    return std::any_of(it->second.begin(), it->second.end(),
                       [&](const ConceptExpr& t) { return r.entails(t, c); });
}

bool common_instance_exists(const ToldGraph& g, const ConceptExpr& c, const ConceptExpr& d) {
    for (const auto& [ind, types] : g.instance_types()) {
        (void)types;
        if (is_instance_of(g, ind, c) && is_instance_of(g, ind, d)) return true;
    }
    return false;
}

bool assumed_disjoint(const ToldGraph& g, const ConceptExpr& c, const ConceptExpr& d) {
    if (entails_structural(g, c, d) || entails_structural(g, d, c)) return false;
    if (common_instance_exists(g, c, d)) return false;
    auto dc = named_descendants(g, c);
    if (dc.empty()) return true;
    auto dd = named_descendants(g, d);
    return std::none_of(dd.begin(), dd.end(), [&](const Iri& x) { return dc.count(x) > 0; });
}

std::set<Iri> siblings(const ToldGraph& g, const Iri& a) {
    std::set<Iri> out;
    for (const auto& p : g.parents(a))
        for (auto& c : g.children(p))
            if (c != a) out.insert(c);
    return out;
}

}  // namespace ontoforge
