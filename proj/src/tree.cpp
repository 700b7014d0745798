#include "qmst/tree.hpp"

#include <stdexcept>

#include "qmst/disjoint_set.hpp"

namespace qmst {

int TreeGenotype::popcount() const {
    int c = 0;
    for (std::uint8_t b : bits) c += b != 0;
    return c;
}

std::string to_bitstring(const TreeGenotype& g) {
    std::string s;
    s.reserve(g.bits.size());
    for (std::uint8_t b : g.bits) s.push_back(b ? '1' : '0');
    return s;
}

TreeGenotype from_bitstring(std::string_view s) {
    TreeGenotype g;
    g.bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("genotype string must contain only 0 and 1");
        }
        g.bits.push_back(c == '1');
    }
    return g;
}

bool dominates(const ObjectivePair& a, const ObjectivePair& b) {
    return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

bool is_spanning_tree(const Instance& inst, const TreeGenotype& g) {
    if (static_cast<int>(g.bits.size()) != inst.edge_count()) return false;
    if (g.popcount() != inst.vertex_count() - 1) return false;
    DisjointSet dsu(inst.vertex_count());
    for (const EdgeSpec& e : inst.edges()) {
        if (g.bits[e.id] && !dsu.unite(e.a, e.b)) return false;
    }
    return dsu.components() == 1;
}

std::optional<std::string> spanning_tree_violation(const Instance& inst, const TreeGenotype& g) {
    if (static_cast<int>(g.bits.size()) != inst.edge_count()) {
        return "genotype length " + std::to_string(g.bits.size()) + " does not match edge count " +
               std::to_string(inst.edge_count());
    }
    const int want = inst.vertex_count() - 1;
    if (g.popcount() != want) {
        return "selected " + std::to_string(g.popcount()) + " edges, a spanning tree needs " +
               std::to_string(want);
    }
    DisjointSet dsu(inst.vertex_count());
    for (const EdgeSpec& e : inst.edges()) {
        if (g.bits[e.id] && !dsu.unite(e.a, e.b)) {
            return "selected edges contain a cycle through edge " + std::to_string(e.id);
        }
    }
    if (dsu.components() != 1) {
        return "selected edges do not connect all vertices";
    }
    return std::nullopt;
}

TreeGenotype repair(const Instance& inst, const TreeGenotype& g, Rng& rng) {
    const int m = inst.edge_count();
    const int target = inst.vertex_count() - 1;
    std::vector<int> present, absent;
    present.reserve(m);
    absent.reserve(m);
    for (int i = 0; i < m; ++i) {
        const bool on = i < static_cast<int>(g.bits.size()) && g.bits[i];
        (on ? present : absent).push_back(i);
    }
    shuffle_inplace(present, rng);
    shuffle_inplace(absent, rng);

    DisjointSet dsu(inst.vertex_count());
    TreeGenotype t;
    t.bits.assign(m, 0);
    int chosen = 0;
    auto take_from = [&](const std::vector<int>& ids) {
        for (int id : ids) {
            if (chosen == target) return;
            const EdgeSpec& e = inst.edges()[id];
            if (dsu.unite(e.a, e.b)) {
                t.bits[id] = 1;
                ++chosen;
            }
        }
    };
    take_from(present);
    take_from(absent);
    return t;
}

TreeGenotype random_tree(const Instance& inst, Rng& rng) {
    TreeGenotype zeros;
    zeros.bits.assign(inst.edge_count(), 0);
    return repair(inst, zeros, rng);
}

AggregatedChance aggregate(const Instance& inst, const TreeGenotype& g, WeightKind kind) {
    AggregatedChance agg;
    auto add = [&agg](const RoughFuzzyWeight& w) {
        agg.lower.lo += w.base.lo + w.a3;
        agg.lower.mode += w.base.mode + w.a3;
        agg.lower.hi += w.base.hi + w.a3;
        agg.width += w.a4 - w.a3;
    };
    if (kind == WeightKind::linear) {
        for (const EdgeSpec& e : inst.edges()) {
            if (g.bits[e.id]) add(e.weight);
        }
    } else {
        std::vector<int> selected;
        selected.reserve(inst.vertex_count());
        for (int i = 0; i < inst.edge_count(); ++i) {
            if (g.bits[i]) selected.push_back(i);
        }
        for (std::size_t i = 0; i < selected.size(); ++i) {
            for (std::size_t j = i + 1; j < selected.size(); ++j) {
                if (const RoughFuzzyWeight* w = inst.quad_weight(selected[i], selected[j])) {
                    add(*w);
                }
            }
        }
    }
    return agg;
}

ObjectivePair evaluate(const EvalContext& ctx, const TreeGenotype& g) {
    const AggregatedChance lin = aggregate(*ctx.instance, g, WeightKind::linear);
    const AggregatedChance quad = aggregate(*ctx.instance, g, WeightKind::quadratic);
    return {chance_reduce(lin, ctx.levels.alpha1, ctx.levels.beta1),
            chance_reduce(quad, ctx.levels.alpha2, ctx.levels.beta2)};
}

}  // namespace qmst
