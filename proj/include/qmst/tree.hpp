#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmst/instance.hpp"
#include "qmst/rng.hpp"
#include "qmst/uncertainty.hpp"

namespace qmst {

// Bit string over canonical edge ids; set bits select the edges of a
// candidate spanning tree.
struct TreeGenotype {
    std::vector<std::uint8_t> bits;

    int popcount() const;

    friend bool operator==(const TreeGenotype&, const TreeGenotype&) = default;
    friend bool operator<(const TreeGenotype& x, const TreeGenotype& y) {
        return x.bits < y.bits;
    }
};

std::string to_bitstring(const TreeGenotype& g);
TreeGenotype from_bitstring(std::string_view s);  // throws std::invalid_argument

struct ObjectivePair {
    double f1 = 0.0;
    double f2 = 0.0;

    friend bool operator==(const ObjectivePair&, const ObjectivePair&) = default;
    friend bool operator<(const ObjectivePair& x, const ObjectivePair& y) {
        return x.f1 != y.f1 ? x.f1 < y.f1 : x.f2 < y.f2;
    }
};

// Pareto dominance for minimization: no worse in both, strictly better in one.
bool dominates(const ObjectivePair& a, const ObjectivePair& b);

struct EvalContext {
    const Instance* instance = nullptr;
    ConfidenceLevels levels;
};

enum class WeightKind { linear, quadratic };

bool is_spanning_tree(const Instance& inst, const TreeGenotype& g);

// Human-readable description of the first violated spanning-tree constraint,
// or nullopt for a valid tree.
std::optional<std::string> spanning_tree_violation(const Instance& inst, const TreeGenotype& g);

// Keeps selected edges that do not close a cycle (scanned in shuffled order),
// then completes the tree with shuffled remaining edges. Valid trees pass
// through unchanged.
TreeGenotype repair(const Instance& inst, const TreeGenotype& g, Rng& rng);

TreeGenotype random_tree(const Instance& inst, Rng& rng);

// Sum of the selected linear weights, or of the quadratic weights over every
// unordered pair of selected edges that carries one (each pair counted once).
AggregatedChance aggregate(const Instance& inst, const TreeGenotype& g, WeightKind kind);

// Crisp objective bounds of the tree at the context's confidence levels.
ObjectivePair evaluate(const EvalContext& ctx, const TreeGenotype& g);

}  // namespace qmst
