#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "qmst/tree.hpp"

namespace qmst {

// Exact solving enumerates spanning trees; refuse instances whose Kirchhoff
// count exceeds this.
inline constexpr double kEnumerationGuard = 1e7;

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(double count);
    double count() const { return count_; }

private:
    double count_;
};

class InfeasibleEpsilon : public std::runtime_error {
public:
    explicit InfeasibleEpsilon(double eps);
};

// Spanning-tree count via a Laplacian cofactor determinant. Exact after
// rounding while the count stays below 2^53.
double kirchhoff_count(const Instance& inst);

// Every spanning tree exactly once, in a deterministic order. Throws
// BudgetExceeded when the Kirchhoff count is above the guard.
void enumerate_spanning_trees(const Instance& inst,
                              const std::function<void(const TreeGenotype&)>& emit);

std::vector<TreeGenotype> collect_spanning_trees(const Instance& inst);

struct ExactFrontEntry {
    ObjectivePair objectives;
    std::vector<TreeGenotype> trees;  // sorted; front() is the representative
};

// Entries sorted by f1 and pairwise nondominated.
struct ExactFront {
    std::vector<ExactFrontEntry> entries;
};

// Nondominated filter over all spanning trees. Objective-identical trees keep
// one representative (lowest bit string) unless keep_ties is set.
ExactFront exact_pareto_front(const EvalContext& ctx, bool keep_ties = false);

struct EpsilonResult {
    TreeGenotype tree;
    ObjectivePair objectives;
};

// Minimizes the primary objective (1 or 2) over trees whose other objective
// is at most eps. Ties break toward the other objective, then the lowest bit
// string. Throws InfeasibleEpsilon when no tree qualifies.
EpsilonResult epsilon_constraint_solve(const EvalContext& ctx, int primary, double eps);

// Full trace of the front: repeatedly solve, then tighten eps just below the
// constrained objective of the solution found.
std::vector<EpsilonResult> epsilon_sweep(const EvalContext& ctx, int primary = 1);

}  // namespace qmst
