#include "qmst/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace qmst {

namespace {

std::string count_text(double count) {
    char buf[64];
    std::snprintf(buf, sizeof buf, count < 1e15 ? "%.0f" : "%.3e", count);
    return buf;
}

}  // namespace

BudgetExceeded::BudgetExceeded(double count)
    : std::runtime_error("enumeration budget exceeded: " + count_text(count) +
                         " spanning trees, guard is " + count_text(kEnumerationGuard)),
      count_(count) {}

InfeasibleEpsilon::InfeasibleEpsilon(double eps)
    : std::runtime_error("no spanning tree satisfies the epsilon bound " + std::to_string(eps)) {}

double kirchhoff_count(const Instance& inst) {
    const int d = inst.vertex_count() - 1;  // any cofactor of the Laplacian
    std::vector<std::vector<long double>> a(d, std::vector<long double>(d, 0.0L));
    for (const EdgeSpec& e : inst.edges()) {
        if (e.a < d) a[e.a][e.a] += 1.0L;
        if (e.b < d) a[e.b][e.b] += 1.0L;
        if (e.a < d && e.b < d) {
            a[e.a][e.b] -= 1.0L;
            a[e.b][e.a] -= 1.0L;
        }
    }
    long double det = 1.0L;
    for (int c = 0; c < d; ++c) {
        int pivot = c;
        for (int r = c + 1; r < d; ++r) {
            if (std::fabs(a[r][c]) > std::fabs(a[pivot][c])) pivot = r;
        }
        if (a[pivot][c] == 0.0L) return 0.0;
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < d; ++r) {
            const long double factor = a[r][c] / a[c][c];
            for (int k = c; k < d; ++k) a[r][k] -= factor * a[c][k];
        }
    }
    det = std::fabs(det);
    if (det < 9.0e15L) det = std::roundl(det);
    return static_cast<double>(det);
}

namespace {

// Union-find without path compression so that unions can be undone in LIFO
// order during the enumeration recursion.
class RollbackDsu {
public:
    explicit RollbackDsu(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (size_[x] < size_[y]) std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
        trail_.push_back(y);
        return true;
    }

    void rollback() {
        const int y = trail_.back();
        trail_.pop_back();
        size_[parent_[y]] -= size_[y];
        parent_[y] = y;
    }

    const std::vector<int>& parents() const { return parent_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> trail_;
};

class Enumerator {
public:
    Enumerator(const Instance& inst, const std::function<void(const TreeGenotype&)>& emit)
        : inst_(inst), emit_(emit), dsu_(inst.vertex_count()), scratch_(inst.vertex_count()) {
        current_.bits.assign(inst.edge_count(), 0);
    }

    void run() { recurse(0, 0); }

private:
    void recurse(int next, int chosen) {
        if (chosen == inst_.vertex_count() - 1) {
            emit_(current_);
            return;
        }
        if (next == inst_.edge_count()) return;
        const EdgeSpec& e = inst_.edges()[next];
        if (dsu_.find(e.a) != dsu_.find(e.b)) {
            dsu_.unite(e.a, e.b);
            current_.bits[next] = 1;
            recurse(next + 1, chosen + 1);
            current_.bits[next] = 0;
            dsu_.rollback();
        }
        if (connected_without(next)) recurse(next + 1, chosen);
    }

    // Can the chosen edges plus every edge after `skipped` still span the graph?
    bool connected_without(int skipped) {
        scratch_ = dsu_.parents();
        int components = inst_.vertex_count();
        for (int v = 0; v < inst_.vertex_count(); ++v) {
            if (scratch_[v] != v) --components;
        }
        auto find = [&](int x) {
            while (scratch_[x] != x) {
                scratch_[x] = scratch_[scratch_[x]];
                x = scratch_[x];
            }
            return x;
        };
        for (int i = skipped + 1; i < inst_.edge_count() && components > 1; ++i) {
            const EdgeSpec& e = inst_.edges()[i];
            const int ra = find(e.a);
            const int rb = find(e.b);
            if (ra != rb) {
                scratch_[ra] = rb;
                --components;
            }
        }
        return components == 1;
    }

    const Instance& inst_;
    const std::function<void(const TreeGenotype&)>& emit_;
    RollbackDsu dsu_;
    std::vector<int> scratch_;
    TreeGenotype current_;
};

}  // namespace

void enumerate_spanning_trees(const Instance& inst,
                              const std::function<void(const TreeGenotype&)>& emit) {
    const double count = kirchhoff_count(inst);
    if (count > kEnumerationGuard) throw BudgetExceeded(count);
    Enumerator(inst, emit).run();
}

std::vector<TreeGenotype> collect_spanning_trees(const Instance& inst) {
    std::vector<TreeGenotype> out;
    enumerate_spanning_trees(inst, [&](const TreeGenotype& t) { out.push_back(t); });
    return out;
}

namespace {

struct ArchiveEntry {
    double f2;
    std::vector<TreeGenotype> trees;
};

// Online nondominated archive for two minimized objectives: keyed by f1 with
// strictly decreasing f2.
class ParetoArchive {
public:
    explicit ParetoArchive(bool keep_ties) : keep_ties_(keep_ties) {}

    void offer(const ObjectivePair& obj, const TreeGenotype& tree) {
        auto it = by_f1_.lower_bound(obj.f1);
        if (it != by_f1_.begin()) {
            const auto& better_f1 = *std::prev(it);
            if (better_f1.second.f2 <= obj.f2) return;  // dominated
        }
        if (it != by_f1_.end() && it->first == obj.f1) {
            if (it->second.f2 < obj.f2) return;  // dominated
            if (it->second.f2 == obj.f2) {
                if (keep_ties_) {
                    it->second.trees.push_back(tree);
                } else if (tree < it->second.trees.front()) {
                    it->second.trees.front() = tree;
                }
                return;
            }
        }
        while (it != by_f1_.end() && it->second.f2 >= obj.f2) it = by_f1_.erase(it);
        by_f1_.emplace_hint(it, obj.f1, ArchiveEntry{obj.f2, {tree}});
    }

    ExactFront take() {
        ExactFront front;
        front.entries.reserve(by_f1_.size());
        for (auto& [f1, entry] : by_f1_) {
            std::sort(entry.trees.begin(), entry.trees.end());
            front.entries.push_back({{f1, entry.f2}, std::move(entry.trees)});
        }
        return front;
    }

private:
    bool keep_ties_;
    std::map<double, ArchiveEntry> by_f1_;
};

}  // namespace

ExactFront exact_pareto_front(const EvalContext& ctx, bool keep_ties) {
    ParetoArchive archive(keep_ties);
    enumerate_spanning_trees(*ctx.instance,
                             [&](const TreeGenotype& t) { archive.offer(evaluate(ctx, t), t); });
    return archive.take();
}

EpsilonResult epsilon_constraint_solve(const EvalContext& ctx, int primary, double eps) {
    if (primary != 1 && primary != 2) {
        throw std::invalid_argument("epsilon_constraint_solve: primary objective must be 1 or 2");
    }
    bool found = false;
    EpsilonResult best;
    enumerate_spanning_trees(*ctx.instance, [&](const TreeGenotype& t) {
        const ObjectivePair obj = evaluate(ctx, t);
        const double value = primary == 1 ? obj.f1 : obj.f2;
        const double constrained = primary == 1 ? obj.f2 : obj.f1;
        if (constrained > eps) return;
        if (found) {
            const double best_value = primary == 1 ? best.objectives.f1 : best.objectives.f2;
            const double best_constrained = primary == 1 ? best.objectives.f2 : best.objectives.f1;
            if (value > best_value) return;
            if (value == best_value) {
                if (constrained > best_constrained) return;
                if (constrained == best_constrained && !(t < best.tree)) return;
            }
        }
        best = {t, obj};
        found = true;
    });
    if (!found) throw InfeasibleEpsilon(eps);
    return best;
}

std::vector<EpsilonResult> epsilon_sweep(const EvalContext& ctx, int primary) {
    std::vector<EpsilonResult> out;
    double eps = std::numeric_limits<double>::infinity();
    for (;;) {
        EpsilonResult r;
        try {
            r = epsilon_constraint_solve(ctx, primary, eps);
        } catch (const InfeasibleEpsilon&) {
            break;
        }
        out.push_back(r);
        const double constrained = primary == 1 ? r.objectives.f2 : r.objectives.f1;
        eps = std::nextafter(constrained, -std::numeric_limits<double>::infinity());
    }
    return out;
}

}  // namespace qmst
