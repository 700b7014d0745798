#include <algorithm>
#include <doctest.h>

#include "qmst/exact.hpp"
#include "qmst/instance.hpp"
#include "test_util.hpp"

using namespace qmst;
using testutil::near;

namespace {

RoughFuzzyWeight unit_weight(double seed) {
    return RoughFuzzyWeight{{seed, seed + 1.0, seed + 2.0}, 0.0, 0.5, -0.5, 1.0};
}

Instance complete_graph(int n) {
    std::vector<EdgeSpec> edges;
    double s = 1.0;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            EdgeSpec e;
            e.a = a;
            e.b = b;
            e.weight = unit_weight(s);
            s += 0.25;
            edges.push_back(e);
        }
    }
    return Instance(n, std::move(edges), {});
}

Instance path_graph(int n) {
    std::vector<EdgeSpec> edges;
    for (int v = 0; v + 1 < n; ++v) {
        EdgeSpec e;
        e.a = v;
        e.b = v + 1;
        e.weight = unit_weight(1.0 + v);
        edges.push_back(e);
    }
    return Instance(n, std::move(edges), {});
}

}  // namespace

TEST_CASE("tree counting against closed forms") {
    CHECK(kirchhoff_count(complete_graph(4)) == 16.0);
    CHECK(collect_spanning_trees(complete_graph(4)).size() == 16);
    CHECK(kirchhoff_count(path_graph(5)) == 1.0);
    CHECK(collect_spanning_trees(path_graph(5)).size() == 1);
    CHECK(kirchhoff_count(complete_graph(3)) == 3.0);
    CHECK(collect_spanning_trees(complete_graph(3)).size() == 3);
    // Cayley: n^(n-2)
    CHECK(kirchhoff_count(complete_graph(7)) == 16807.0);
}

TEST_CASE("enumeration emits each tree once and matches the determinant") {
    const Instance& inst = paper_instance();
    std::size_t count = 0;
    std::vector<TreeGenotype> sample;
    enumerate_spanning_trees(inst, [&](const TreeGenotype& t) {
        ++count;
        if (count % 997 == 0) sample.push_back(t);
        REQUIRE(t.popcount() == 8);
    });
    CHECK(static_cast<double>(count) == kirchhoff_count(inst));
    for (const TreeGenotype& t : sample) CHECK(is_spanning_tree(inst, t));

    for (int seed = 1; seed <= 5; ++seed) {
        const Instance rnd = generate_random(6, 9, static_cast<std::uint64_t>(seed));
        const std::vector<TreeGenotype> trees = collect_spanning_trees(rnd);
        CHECK(static_cast<double>(trees.size()) == kirchhoff_count(rnd));
        std::vector<TreeGenotype> sorted = trees;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
}

TEST_CASE("enumeration guard") {
    // complete graph on 30 vertices: 30^28 trees, far over the guard
    const Instance big = generate_random(30, 435, 1);
    CHECK(kirchhoff_count(big) > kEnumerationGuard);
    CHECK_THROWS_AS(collect_spanning_trees(big), BudgetExceeded);
    try {
        collect_spanning_trees(big);
    } catch (const BudgetExceeded& e) {
        CHECK(e.count() > kEnumerationGuard);
    }
    const EvalContext ctx{&big, {0.9, 0.9, 0.4, 0.4}};
    CHECK_THROWS_AS((void)exact_pareto_front(ctx), BudgetExceeded);
    CHECK_THROWS_AS((void)epsilon_constraint_solve(ctx, 1, 1e18), BudgetExceeded);
}

TEST_CASE("epsilon solver rejects unknown objectives") {
    const EvalContext ctx{&paper_instance(), {0.9, 0.9, 0.4, 0.4}};
    CHECK_THROWS_AS((void)epsilon_constraint_solve(ctx, 3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)epsilon_constraint_solve(ctx, 0, 1.0), std::invalid_argument);
}

TEST_CASE("exact front is pairwise nondominated and undominated") {
    const Instance inst = generate_random(7, 12, 3);
    const EvalContext ctx{&inst, {0.9, 0.9, 0.4, 0.4}};
    const ExactFront front = exact_pareto_front(ctx);
    REQUIRE(!front.entries.empty());
    for (std::size_t i = 0; i < front.entries.size(); ++i) {
        CHECK(is_spanning_tree(inst, front.entries[i].trees.front()));
        CHECK(evaluate(ctx, front.entries[i].trees.front()) == front.entries[i].objectives);
        for (std::size_t j = 0; j < front.entries.size(); ++j) {
            if (i != j) {
                REQUIRE(!dominates(front.entries[i].objectives, front.entries[j].objectives));
            }
        }
    }
    // no tree anywhere dominates a front entry
    enumerate_spanning_trees(inst, [&](const TreeGenotype& t) {
        const ObjectivePair obj = evaluate(ctx, t);
        for (const ExactFrontEntry& e : front.entries) {
            REQUIRE(!dominates(obj, e.objectives));
        }
    });
}

TEST_CASE("benchmark front reaches the known compromise point") {
    const EvalContext ctx{&paper_instance(), {0.9, 0.9, 0.4, 0.4}};
    const ExactFront front = exact_pareto_front(ctx);
    const bool reached = std::any_of(
        front.entries.begin(), front.entries.end(), [](const ExactFrontEntry& e) {
            return e.objectives.f1 <= 128.56 + 1e-6 && e.objectives.f2 <= 11.94 + 1e-6;
        });
    CHECK(reached);
}

TEST_CASE("degenerate fronts") {
    const Instance single = generate_random(2, 1, 7);
    const EvalContext ctx{&single, {0.5, 0.5, 0.5, 0.5}};
    CHECK(exact_pareto_front(ctx).entries.size() == 1);

    // all linear weights identical and no quadratic cost: one objective point
    std::vector<EdgeSpec> edges;
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            EdgeSpec e;
            e.a = a;
            e.b = b;
            e.weight = unit_weight(2.0);
            edges.push_back(e);
        }
    }
    const Instance uniform(4, std::move(edges), {});
    const EvalContext uctx{&uniform, {0.7, 0.7, 0.6, 0.6}};
    const ExactFront plain = exact_pareto_front(uctx);
    REQUIRE(plain.entries.size() == 1);
    CHECK(plain.entries.front().trees.size() == 1);

    const ExactFront tied = exact_pareto_front(uctx, true);
    REQUIRE(tied.entries.size() == 1);
    CHECK(tied.entries.front().trees.size() == 16);
    // representative is the lexicographically lowest tied tree
    CHECK(plain.entries.front().trees.front() == tied.entries.front().trees.front());
}

TEST_CASE("epsilon constraint solving") {
    const Instance inst = generate_random(7, 12, 4);
    const EvalContext ctx{&inst, {0.8, 0.8, 0.3, 0.3}};
    const ExactFront front = exact_pareto_front(ctx);

    const double inf = std::numeric_limits<double>::infinity();
    const EpsilonResult unconstrained = epsilon_constraint_solve(ctx, 1, inf);
    CHECK(unconstrained.objectives == front.entries.front().objectives);

    const EpsilonResult other_way = epsilon_constraint_solve(ctx, 2, inf);
    CHECK(other_way.objectives == front.entries.back().objectives);

    double min_f2 = inf;
    for (const ExactFrontEntry& e : front.entries) min_f2 = std::min(min_f2, e.objectives.f2);
    CHECK_THROWS_AS((void)epsilon_constraint_solve(ctx, 1, std::nextafter(min_f2, -inf)),
                    InfeasibleEpsilon);
}

TEST_CASE("epsilon sweep traces exactly the pareto front") {
    const Instance inst = generate_random(7, 14, 5);
    for (double beta : {0.4, 0.8}) {
        const EvalContext ctx{&inst, {0.9, 0.9, beta, beta}};
        const ExactFront front = exact_pareto_front(ctx);
        const std::vector<EpsilonResult> sweep = epsilon_sweep(ctx, 1);
        REQUIRE(sweep.size() == front.entries.size());
        std::vector<ObjectivePair> swept;
        for (const EpsilonResult& r : sweep) swept.push_back(r.objectives);
        std::sort(swept.begin(), swept.end());
        for (std::size_t i = 0; i < swept.size(); ++i) {
            REQUIRE(swept[i] == front.entries[i].objectives);
        }
    }
}
