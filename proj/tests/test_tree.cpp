#include <doctest.h>

#include "qmst/instance.hpp"
#include "qmst/tree.hpp"
#include "test_util.hpp"

using namespace qmst;
using testutil::near;

namespace {

Instance scaled_benchmark(double k) {
    const Instance& inst = paper_instance();
    auto scale = [k](RoughFuzzyWeight w) {
        w.base.lo *= k;
        w.base.mode *= k;
        w.base.hi *= k;
        w.a1 *= k;
        w.a2 *= k;
        w.a3 *= k;
        w.a4 *= k;
        return w;
    };
    std::vector<EdgeSpec> edges = inst.edges();
    for (EdgeSpec& e : edges) e.weight = scale(e.weight);
    std::vector<QuadSpec> quads = inst.quads();
    for (QuadSpec& q : quads) q.weight = scale(q.weight);
    return Instance(inst.vertex_count(), std::move(edges), std::move(quads));
}

}  // namespace

TEST_CASE("spanning tree recognition") {
    const Instance& inst = paper_instance();
    CHECK(is_spanning_tree(inst, testutil::benchmark_tree()));

    TreeGenotype zeros;
    zeros.bits.assign(18, 0);
    CHECK(!is_spanning_tree(inst, zeros));
    CHECK(spanning_tree_violation(inst, zeros)->find("selected 0 edges") != std::string::npos);

    // e12, e15, e16, e23, e26, e34, e36, e45: eight edges with a 1-2-6 cycle
    const TreeGenotype cyclic = testutil::tree_of(18, {0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(!is_spanning_tree(inst, cyclic));
    CHECK(spanning_tree_violation(inst, cyclic)->find("cycle") != std::string::npos);

    TreeGenotype short_one;
    short_one.bits.assign(17, 0);
    CHECK(!is_spanning_tree(inst, short_one));

    CHECK_THROWS_AS((void)from_bitstring("0102"), std::invalid_argument);
    CHECK(to_bitstring(testutil::benchmark_tree()) == "100011010010001101");
}

TEST_CASE("repair yields valid trees and keeps valid input unchanged") {
    const Instance& inst = paper_instance();
    Rng rng(3);

    const TreeGenotype valid = testutil::benchmark_tree();
    CHECK(repair(inst, valid, rng) == valid);

    TreeGenotype zeros, ones;
    zeros.bits.assign(18, 0);
    ones.bits.assign(18, 1);
    CHECK(is_spanning_tree(inst, repair(inst, zeros, rng)));
    CHECK(is_spanning_tree(inst, repair(inst, ones, rng)));

    for (int i = 0; i < 10000; ++i) {
        TreeGenotype g;
        g.bits.assign(18, 0);
        for (auto& b : g.bits) b = rand_below(rng, 2);
        REQUIRE(is_spanning_tree(inst, repair(inst, g, rng)));
    }

    Rng a(42), b(42);
    CHECK(random_tree(inst, a) == random_tree(inst, b));
    CHECK(random_tree(inst, a).popcount() == 8);

    const Instance tiny = generate_random(2, 1, 1);
    Rng c(1);
    CHECK(random_tree(tiny, c).bits == std::vector<std::uint8_t>{1});
}

TEST_CASE("aggregation over the benchmark tree") {
    const Instance& inst = paper_instance();
    const TreeGenotype tree = testutil::benchmark_tree();

    const AggregatedChance lin = aggregate(inst, tree, WeightKind::linear);
    CHECK(near(lin.lower.lo, 74.6, 1e-9));
    CHECK(near(lin.lower.mode, 87.6, 1e-9));
    CHECK(near(lin.lower.hi, 100.8, 1e-9));
    CHECK(near(lin.width, 24.2, 1e-9));

    const AggregatedChance quad = aggregate(inst, tree, WeightKind::quadratic);
    CHECK(near(quad.lower.lo, 8.4, 1e-9));
    CHECK(near(quad.lower.mode, 9.0, 1e-9));
    CHECK(near(quad.lower.hi, 9.6, 1e-9));
    CHECK(near(quad.width, 1.7, 1e-9));

    // the linear aggregate is exactly the affine sum of the selected weights
    std::vector<WeightedTerm> terms;
    for (const EdgeSpec& e : inst.edges()) {
        if (tree.bits[e.id]) terms.push_back({e.weight.base, 1.0, e.weight.a3});
    }
    const TriangularFuzzy summed = tfv_affine_sum(terms);
    CHECK(lin.lower == summed);
}

TEST_CASE("aggregation without quadratic pairs") {
    std::vector<EdgeSpec> edges;
    for (int i = 1; i < 4; ++i) {
        EdgeSpec e;
        e.a = 0;
        e.b = i;
        e.weight = RoughFuzzyWeight{{1, 2, 3}, 0, 1, -1, 2};
        edges.push_back(e);
    }
    const Instance star(4, std::move(edges), {});
    const TreeGenotype all = testutil::tree_of(3, {0, 1, 2});
    const AggregatedChance quad = aggregate(star, all, WeightKind::quadratic);
    CHECK(quad.lower == TriangularFuzzy{0, 0, 0});
    CHECK(quad.width == 0.0);

    const EvalContext ctx{&star, {}};
    CHECK(evaluate(ctx, all).f2 == 0.0);
}

TEST_CASE("benchmark tree objective values") {
    const Instance& inst = paper_instance();
    const TreeGenotype tree = testutil::benchmark_tree();

    EvalContext ctx{&inst, {0.9, 0.9, 0.4, 0.4}};
    ObjectivePair obj = evaluate(ctx, tree);
    CHECK(near(obj.f1, 128.56, 1e-9));
    CHECK(near(obj.f2, 11.94, 1e-9));

    ctx.levels = {0.0, 0.0, 0.0, 0.0};
    obj = evaluate(ctx, tree);
    CHECK(near(obj.f1, 74.6, 1e-9));
}

TEST_CASE("dominance relation") {
    CHECK(dominates({1, 2}, {2, 2}));
    CHECK(!dominates({1, 2}, {2, 1}));
    CHECK(!dominates({2, 1}, {1, 2}));
    CHECK(!dominates({1, 2}, {1, 2}));
    CHECK(dominates({1, 2}, {1, 3}));
}

TEST_CASE("objectives are monotone in the confidence levels") {
    const Instance& inst = paper_instance();
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        const TreeGenotype tree = random_tree(inst, rng);
        double prev1 = -1e300, prev2 = -1e300;
        for (int i = 0; i <= 10; ++i) {
            const EvalContext ctx{&inst, {i / 10.0, i / 10.0, 0.35, 0.35}};
            const ObjectivePair obj = evaluate(ctx, tree);
            REQUIRE(obj.f1 >= prev1 - 1e-9);
            REQUIRE(obj.f2 >= prev2 - 1e-9);
            prev1 = obj.f1;
            prev2 = obj.f2;
        }
        prev1 = prev2 = -1e300;
        for (int i = 0; i <= 10; ++i) {
            const EvalContext ctx{&inst, {0.7, 0.7, i / 10.0, i / 10.0}};
            const ObjectivePair obj = evaluate(ctx, tree);
            REQUIRE(obj.f1 >= prev1 - 1e-9);
            REQUIRE(obj.f2 >= prev2 - 1e-9);
            prev1 = obj.f1;
            prev2 = obj.f2;
        }
    }
}

TEST_CASE("both reduction branches agree at one half") {
    const Instance& inst = paper_instance();
    Rng rng(6);
    for (int t = 0; t < 200; ++t) {
        const TreeGenotype tree = random_tree(inst, rng);
        for (WeightKind kind : {WeightKind::linear, WeightKind::quadratic}) {
            const AggregatedChance agg = aggregate(inst, tree, kind);
            for (int i = 0; i <= 10; ++i) {
                const double alpha = i / 10.0;
                REQUIRE(near(chance_reduce_lower(agg, alpha, 0.5),
                             chance_reduce_upper(agg, alpha, 0.5), 1e-12));
            }
        }
    }
}

TEST_CASE("uniform scaling multiplies both objectives and keeps dominance") {
    const Instance& inst = paper_instance();
    const Instance doubled = scaled_benchmark(2.0);
    const Instance tripled = scaled_benchmark(3.0);
    Rng rng(8);
    for (int t = 0; t < 50; ++t) {
        const TreeGenotype x = random_tree(inst, rng);
        const TreeGenotype y = random_tree(inst, rng);
        const ConfidenceLevels lv{rand_unit(rng), rand_unit(rng), rand_unit(rng), rand_unit(rng)};
        const ObjectivePair ox = evaluate({&inst, lv}, x);
        const ObjectivePair oy = evaluate({&inst, lv}, y);
        const ObjectivePair dx = evaluate({&doubled, lv}, x);
        const ObjectivePair tx = evaluate({&tripled, lv}, x);
        CHECK(dx.f1 == 2.0 * ox.f1);  // power-of-two scaling is exact
        CHECK(dx.f2 == 2.0 * ox.f2);
        CHECK(near(tx.f1, 3.0 * ox.f1, 1e-9 * std::max(1.0, std::fabs(ox.f1))));
        CHECK(near(tx.f2, 3.0 * ox.f2, 1e-9 * std::max(1.0, std::fabs(ox.f2))));
        const ObjectivePair dy = evaluate({&doubled, lv}, y);
        CHECK(dominates(ox, oy) == dominates(dx, dy));
    }
}

TEST_CASE("evaluation agrees with the bisection oracle") {
    const Instance& inst = paper_instance();
    Rng rng(9);
    for (int t = 0; t < 200; ++t) {
        const TreeGenotype tree = random_tree(inst, rng);
        const ConfidenceLevels lv{rand_unit(rng), rand_unit(rng), rand_unit(rng), rand_unit(rng)};
        const ObjectivePair obj = evaluate({&inst, lv}, tree);
        const AggregatedChance lin = aggregate(inst, tree, WeightKind::linear);
        const AggregatedChance quad = aggregate(inst, tree, WeightKind::quadratic);
        REQUIRE(near(obj.f1, chance_reduce_bisect_oracle(lin, lv.alpha1, lv.beta1), 1e-9));
        REQUIRE(near(obj.f2, chance_reduce_bisect_oracle(quad, lv.alpha2, lv.beta2), 1e-9));
    }
}
