#include <cmath>
#include <doctest.h>

#include "qmst/uncertainty.hpp"
#include "test_util.hpp"

using namespace qmst;
using testutil::near;

TEST_CASE("membership tent") {
    CHECK(tfv_membership({9.0, 11.5, 12.7}, 11.5) == 1.0);
    CHECK(tfv_membership({0, 1, 2}, 0.5) == 0.5);
    CHECK(tfv_membership({0, 1, 2}, 3.0) == 0.0);
    CHECK(tfv_membership({0, 1, 2}, -0.1) == 0.0);
    // crisp value
    CHECK(tfv_membership({2, 2, 2}, 2.0) == 1.0);
    CHECK(tfv_membership({2, 2, 2}, 2.5) == 0.0);
}

TEST_CASE("possibility and necessity of a threshold event") {
    const TriangularFuzzy tf{0, 1, 2};
    auto pn = possibility_necessity_leq(tf, 1.0);
    CHECK(pn.possibility == 1.0);
    CHECK(pn.necessity == 0.0);
    pn = possibility_necessity_leq(tf, 2.0);
    CHECK(pn.possibility == 1.0);
    CHECK(pn.necessity == 1.0);
    pn = possibility_necessity_leq(tf, -1.0);
    CHECK(pn.possibility == 0.0);
    CHECK(pn.necessity == 0.0);
}

TEST_CASE("credibility distribution") {
    const TriangularFuzzy tf{0, 1, 2};
    auto cr = credibility(tf, 1.0);
    CHECK(cr.leq == 0.5);
    CHECK(cr.geq == 0.5);
    cr = credibility(tf, 0.5);
    CHECK(cr.leq == 0.25);
    CHECK(cr.geq == 0.75);
    cr = credibility(tf, 2.0);
    CHECK(cr.leq == 1.0);
    CHECK(cr.geq == 0.0);
}

TEST_CASE("credibility quantile") {
    const TriangularFuzzy tf{0, 1, 2};
    CHECK(cr_quantile_leq(tf, 0.5) == 1.0);
    CHECK(cr_quantile_leq(tf, 0.25) == 0.5);
    CHECK(cr_quantile_leq(tf, 1.0) == 2.0);
    CHECK(cr_quantile_leq(tf, 0.0) == 0.0);
}

TEST_CASE("trust distribution") {
    const RoughInterval ri{1, 2, 0, 4};
    auto tr = trust(ri, 4.0);
    CHECK(tr.leq == 1.0);
    CHECK(tr.geq == 0.0);
    tr = trust(ri, 1.0);
    CHECK(tr.leq == 0.125);
    CHECK(tr.geq == 0.875);
    tr = trust(ri, 0.0);
    CHECK(tr.leq == 0.0);
    CHECK(tr.geq == 1.0);
}

TEST_CASE("trust quantile") {
    const RoughInterval ri{1, 2, 0, 4};
    CHECK(tr_quantile_leq(ri, 0.125) == 1.0);
    CHECK(tr_quantile_leq(ri, 1.0) == 4.0);
    CHECK(tr_quantile_leq(ri, 0.0) == 0.0);
    // middle branch boundary: Tr at lo2 is 0.5 * (1 + 2/4) = 0.75
    CHECK(near(tr_quantile_leq(ri, 0.75), 2.0, 1e-12));
    CHECK(near(tr_quantile_leq(ri, 0.5), (4.0 + 8.0 * 0.5) / 5.0, 1e-12));
}

TEST_CASE("affine sums of fuzzy numbers") {
    CHECK(tfv_affine_sum({{{1, 2, 3}, 1.0, 0.0}}) == TriangularFuzzy{1, 2, 3});
    CHECK(tfv_affine_sum({{{1, 2, 3}, 2.0, 1.0}}) == TriangularFuzzy{3, 5, 7});
    CHECK_THROWS_AS((void)tfv_affine_sum({{{1, 2, 3}, -1.0, 0.0}}), std::invalid_argument);

    // summing in any order gives the same components
    Rng rng(11);
    std::vector<WeightedTerm> terms;
    for (int i = 0; i < 12; ++i) {
        terms.push_back({testutil::random_tfv(rng), rand_unit(rng), 4.0 * rand_unit(rng) - 2.0});
    }
    const TriangularFuzzy forward = tfv_affine_sum(terms);
    std::vector<WeightedTerm> reversed(terms.rbegin(), terms.rend());
    const TriangularFuzzy backward = tfv_affine_sum(reversed);
    CHECK(near(forward.lo, backward.lo, 1e-9));
    CHECK(near(forward.mode, backward.mode, 1e-9));
    CHECK(near(forward.hi, backward.hi, 1e-9));
}

TEST_CASE("chance constraint reduction") {
    CHECK(near(chance_reduce({{8.4, 9.0, 9.6}, 1.7}, 0.9, 0.4), 11.94, 1e-9));
    CHECK(near(chance_reduce({{10.0, 11.1, 12.2}, 2.6}, 0.9, 0.8), 16.44, 1e-9));
    CHECK(near(chance_reduce({{1, 2, 3}, 1.0}, 0.0, 0.5), 2.0, 1e-12));
}

TEST_CASE("bisection oracle matches the closed form") {
    CHECK(near(chance_reduce_bisect_oracle({{8.4, 9.0, 9.6}, 1.7}, 0.9, 0.4), 11.94, 1e-9));
    CHECK(chance_reduce_bisect_oracle({{5.0, 5.0, 5.0}, 0.0}, 0.3, 0.7) == 5.0);
    CHECK(near(chance_reduce_bisect_oracle({{0, 1, 2}, 0.0}, 0.42, 0.25), 0.5, 1e-9));

    Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        const AggregatedChance agg = testutil::random_agg(rng);
        const double alpha = rand_unit(rng);
        const double beta = i % 7 == 0 ? 0.5 : rand_unit(rng);
        const double closed = chance_reduce(agg, alpha, beta);
        const double bisect = chance_reduce_bisect_oracle(agg, alpha, beta);
        REQUIRE(near(closed, bisect, 1e-9));
    }
}

TEST_CASE("credibility duality and mean-of-measures identity") {
    Rng rng(21);
    for (int v = 0; v < 100; ++v) {
        const TriangularFuzzy tf = testutil::random_tfv(rng);
        const double from = tf.lo - 1.0;
        const double to = tf.hi + 1.0;
        for (int i = 0; i <= 200; ++i) {
            const double x = from + (to - from) * i / 200.0;
            const TwoSided cr = credibility(tf, x);
            REQUIRE(near(cr.leq + cr.geq, 1.0, 1e-12));
            const PosNec pn = possibility_necessity_leq(tf, x);
            REQUIRE(near(cr.leq, 0.5 * (pn.possibility + pn.necessity), 1e-12));
        }
    }
}

TEST_CASE("trust duality") {
    Rng rng(22);
    for (int v = 0; v < 100; ++v) {
        const RoughInterval ri = testutil::random_rough(rng);
        const double from = ri.up1 - 1.0;
        const double to = ri.up2 + 1.0;
        for (int i = 0; i <= 200; ++i) {
            const double x = from + (to - from) * i / 200.0;
            const TwoSided tr = trust(ri, x);
            REQUIRE(near(tr.leq + tr.geq, 1.0, 1e-12));
        }
    }
}

TEST_CASE("distributions are monotone") {
    Rng rng(23);
    for (int v = 0; v < 50; ++v) {
        const TriangularFuzzy tf = testutil::random_tfv(rng);
        const RoughInterval ri = testutil::random_rough(rng);
        double prev_cr_leq = -1.0, prev_cr_geq = 2.0, prev_tr_leq = -1.0, prev_tr_geq = 2.0;
        for (int i = 0; i <= 400; ++i) {
            const double xf = tf.lo - 1.0 + (tf.hi - tf.lo + 2.0) * i / 400.0;
            const double xr = ri.up1 - 1.0 + (ri.up2 - ri.up1 + 2.0) * i / 400.0;
            const TwoSided cr = credibility(tf, xf);
            const TwoSided tr = trust(ri, xr);
            REQUIRE(cr.leq >= prev_cr_leq - 1e-12);
            REQUIRE(cr.geq <= prev_cr_geq + 1e-12);
            REQUIRE(tr.leq >= prev_tr_leq - 1e-12);
            REQUIRE(tr.geq <= prev_tr_geq + 1e-12);
            prev_cr_leq = cr.leq;
            prev_cr_geq = cr.geq;
            prev_tr_leq = tr.leq;
            prev_tr_geq = tr.geq;
        }
    }
}

TEST_CASE("quantiles invert the distributions") {
    Rng rng(24);
    for (int v = 0; v < 200; ++v) {
        const TriangularFuzzy tf = testutil::random_tfv(rng);
        const double beta = rand_unit(rng);
        const double x = cr_quantile_leq(tf, beta);
        REQUIRE(credibility(tf, x).leq >= beta - 1e-12);
        if (beta > 1e-6) {
            REQUIRE(credibility(tf, x - 1e-6).leq < beta);
        }

        const RoughInterval ri = testutil::random_rough(rng);
        const double alpha = rand_unit(rng);
        const double y = tr_quantile_leq(ri, alpha);
        REQUIRE(near(trust(ri, y).leq, alpha, 1e-9));
        if (alpha > 1e-6) {
            REQUIRE(trust(ri, y - 1e-6).leq < alpha);
        }
    }
}

TEST_CASE("reduction is monotone in the confidence levels and continuous at one half") {
    Rng rng(25);
    for (int v = 0; v < 200; ++v) {
        const AggregatedChance agg = testutil::random_agg(rng);
        double prev = -1e300;
        for (int i = 0; i <= 20; ++i) {
            const double alpha = i / 20.0;
            const double f = chance_reduce(agg, alpha, 0.3);
            REQUIRE(f >= prev - 1e-9);
            prev = f;
        }
        prev = -1e300;
        for (int i = 0; i <= 20; ++i) {
            const double beta = i / 20.0;
            const double f = chance_reduce(agg, 0.6, beta);
            REQUIRE(f >= prev - 1e-9);
            prev = f;
        }
        const double alpha = rand_unit(rng);
        REQUIRE(near(chance_reduce_lower(agg, alpha, 0.5), chance_reduce_upper(agg, alpha, 0.5),
                     1e-9));
    }
}
