#include "qmst/moea.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qmst {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

bool NsgaParams::valid() const {
    return population >= 4 && population % 2 == 0 && max_evaluations >= population &&
           crossover_prob >= 0.0 && crossover_prob <= 1.0 && mutation_prob_per_bit >= 0.0 &&
           mutation_prob_per_bit <= 1.0;
}

bool MochcParams::valid() const {
    auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
    return population >= 2 && max_evaluations >= population && in01(crossover_prob) &&
           in01(incest_threshold_fraction) && in01(preserved_fraction) && in01(cataclysm_prob);
}

std::vector<int> fast_nondominated_sort(const std::vector<ObjectivePair>& points) {
    const int n = static_cast<int>(points.size());
    std::vector<std::vector<int>> dominated(n);
    std::vector<int> blockers(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (dominates(points[i], points[j])) {
                dominated[i].push_back(j);
                ++blockers[j];
            } else if (dominates(points[j], points[i])) {
                dominated[j].push_back(i);
                ++blockers[i];
            }
        }
    }
    std::vector<int> rank(n, 0);
    std::vector<int> current;
    for (int i = 0; i < n; ++i) {
        if (blockers[i] == 0) current.push_back(i);
    }
    int level = 0;
    while (!current.empty()) {
        std::vector<int> next;
        for (int i : current) {
            rank[i] = level;
            for (int j : dominated[i]) {
                if (--blockers[j] == 0) next.push_back(j);
            }
        }
        current = std::move(next);
        ++level;
    }
    return rank;
}

std::vector<double> crowding_distance(const std::vector<ObjectivePair>& front) {
    const std::size_t n = front.size();
    std::vector<double> dist(n, 0.0);
    if (n == 0) return dist;
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), kInf);
        return dist;
    }
    std::vector<std::size_t> idx(n);
    for (int objective = 0; objective < 2; ++objective) {
        auto coord = [&](std::size_t i) { return objective == 0 ? front[i].f1 : front[i].f2; };
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return coord(a) < coord(b); });
        dist[idx.front()] = kInf;
        dist[idx.back()] = kInf;
        const double range = coord(idx.back()) - coord(idx.front());
        if (range <= 0.0) continue;
        for (std::size_t k = 1; k + 1 < n; ++k) {
            if (dist[idx[k]] != kInf) {
                dist[idx[k]] += (coord(idx[k + 1]) - coord(idx[k - 1])) / range;
            }
        }
    }
    return dist;
}

int hamming_distance(const TreeGenotype& a, const TreeGenotype& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.bits.size(); ++i) d += a.bits[i] != b.bits[i];
    return d;
}

int initial_incest_threshold(const MochcParams& params, int genome_length) {
    return static_cast<int>(params.incest_threshold_fraction * static_cast<double>(genome_length));
}

std::pair<TreeGenotype, TreeGenotype> hux(const TreeGenotype& a, const TreeGenotype& b, Rng& rng) {
    TreeGenotype ca = a;
    TreeGenotype cb = b;
    std::vector<std::size_t> diff;
    for (std::size_t i = 0; i < a.bits.size(); ++i) {
        if (a.bits[i] != b.bits[i]) diff.push_back(i);
    }
    const std::size_t swaps = diff.size() / 2;
    for (std::size_t k = 0; k < swaps; ++k) {
        std::swap(diff[k], diff[k + rand_below(rng, diff.size() - k)]);
        std::swap(ca.bits[diff[k]], cb.bits[diff[k]]);
    }
    return {std::move(ca), std::move(cb)};
}

namespace {

// Rank the pool, assign crowding per front, and keep the best n by rank then
// crowding. Deterministic: ties keep their pool order.
std::vector<Individual> select_best(std::vector<Individual> pool, std::size_t n) {
    std::vector<ObjectivePair> points;
    points.reserve(pool.size());
    for (const Individual& ind : pool) points.push_back(ind.objectives);
    const std::vector<int> ranks = fast_nondominated_sort(points);
    int worst = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        pool[i].rank = ranks[i];
        worst = std::max(worst, ranks[i]);
    }
    std::vector<std::vector<std::size_t>> fronts(worst + 1);
    for (std::size_t i = 0; i < pool.size(); ++i) fronts[ranks[i]].push_back(i);

    std::vector<Individual> out;
    out.reserve(n);
    for (const std::vector<std::size_t>& front : fronts) {
        std::vector<ObjectivePair> front_points;
        front_points.reserve(front.size());
        for (std::size_t i : front) front_points.push_back(pool[i].objectives);
        const std::vector<double> crowd = crowding_distance(front_points);
        for (std::size_t k = 0; k < front.size(); ++k) pool[front[k]].crowding = crowd[k];

        if (out.size() + front.size() <= n) {
            for (std::size_t i : front) out.push_back(pool[i]);
        } else {
            std::vector<std::size_t> order(front.begin(), front.end());
            std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
                return pool[x].crowding > pool[y].crowding;
            });
            for (std::size_t k = 0; out.size() < n; ++k) out.push_back(pool[order[k]]);
        }
        if (out.size() == n) break;
    }
    return out;
}

bool crowded_better(const Individual& x, const Individual& y) {
    if (x.rank != y.rank) return x.rank < y.rank;
    return x.crowding > y.crowding;
}

void mutate_bits(TreeGenotype& g, double per_bit, Rng& rng) {
    for (std::uint8_t& b : g.bits) {
        if (rand_unit(rng) < per_bit) b ^= 1;
    }
}

void single_point_crossover(TreeGenotype& x, TreeGenotype& y, Rng& rng) {
    const std::size_t len = x.bits.size();
    if (len < 2) return;
    const std::size_t cut = 1 + rand_below(rng, len - 1);
    for (std::size_t i = cut; i < len; ++i) std::swap(x.bits[i], y.bits[i]);
}

std::vector<Individual> rank_zero(std::vector<Individual> pop) {
    const std::size_t n = pop.size();
    pop = select_best(std::move(pop), n);
    std::vector<Individual> out;
    for (Individual& ind : pop) {
        if (ind.rank == 0) out.push_back(std::move(ind));
    }
    return out;
}

}  // namespace

std::vector<Individual> nsga2_run(const EvalContext& ctx, const NsgaParams& params, Rng& rng) {
    if (!params.valid()) throw std::invalid_argument("nsga2_run: invalid parameters");
    const Instance& inst = *ctx.instance;
    const std::size_t n = static_cast<std::size_t>(params.population);

    long evals = 0;
    auto make = [&](TreeGenotype g) {
        Individual ind;
        ind.objectives = evaluate(ctx, g);
        ind.genotype = std::move(g);
        ++evals;
        return ind;
    };

    std::vector<Individual> pop;
    pop.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) pop.push_back(make(random_tree(inst, rng)));
    pop = select_best(std::move(pop), n);

    auto tournament = [&]() -> const Individual& {
        const Individual& x = pop[rand_below(rng, pop.size())];
        const Individual& y = pop[rand_below(rng, pop.size())];
        return crowded_better(y, x) ? y : x;
    };

    while (evals + static_cast<long>(n) <= params.max_evaluations) {
        std::vector<Individual> children;
        children.reserve(n);
        while (children.size() < n) {
            TreeGenotype ca = tournament().genotype;
            TreeGenotype cb = tournament().genotype;
            if (rand_unit(rng) < params.crossover_prob) single_point_crossover(ca, cb, rng);
            mutate_bits(ca, params.mutation_prob_per_bit, rng);
            mutate_bits(cb, params.mutation_prob_per_bit, rng);
            children.push_back(make(repair(inst, ca, rng)));
            if (children.size() < n) children.push_back(make(repair(inst, cb, rng)));
        }
        for (Individual& c : children) pop.push_back(std::move(c));
        pop = select_best(std::move(pop), n);
    }
    return rank_zero(std::move(pop));
}

std::vector<Individual> mochc_run(const EvalContext& ctx, const MochcParams& params, Rng& rng) {
    if (!params.valid()) throw std::invalid_argument("mochc_run: invalid parameters");
    const Instance& inst = *ctx.instance;
    const std::size_t n = static_cast<std::size_t>(params.population);
    const int genome = inst.edge_count();
    const int initial_threshold = initial_incest_threshold(params, genome);

    long evals = 0;
    auto make = [&](TreeGenotype g) {
        Individual ind;
        ind.objectives = evaluate(ctx, g);
        ind.genotype = std::move(g);
        ++evals;
        return ind;
    };

    std::vector<Individual> pop;
    pop.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) pop.push_back(make(random_tree(inst, rng)));
    pop = select_best(std::move(pop), n);

    auto sorted_genotypes = [](const std::vector<Individual>& v) {
        std::vector<TreeGenotype> g;
        g.reserve(v.size());
        for (const Individual& ind : v) g.push_back(ind.genotype);
        std::sort(g.begin(), g.end());
        return g;
    };

    int threshold = initial_threshold;
    int idle_generations = 0;
    while (evals < params.max_evaluations) {
        const long evals_before = evals;

        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        shuffle_inplace(order, rng);

        std::vector<Individual> children;
        for (std::size_t k = 0; k + 1 < n; k += 2) {
            if (evals + 2 > params.max_evaluations) break;
            const Individual& pa = pop[order[k]];
            const Individual& pb = pop[order[k + 1]];
            if (hamming_distance(pa.genotype, pb.genotype) <= threshold) continue;
            if (rand_unit(rng) >= params.crossover_prob) continue;
            auto [ca, cb] = hux(pa.genotype, pb.genotype, rng);
            children.push_back(make(repair(inst, ca, rng)));
            children.push_back(make(repair(inst, cb, rng)));
        }

        const std::vector<TreeGenotype> before = sorted_genotypes(pop);
        for (Individual& c : children) pop.push_back(std::move(c));
        pop = select_best(std::move(pop), n);

        if (sorted_genotypes(pop) == before) {
            // Stagnating with the threshold already exhausted triggers the
            // restart; threshold 0 itself still allows any distinct pair.
            if (--threshold < 0) {
                // A cataclysm wipes most of the population, so it only pays
                // off when enough budget remains to rebuild afterwards.
                if (evals + 20L * static_cast<long>(n) <= params.max_evaluations) {
                    std::vector<std::size_t> idx(n);
                    std::iota(idx.begin(), idx.end(), 0);
                    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
                        return crowded_better(pop[x], pop[y]);
                    });
                    const std::size_t keep = static_cast<std::size_t>(
                        std::ceil(params.preserved_fraction * static_cast<double>(n)));
                    for (std::size_t r = keep; r < n; ++r) {
                        if (evals >= params.max_evaluations) break;
                        TreeGenotype g = pop[idx[r]].genotype;
                        mutate_bits(g, params.cataclysm_prob, rng);
                        pop[idx[r]] = make(repair(inst, g, rng));
                    }
                    threshold = initial_threshold;
                } else {
                    threshold = 0;
                }
            }
        }

        // A configuration that can neither mate nor mutate makes no progress;
        // bail out rather than spin.
        idle_generations = evals == evals_before ? idle_generations + 1 : 0;
        if (idle_generations > genome + initial_threshold + 4) break;
    }
    return rank_zero(std::move(pop));
}

}  // namespace qmst
