#pragma once

#include <utility>
#include <vector>

#include "qmst/tree.hpp"

namespace qmst {

struct Individual {
    TreeGenotype genotype;
    ObjectivePair objectives;
    int rank = 0;
    double crowding = 0.0;
};

// Deb-style O(MN^2) nondominated sorting; rank 0 is the nondominated set,
// rank k the nondominated set after removing ranks below k.
std::vector<int> fast_nondominated_sort(const std::vector<ObjectivePair>& points);

// Crowding distance within one front. Boundary points get +infinity; an
// objective with zero range contributes nothing to interior points.
std::vector<double> crowding_distance(const std::vector<ObjectivePair>& front);

struct NsgaParams {
    int population = 100;
    long max_evaluations = 50000;
    double crossover_prob = 0.9;
    double mutation_prob_per_bit = 0.03;

    bool valid() const;
};

struct MochcParams {
    int population = 100;
    long max_evaluations = 50000;
    double crossover_prob = 0.9;
    double incest_threshold_fraction = 0.25;
    double preserved_fraction = 0.05;
    double cataclysm_prob = 0.35;

    bool valid() const;
};

int hamming_distance(const TreeGenotype& a, const TreeGenotype& b);

// Initial Hamming-distance threshold for incest prevention.
int initial_incest_threshold(const MochcParams& params, int genome_length);

// Half uniform crossover: agreeing bits are copied to both children, exactly
// floor(d/2) of the d differing positions (chosen uniformly) are swapped.
std::pair<TreeGenotype, TreeGenotype> hux(const TreeGenotype& a, const TreeGenotype& b, Rng& rng);

// Generational NSGA-II over spanning-tree genotypes: binary tournament on
// rank then crowding, single-point crossover, per-bit mutation, repair after
// every variation. Returns the rank-0 set of the final population.
std::vector<Individual> nsga2_run(const EvalContext& ctx, const NsgaParams& params, Rng& rng);

// CHC-style search: random pairing with incest prevention, HUX recombination,
// cross-generational elitism, threshold decay on stagnation and cataclysmic
// restarts that preserve a small elite. Returns the rank-0 set of the final
// population.
std::vector<Individual> mochc_run(const EvalContext& ctx, const MochcParams& params, Rng& rng);

}  // namespace qmst
