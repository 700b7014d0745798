#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmst/exact.hpp"
#include "qmst/instance.hpp"
#include "qmst/io.hpp"
#include "qmst/metrics.hpp"
#include "qmst/moea.hpp"
#include "qmst/tree.hpp"

namespace {

using namespace qmst;

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << content;
}

Instance load_instance(const std::string& spec) {
    if (spec == "paper") return paper_instance();
    return parse_instance(read_file(spec));
}

// `paper`, a file path, or a generator spec QMST_<n>_<m>[:<seed>].
std::pair<std::string, Instance> load_instance_spec(const std::string& spec,
                                                    std::uint64_t default_seed) {
    if (spec == "paper") return {"paper", paper_instance()};
    if (spec.rfind("QMST_", 0) == 0) {
        const std::string rest = spec.substr(5);
        const std::size_t us = rest.find('_');
        if (us == std::string::npos) {
            throw std::invalid_argument("bad instance spec '" + spec + "'");
        }
        const std::size_t colon = rest.find(':', us + 1);
        try {
            const int n = std::stoi(rest.substr(0, us));
            const int m = colon == std::string::npos
                              ? std::stoi(rest.substr(us + 1))
                              : std::stoi(rest.substr(us + 1, colon - us - 1));
            const std::uint64_t seed =
                colon == std::string::npos ? default_seed : std::stoull(rest.substr(colon + 1));
            return {"QMST_" + std::to_string(n) + "_" + std::to_string(m),
                    generate_random(n, m, seed)};
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad instance spec '" + spec + "'");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("bad instance spec '" + spec + "'");
        }
    }
    return {spec, parse_instance(read_file(spec))};
}

struct LevelFlags {
    double alpha = 0.9;
    double beta = 0.4;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
};

void add_level_flags(CLI::App* cmd, LevelFlags& lf) {
    const auto range = CLI::Range(0.0, 1.0);
    cmd->add_option("--alpha", lf.alpha, "trust level for both objectives")->check(range);
    cmd->add_option("--beta", lf.beta, "credibility level for both objectives")->check(range);
    cmd->add_option("--alpha1", lf.alpha1, "trust level of the linear objective")->check(range);
    cmd->add_option("--alpha2", lf.alpha2, "trust level of the quadratic objective")->check(range);
    cmd->add_option("--beta1", lf.beta1, "credibility level of the linear objective")->check(range);
    cmd->add_option("--beta2", lf.beta2, "credibility level of the quadratic objective")->check(range);
}

ConfidenceLevels resolve_levels(const CLI::App* cmd, const LevelFlags& lf) {
    ConfidenceLevels lv;
    lv.alpha1 = lv.alpha2 = lf.alpha;
    lv.beta1 = lv.beta2 = lf.beta;
    if (cmd->count("--alpha1")) lv.alpha1 = lf.alpha1;
    if (cmd->count("--alpha2")) lv.alpha2 = lf.alpha2;
    if (cmd->count("--beta1")) lv.beta1 = lf.beta1;
    if (cmd->count("--beta2")) lv.beta2 = lf.beta2;
    return lv;
}

std::vector<FrontRecord> records_of_front(const ExactFront& front, bool keep_ties) {
    std::vector<FrontRecord> records;
    for (const ExactFrontEntry& e : front.entries) {
        if (keep_ties) {
            for (const TreeGenotype& t : e.trees) records.push_back({e.objectives, t});
        } else {
            records.push_back({e.objectives, e.trees.front()});
        }
    }
    sort_records(records);
    return records;
}

std::vector<FrontRecord> records_of_individuals(const std::vector<Individual>& pop) {
    std::vector<FrontRecord> records;
    records.reserve(pop.size());
    for (const Individual& ind : pop) records.push_back({ind.objectives, ind.genotype});
    sort_records(records);
    return records;
}

// Nondominated filter keeping, per objective point, the lowest genotype.
std::vector<FrontRecord> merge_nondominated(std::vector<FrontRecord> records) {
    sort_records(records);
    std::vector<FrontRecord> out;
    for (const FrontRecord& r : records) {
        if (!out.empty() && out.back().objectives == r.objectives) continue;
        bool dominated = false;
        for (const FrontRecord& kept : out) {
            if (dominates(kept.objectives, r.objectives)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        std::erase_if(out, [&](const FrontRecord& kept) {
            return dominates(r.objectives, kept.objectives);
        });
        out.push_back(r);
    }
    sort_records(out);
    return out;
}

std::string render_front(const std::vector<FrontRecord>& records, const std::string& format) {
    std::ostringstream ss;
    if (format == "json") {
        write_front_json(ss, records);
    } else {
        write_front_csv(ss, records);
    }
    return ss.str();
}

// ---------------------------------------------------------------- commands

int cmd_gen(int n, int m, std::uint64_t seed, const std::string& out) {
    const Instance inst = generate_random(n, m, seed);
    write_text(out, serialize_instance(inst));
    return 0;
}

int cmd_eval(const Instance& inst, const ConfidenceLevels& levels, const std::string& bits) {
    const TreeGenotype tree = from_bitstring(bits);
    if (const auto violation = spanning_tree_violation(inst, tree)) {
        std::cerr << "infeasible tree: " << *violation << "\n";
        return 2;
    }
    const EvalContext ctx{&inst, levels};
    const ObjectivePair obj = evaluate(ctx, tree);
    std::cout << "f1: " << format_fixed6(obj.f1) << "\n"
              << "f2: " << format_fixed6(obj.f2) << "\n"
              << "feasible: yes\n";
    return 0;
}

int cmd_exact(const Instance& inst, const ConfidenceLevels& levels, const std::string& out,
              const std::string& format, const std::string& sweep_out, bool ties) {
    const EvalContext ctx{&inst, levels};
    const ExactFront front = exact_pareto_front(ctx, ties);
    write_text(out, render_front(records_of_front(front, ties), format));
    if (!sweep_out.empty()) {
        std::ostringstream ss;
        ss << "step,eps,f1,f2,genotype_bits\n";
        double eps = std::numeric_limits<double>::infinity();
        const std::vector<EpsilonResult> sweep = epsilon_sweep(ctx, 1);
        for (std::size_t i = 0; i < sweep.size(); ++i) {
            ss << i + 1 << ',' << (std::isinf(eps) ? "inf" : format_fixed6(eps)) << ','
               << format_fixed6(sweep[i].objectives.f1) << ','
               << format_fixed6(sweep[i].objectives.f2) << ',' << to_bitstring(sweep[i].tree)
               << '\n';
            eps = std::nextafter(sweep[i].objectives.f2,
                                 -std::numeric_limits<double>::infinity());
        }
        write_text(sweep_out, ss.str());
    }
    return 0;
}

struct SolveOutputs {
    std::vector<std::vector<FrontRecord>> run_records;
    std::vector<FrontRecord> reference;
    std::vector<IndicatorValues> indicators;
};

SolveOutputs run_algorithm(const EvalContext& ctx, const std::string& algorithm,
                           const NsgaParams& nsga, const MochcParams& mochc, std::uint64_t seed,
                           int runs) {
    SolveOutputs out;
    std::vector<FrontRecord> merged;
    for (int r = 0; r < runs; ++r) {
        Rng rng(seed + static_cast<std::uint64_t>(r));
        const std::vector<Individual> result = algorithm == "nsga2"
                                                   ? nsga2_run(ctx, nsga, rng)
                                                   : mochc_run(ctx, mochc, rng);
        out.run_records.push_back(records_of_individuals(result));
        merged.insert(merged.end(), out.run_records.back().begin(), out.run_records.back().end());
    }
    out.reference = merge_nondominated(std::move(merged));
    const Front reference = to_front(out.reference);
    for (const std::vector<FrontRecord>& records : out.run_records) {
        out.indicators.push_back(compute_indicators(to_front(records), reference));
    }
    return out;
}

int cmd_solve(const Instance& inst, const ConfidenceLevels& levels, const std::string& algorithm,
              const NsgaParams& nsga, const MochcParams& mochc, std::uint64_t seed, int runs,
              const std::string& out_dir, const std::string& format) {
    const EvalContext ctx{&inst, levels};
    const SolveOutputs outputs = run_algorithm(ctx, algorithm, nsga, mochc, seed, runs);

    std::filesystem::create_directories(out_dir);
    const std::string ext = format == "json" ? ".json" : ".csv";
    for (int r = 0; r < runs; ++r) {
        write_text(out_dir + "/" + algorithm + "_run_" + std::to_string(r + 1) + ext,
                   render_front(outputs.run_records[r], format));
    }
    write_text(out_dir + "/" + algorithm + "_reference" + ext,
               render_front(outputs.reference, format));

    std::ostringstream ss;
    ss << "run,seed,hv,sp,gd,igd,eps\n";
    for (int r = 0; r < runs; ++r) {
        const IndicatorValues& v = outputs.indicators[r];
        ss << r + 1 << ',' << seed + static_cast<std::uint64_t>(r) << ',' << format_fixed6(v.hv)
           << ',' << format_fixed6(v.sp) << ',' << format_fixed6(v.gd) << ','
           << format_fixed6(v.igd) << ',' << format_fixed6(v.eps) << '\n';
    }
    write_text(out_dir + "/" + algorithm + "_indicators.csv", ss.str());
    return 0;
}

struct ExpectedCell {
    double alpha, beta, f1, f2;
};

std::vector<ExpectedCell> read_expected(const std::string& path) {
    std::istringstream is(read_file(path));
    std::string line;
    if (!std::getline(is, line) || line != "alpha,beta,f1,f2") {
        throw std::runtime_error("expected-values file: header must be 'alpha,beta,f1,f2'");
    }
    std::vector<ExpectedCell> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string a, b, f1, f2;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') ||
            !std::getline(ss, f1, ',') || !std::getline(ss, f2)) {
            throw std::runtime_error("expected-values file: malformed row '" + line + "'");
        }
        out.push_back({std::stod(a), std::stod(b), std::stod(f1), std::stod(f2)});
    }
    return out;
}

int cmd_sensitivity(const Instance& inst, const std::vector<double>& alphas,
                    const std::vector<double>& betas, const std::string& expected_path,
                    const std::string& out) {
    std::vector<ExpectedCell> expected;
    if (!expected_path.empty()) expected = read_expected(expected_path);

    std::ostringstream ss;
    ss << "beta,alpha,front_size,best_f1,best_f1_f2,best_f2_f1,best_f2,knee_f1,knee_f2,"
          "concordance\n";
    for (double beta : betas) {
        for (double alpha : alphas) {
            ConfidenceLevels lv;
            lv.alpha1 = lv.alpha2 = alpha;
            lv.beta1 = lv.beta2 = beta;
            const EvalContext ctx{&inst, lv};
            const ExactFront front = exact_pareto_front(ctx);
            const ExactFrontEntry& best1 = front.entries.front();
            const ExactFrontEntry& best2 = front.entries.back();

            // Knee: closest front point to the ideal corner after scaling by
            // the front's own extremes.
            const double range1 = std::max(best2.objectives.f1 - best1.objectives.f1, 1e-300);
            const double range2 = std::max(best1.objectives.f2 - best2.objectives.f2, 1e-300);
            const ExactFrontEntry* knee = &best1;
            double knee_dist = std::numeric_limits<double>::infinity();
            for (const ExactFrontEntry& e : front.entries) {
                const double n1 = (e.objectives.f1 - best1.objectives.f1) / range1;
                const double n2 = (e.objectives.f2 - best2.objectives.f2) / range2;
                const double d = std::hypot(n1, n2);
                if (d < knee_dist) {
                    knee_dist = d;
                    knee = &e;
                }
            }

            // Concordance asks whether the expected pair is achievable by some
            // spanning tree, not whether it survives the nondominated filter.
            std::string concordance;
            for (const ExpectedCell& cell : expected) {
                if (std::fabs(cell.alpha - alpha) > 1e-9 || std::fabs(cell.beta - beta) > 1e-9) {
                    continue;
                }
                bool hit = false;
                enumerate_spanning_trees(inst, [&](const TreeGenotype& t) {
                    if (hit) return;
                    const ObjectivePair obj = evaluate(ctx, t);
                    hit = std::fabs(obj.f1 - cell.f1) <= 1e-2 && std::fabs(obj.f2 - cell.f2) <= 1e-2;
                });
                concordance = hit ? "match" : "mismatch";
                break;
            }

            ss << format_fixed6(beta) << ',' << format_fixed6(alpha) << ',' << front.entries.size()
               << ',' << format_fixed6(best1.objectives.f1) << ','
               << format_fixed6(best1.objectives.f2) << ',' << format_fixed6(best2.objectives.f1)
               << ',' << format_fixed6(best2.objectives.f2) << ','
               << format_fixed6(knee->objectives.f1) << ',' << format_fixed6(knee->objectives.f2)
               << ',' << concordance << '\n';
        }
    }
    write_text(out, ss.str());
    return 0;
}

int cmd_experiment(const std::vector<std::string>& instance_specs,
                   const std::vector<std::string>& algorithms, const ConfidenceLevels& levels,
                   int runs, long evals, int pop, std::uint64_t seed, const std::string& out) {
    std::ostringstream ss;
    ss << "instance,algorithm,indicator,mean,sd,median,iqr\n";
    for (const std::string& spec : instance_specs) {
        const auto [label, inst] = load_instance_spec(spec, seed);
        const EvalContext ctx{&inst, levels};

        NsgaParams nsga;
        nsga.population = pop;
        nsga.max_evaluations = evals;
        MochcParams mochc;
        mochc.population = pop;
        mochc.max_evaluations = evals;

        // Reference front per instance: best nondominated points over every
        // run of every algorithm.
        std::vector<std::vector<Front>> run_fronts(algorithms.size());
        std::vector<Front> all;
        for (std::size_t a = 0; a < algorithms.size(); ++a) {
            for (int r = 0; r < runs; ++r) {
                Rng rng(seed + static_cast<std::uint64_t>(r));
                const std::vector<Individual> result = algorithms[a] == "nsga2"
                                                           ? nsga2_run(ctx, nsga, rng)
                                                           : mochc_run(ctx, mochc, rng);
                std::vector<ObjectivePair> points;
                points.reserve(result.size());
                for (const Individual& ind : result) points.push_back(ind.objectives);
                run_fronts[a].push_back(Front::nondominated(std::move(points)));
                all.push_back(run_fronts[a].back());
            }
        }
        const Front reference = build_reference_front(all);

        for (std::size_t a = 0; a < algorithms.size(); ++a) {
            std::vector<double> hv, sp, gdv, igdv, eps;
            for (const Front& f : run_fronts[a]) {
                const IndicatorValues v = compute_indicators(f, reference);
                hv.push_back(v.hv);
                sp.push_back(v.sp);
                gdv.push_back(v.gd);
                igdv.push_back(v.igd);
                eps.push_back(v.eps);
            }
            const std::pair<const char*, std::vector<double>*> table[] = {
                {"hv", &hv}, {"sp", &sp}, {"gd", &gdv}, {"igd", &igdv}, {"eps", &eps}};
            for (const auto& [name, values] : table) {
                const RunStats stats = summarize_runs(*values);
                ss << label << ',' << algorithms[a] << ',' << name << ','
                   << format_fixed6(stats.mean) << ',' << format_fixed6(stats.sd) << ','
                   << format_fixed6(stats.median) << ',' << format_fixed6(stats.iqr) << '\n';
            }
        }
    }
    write_text(out, ss.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bi-objective rough fuzzy quadratic minimum spanning tree solver"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance file");
    int gen_n = 0, gen_m = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("n", gen_n, "vertex count")->required();
    gen->add_option("m", gen_m, "edge count")->required();
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate one tree");
    std::string eval_instance = "paper", eval_tree;
    LevelFlags eval_levels;
    eval_cmd->add_option("--instance", eval_instance, "instance path or 'paper'");
    add_level_flags(eval_cmd, eval_levels);
    eval_cmd->add_option("--tree", eval_tree, "genotype bit string")->required();

    // exact
    auto* exact_cmd = app.add_subcommand("exact", "exact Pareto front by enumeration");
    std::string exact_instance = "paper", exact_out, exact_format = "csv", exact_sweep;
    bool exact_ties = false;
    LevelFlags exact_levels;
    exact_cmd->add_option("--instance", exact_instance, "instance path or 'paper'");
    add_level_flags(exact_cmd, exact_levels);
    exact_cmd->add_option("--out", exact_out, "front output path (default stdout)");
    exact_cmd->add_option("--format", exact_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    exact_cmd->add_option("--sweep", exact_sweep, "also write the epsilon-constraint sweep trace");
    exact_cmd->add_flag("--ties", exact_ties, "keep all objective-identical trees");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "heuristic fronts via NSGA-II or MOCHC");
    std::string solve_algorithm, solve_instance = "paper", solve_out = ".", solve_format = "csv";
    std::uint64_t solve_seed = 1;
    int solve_runs = 1;
    NsgaParams nsga;
    MochcParams mochc;
    long solve_evals = 50000;
    int solve_pop = 100;
    LevelFlags solve_levels;
    solve_cmd->add_option("algorithm", solve_algorithm, "nsga2 or mochc")
        ->required()
        ->check(CLI::IsMember({"nsga2", "mochc"}));
    solve_cmd->add_option("--instance", solve_instance, "instance path or 'paper'");
    add_level_flags(solve_cmd, solve_levels);
    solve_cmd->add_option("--evals", solve_evals, "evaluation budget per run")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--pop", solve_pop, "population size")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--seed", solve_seed, "seed of the first run (run i uses seed+i)");
    solve_cmd->add_option("--runs", solve_runs, "number of independent runs")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--out", solve_out, "output directory");
    solve_cmd->add_option("--format", solve_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    solve_cmd->add_option("--crossover", nsga.crossover_prob, "crossover probability")
        ->check(CLI::Range(0.0, 1.0));
    solve_cmd->add_option("--mutation", nsga.mutation_prob_per_bit, "per-bit mutation probability")
        ->check(CLI::Range(0.0, 1.0));
    solve_cmd->add_option("--incest", mochc.incest_threshold_fraction, "incest threshold fraction")
        ->check(CLI::Range(0.0, 1.0));
    solve_cmd
        ->add_option("--preserved", mochc.preserved_fraction, "elite fraction kept on restart")
        ->check(CLI::Range(0.0, 1.0));
    solve_cmd->add_option("--cataclysm", mochc.cataclysm_prob, "restart per-bit flip probability")
        ->check(CLI::Range(0.0, 1.0));

    // sensitivity
    auto* sens_cmd = app.add_subcommand("sensitivity", "exact fronts over a level grid");
    std::string sens_instance = "paper", sens_expected, sens_out;
    std::vector<double> sens_alphas{0.2, 0.4, 0.6, 0.8};
    std::vector<double> sens_betas{0.1, 0.3, 0.5, 0.7, 0.9};
    sens_cmd->add_option("--instance", sens_instance, "instance path or 'paper'");
    sens_cmd->add_option("--alphas", sens_alphas, "trust levels of the grid")
        ->check(CLI::Range(0.0, 1.0));
    sens_cmd->add_option("--betas", sens_betas, "credibility levels of the grid")
        ->check(CLI::Range(0.0, 1.0));
    sens_cmd->add_option("--expected", sens_expected, "optional expected-values CSV");
    sens_cmd->add_option("--out", sens_out, "output path (default stdout)");

    // experiment
    auto* exp_cmd = app.add_subcommand("experiment", "multi-run indicator statistics");
    std::vector<std::string> exp_instances, exp_algorithms{"nsga2", "mochc"};
    LevelFlags exp_levels;
    int exp_runs = 100, exp_pop = 100;
    long exp_evals = 50000;
    std::uint64_t exp_seed = 1;
    std::string exp_out;
    exp_cmd->add_option("--instances", exp_instances, "paths, 'paper', or QMST_<n>_<m>[:seed]")
        ->required();
    exp_cmd->add_option("--algorithms", exp_algorithms, "subset of {nsga2, mochc}")
        ->check(CLI::IsMember({"nsga2", "mochc"}));
    add_level_flags(exp_cmd, exp_levels);
    exp_cmd->add_option("--runs", exp_runs, "runs per algorithm")->check(CLI::PositiveNumber);
    exp_cmd->add_option("--evals", exp_evals, "evaluation budget per run")
        ->check(CLI::PositiveNumber);
    exp_cmd->add_option("--pop", exp_pop, "population size")->check(CLI::PositiveNumber);
    exp_cmd->add_option("--seed", exp_seed, "seed of the first run");
    exp_cmd->add_option("--out", exp_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            return cmd_gen(gen_n, gen_m, gen_seed, gen_out);
        }
        if (eval_cmd->parsed()) {
            return cmd_eval(load_instance(eval_instance), resolve_levels(eval_cmd, eval_levels),
                            eval_tree);
        }
        if (exact_cmd->parsed()) {
            return cmd_exact(load_instance(exact_instance), resolve_levels(exact_cmd, exact_levels),
                             exact_out, exact_format, exact_sweep, exact_ties);
        }
        if (solve_cmd->parsed()) {
            nsga.population = solve_pop;
            nsga.max_evaluations = solve_evals;
            mochc.population = solve_pop;
            mochc.max_evaluations = solve_evals;
            mochc.crossover_prob = nsga.crossover_prob;
            return cmd_solve(load_instance(solve_instance),
                             resolve_levels(solve_cmd, solve_levels), solve_algorithm, nsga, mochc,
                             solve_seed, solve_runs, solve_out, solve_format);
        }
        if (sens_cmd->parsed()) {
            return cmd_sensitivity(load_instance(sens_instance), sens_alphas, sens_betas,
                                   sens_expected, sens_out);
        }
        if (exp_cmd->parsed()) {
            return cmd_experiment(exp_instances, exp_algorithms, resolve_levels(exp_cmd, exp_levels),
                                  exp_runs, exp_evals, exp_pop, exp_seed, exp_out);
        }
    } catch (const InfeasibleRequest& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InfeasibleEpsilon& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
