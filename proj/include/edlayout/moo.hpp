#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edlayout/core.hpp"
#include "edlayout/layout.hpp"
#include "edlayout/scenario.hpp"

namespace edl {

enum class Algorithm { Nsga2, Gde3, RandomSearch };

std::string to_string(Algorithm algorithm);
Algorithm algorithm_from_string(const std::string& name);

struct Nsga2Params {
    double crossover_rate = 0.8;
    double mutation_rate = 0.05;
    double sbx_eta = 20.0;
    double pm_eta = 20.0;
};

struct Gde3Params {
    double k = 0.5;   // only read by the current-to-rand variant
    double cr = 0.2;
    double f = 0.2;
    bool current_to_rand = false;
};

struct OptimizerConfig {
    Algorithm algorithm = Algorithm::Nsga2;
    std::size_t population = 100;
    std::size_t max_evaluations = 100 * 200;
    Nsga2Params nsga2;
    Gde3Params gde3;
    std::uint64_t seed = 1;

    /// Throws InvalidArgument when an invariant is broken.
    void validate() const;
};

struct Individual {
    LayoutGenome genome;
    ObjectiveVector objectives;
    bool feasible = true;
    std::size_t rank = 0;
    double crowding = 0.0;
};

struct Provenance {
    Algorithm algorithm = Algorithm::Nsga2;
    std::uint64_t seed = 0;
    std::size_t evaluations = 0;
    double wall_time_s = 0.0;
};

/// Mutually non-dominated, feasible, duplicate-free solutions of one run,
/// ordered by (f1, f2, genes).
struct ParetoArchive {
    std::vector<Individual> solutions;
    Provenance provenance;
    OptimizerConfig config;
};

/// Black-box view of the layout problem used by the optimizers.
struct Problem {
    std::size_t genome_length = 0;
    std::function<Evaluation(const LayoutGenome&)> evaluate;
};

Problem make_problem(const Scenario& scenario);

/// Minimization: a <= b componentwise and a < b somewhere.
bool dominates(std::span<const double> a, std::span<const double> b);
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Fronts of indices into `points`; front 0 is the non-dominated subset.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(std::span<const ObjectiveVector> points);

/// Crowding distance of each member of one front (same order as input).
std::vector<double> crowding_distance(std::span<const ObjectiveVector> front);

/// SBX crossover then polynomial mutation, both applied gene by gene.
std::pair<LayoutGenome, LayoutGenome> sbx_and_mutate(const LayoutGenome& p1, const LayoutGenome& p2,
                                                     const Nsga2Params& params, Rng& rng);

/// rand/1/bin trial vector: v = x1 + F (x2 - x3), binomial crossover with Cr
/// and a forced index, clamped to [0, 1].
LayoutGenome de_trial(const LayoutGenome& target, const LayoutGenome& x1, const LayoutGenome& x2,
                      const LayoutGenome& x3, const Gde3Params& params, Rng& rng);

/// Called after initialization (generation 0) and after every generation with
/// the current population.
using GenerationObserver = std::function<void(std::size_t generation, std::span<const Individual> population)>;

ParetoArchive nsga2(const Problem& problem, const OptimizerConfig& config, const GenerationObserver& observer = {});
ParetoArchive gde3(const Problem& problem, const OptimizerConfig& config, const GenerationObserver& observer = {});
ParetoArchive nsga2(const Scenario& scenario, const OptimizerConfig& config);
ParetoArchive gde3(const Scenario& scenario, const OptimizerConfig& config);

/// Dispatches on config.algorithm.
ParetoArchive optimize(const Scenario& scenario, const OptimizerConfig& config);

/// Uniformly random genomes; the non-dominated feasible ones form the archive.
ParetoArchive random_search(const Problem& problem, std::size_t evaluations, std::uint64_t seed);

/// Feasible, non-dominated, deduplicated and sorted subset of `population`.
std::vector<Individual> pareto_filter(std::span<const Individual> population);

}  // namespace edl
