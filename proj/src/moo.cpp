#include "edlayout/moo.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numeric>

namespace edl {

std::string to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Nsga2: return "nsga2";
        case Algorithm::Gde3: return "gde3";
        case Algorithm::RandomSearch: return "random";
    }
    return "unknown";
}

Algorithm algorithm_from_string(const std::string& name) {
    if (name == "nsga2") return Algorithm::Nsga2;
    if (name == "gde3") return Algorithm::Gde3;
    if (name == "random") return Algorithm::RandomSearch;
    throw InvalidArgument("unknown algorithm '" + name + "'");
}

void OptimizerConfig::validate() const {
    auto rate = [](double v, const char* what) {
        if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument(std::string(what) + " must lie in [0, 1]");
    };
    if (population < 4) throw InvalidArgument("population must be at least 4");
    if (max_evaluations < population) throw InvalidArgument("max_evaluations must cover the initial population");
    rate(nsga2.crossover_rate, "crossover rate");
    rate(nsga2.mutation_rate, "mutation rate");
    rate(gde3.cr, "Cr");
    if (!(nsga2.sbx_eta >= 0.0) || !(nsga2.pm_eta >= 0.0)) throw InvalidArgument("distribution indices must be >= 0");
    if (!std::isfinite(gde3.f) || !std::isfinite(gde3.k)) throw InvalidArgument("F and K must be finite");
}

Problem make_problem(const Scenario& scenario) {
    return {scenario.genome_length(), [&scenario](const LayoutGenome& g) { return evaluate_detailed(g, scenario); }};
}

bool dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw InvalidArgument("dominates: dimension mismatch");
    bool strictly = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) return false;
        if (a[k] < b[k]) strictly = true;
    }
    return strictly;
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

std::vector<std::vector<std::size_t>> fast_nondominated_sort(std::span<const ObjectiveVector> points) {
    const std::size_t n = points.size();
    if (n == 0) throw InvalidArgument("fast_nondominated_sort: empty population");
    std::vector<std::vector<std::size_t>> dominated_by_me(n);
    std::vector<std::size_t> domination_count(n, 0);
    std::vector<std::vector<std::size_t>> fronts(1);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (p == q) continue;
            if (dominates(points[p], points[q]))
                dominated_by_me[p].push_back(q);
            else if (dominates(points[q], points[p]))
                ++domination_count[p];
        }
        if (domination_count[p] == 0) fronts[0].push_back(p);
    }
    for (std::size_t k = 0; !fronts[k].empty(); ++k) {
        std::vector<std::size_t> next;
        for (auto p : fronts[k])
            for (auto q : dominated_by_me[p])
                if (--domination_count[q] == 0) next.push_back(q);
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(next));
    }
    fronts.pop_back();
    return fronts;
}

std::vector<double> crowding_distance(std::span<const ObjectiveVector> front) {
    const std::size_t n = front.size();
    std::vector<double> dist(n, 0.0);
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), kInf);
        return dist;
    }
    std::vector<std::size_t> idx(n);
    for (int m = 0; m < 2; ++m) {
        auto value = [&](std::size_t i) { return m == 0 ? front[i].f1 : front[i].f2; };
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return value(a) < value(b); });
        dist[idx.front()] = kInf;
        dist[idx.back()] = kInf;
        const double range = value(idx.back()) - value(idx.front());
        if (!(range > 0.0)) continue;
        for (std::size_t k = 1; k + 1 < n; ++k)
            dist[idx[k]] += (value(idx[k + 1]) - value(idx[k - 1])) / range;
    }
    return dist;
}

std::pair<LayoutGenome, LayoutGenome> sbx_and_mutate(const LayoutGenome& p1, const LayoutGenome& p2,
                                                     const Nsga2Params& params, Rng& rng) {
    if (p1.genes.size() != p2.genes.size()) throw InvalidArgument("sbx_and_mutate: parent length mismatch");
    LayoutGenome c1 = p1, c2 = p2;
    const std::size_t n = p1.genes.size();

    for (std::size_t j = 0; j < n; ++j) {
        if (!(rng.uniform() < params.crossover_rate)) continue;
        const double x1 = p1.genes[j], x2 = p2.genes[j];
        if (std::abs(x1 - x2) <= 1e-14) continue;
        const double u = rng.uniform();
        const double beta = u <= 0.5 ? std::pow(2.0 * u, 1.0 / (params.sbx_eta + 1.0))
                                     : std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (params.sbx_eta + 1.0));
        c1.genes[j] = std::clamp(0.5 * ((1.0 + beta) * x1 + (1.0 - beta) * x2), 0.0, 1.0);
        c2.genes[j] = std::clamp(0.5 * ((1.0 - beta) * x1 + (1.0 + beta) * x2), 0.0, 1.0);
    }

    auto mutate = [&](LayoutGenome& g) {
        const double power = 1.0 / (params.pm_eta + 1.0);
        for (auto& y : g.genes) {
            if (!(rng.uniform() < params.mutation_rate)) continue;
            const double r = rng.uniform();
            double deltaq;
            if (r < 0.5) {
                const double xy = 1.0 - y;
                const double val = 2.0 * r + (1.0 - 2.0 * r) * std::pow(xy, params.pm_eta + 1.0);
                deltaq = std::pow(val, power) - 1.0;
            } else {
                const double xy = y;
                const double val = 2.0 * (1.0 - r) + 2.0 * (r - 0.5) * std::pow(xy, params.pm_eta + 1.0);
                deltaq = 1.0 - std::pow(val, power);
            }
            y = std::clamp(y + deltaq, 0.0, 1.0);
        }
    };
    mutate(c1);
    mutate(c2);
    return {std::move(c1), std::move(c2)};
}

LayoutGenome de_trial(const LayoutGenome& target, const LayoutGenome& x1, const LayoutGenome& x2,
                      const LayoutGenome& x3, const Gde3Params& params, Rng& rng) {
    const std::size_t n = target.genes.size();
    if (x1.genes.size() != n || x2.genes.size() != n || x3.genes.size() != n)
        throw InvalidArgument("de_trial: genome length mismatch");
    if (n == 0) return target;
    LayoutGenome trial = target;
    const std::size_t j_rand = rng.below(n);
    for (std::size_t j = 0; j < n; ++j) {
        const bool take = rng.uniform() < params.cr || j == j_rand;
        if (!take) continue;
        double v;
        if (params.current_to_rand)
            v = target.genes[j] + params.k * (x1.genes[j] - target.genes[j]) + params.f * (x2.genes[j] - x3.genes[j]);
        else
            v = x1.genes[j] + params.f * (x2.genes[j] - x3.genes[j]);
        trial.genes[j] = std::clamp(v, 0.0, 1.0);
    }
    return trial;
}

std::vector<Individual> pareto_filter(std::span<const Individual> population) {
    std::vector<Individual> feasible;
    for (const auto& ind : population)
        if (ind.feasible) feasible.push_back(ind);
    if (feasible.empty()) return {};

    std::vector<ObjectiveVector> objs;
    objs.reserve(feasible.size());
    for (const auto& ind : feasible) objs.push_back(ind.objectives);
    const auto fronts = fast_nondominated_sort(objs);

    std::vector<Individual> out;
    for (auto i : fronts[0]) {
        Individual ind = feasible[i];
        ind.rank = 0;
        out.push_back(std::move(ind));
    }
    std::sort(out.begin(), out.end(), [](const Individual& a, const Individual& b) {
        if (a.objectives.f1 != b.objectives.f1) return a.objectives.f1 < b.objectives.f1;
        if (a.objectives.f2 != b.objectives.f2) return a.objectives.f2 < b.objectives.f2;
        return a.genome.genes < b.genome.genes;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Individual& a, const Individual& b) { return a.genome == b.genome; }),
              out.end());

    std::vector<ObjectiveVector> final_objs;
    for (const auto& ind : out) final_objs.push_back(ind.objectives);
    const auto crowd = crowding_distance(final_objs);
    for (std::size_t k = 0; k < out.size(); ++k) out[k].crowding = crowd[k];
    return out;
}

namespace {

class Evaluator {
  public:
    Evaluator(const Problem& problem, std::size_t budget) : problem_(problem), budget_(budget) {}

    bool exhausted() const { return used_ >= budget_; }
    std::size_t used() const { return used_; }
    std::size_t remaining() const { return budget_ - used_; }

    Individual operator()(LayoutGenome genome) {
        if (exhausted()) throw Error("evaluation budget exceeded");
        ++used_;
        const auto e = problem_.evaluate(genome);
        Individual ind;
        ind.genome = std::move(genome);
        ind.objectives = e.objectives;
        ind.feasible = e.feasible;
        return ind;
    }

  private:
    const Problem& problem_;
    std::size_t budget_;
    std::size_t used_ = 0;
};

LayoutGenome random_genome(std::size_t length, Rng& rng) {
    LayoutGenome g;
    g.genes.resize(length);
    for (auto& x : g.genes) x = rng.uniform();
    return g;
}

/// Assigns rank and crowding to every member.
void rank_population(std::vector<Individual>& pop) {
    std::vector<ObjectiveVector> objs;
    objs.reserve(pop.size());
    for (const auto& ind : pop) objs.push_back(ind.objectives);
    const auto fronts = fast_nondominated_sort(objs);
    for (std::size_t k = 0; k < fronts.size(); ++k) {
        std::vector<ObjectiveVector> front_objs;
        for (auto i : fronts[k]) front_objs.push_back(objs[i]);
        const auto crowd = crowding_distance(front_objs);
        for (std::size_t m = 0; m < fronts[k].size(); ++m) {
            pop[fronts[k][m]].rank = k;
            pop[fronts[k][m]].crowding = crowd[m];
        }
    }
}

/// Keeps `size` members by rank, then by descending crowding within the
/// front that straddles the cut.
std::vector<Individual> truncate(std::vector<Individual> pool, std::size_t size) {
    std::vector<ObjectiveVector> objs;
    objs.reserve(pool.size());
    for (const auto& ind : pool) objs.push_back(ind.objectives);
    const auto fronts = fast_nondominated_sort(objs);
    std::vector<Individual> next;
    next.reserve(size);
    for (std::size_t k = 0; k < fronts.size() && next.size() < size; ++k) {
        std::vector<ObjectiveVector> front_objs;
        for (auto i : fronts[k]) front_objs.push_back(objs[i]);
        const auto crowd = crowding_distance(front_objs);
        std::vector<std::size_t> order(fronts[k].size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        if (next.size() + order.size() > size)
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return crowd[a] > crowd[b]; });
        for (auto m : order) {
            if (next.size() == size) break;
            Individual ind = std::move(pool[fronts[k][m]]);
            ind.rank = k;
            ind.crowding = crowd[m];
            next.push_back(std::move(ind));
        }
    }
    return next;
}

const Individual& tournament(const std::vector<Individual>& pop, Rng& rng) {
    const auto& a = pop[rng.below(pop.size())];
    const auto& b = pop[rng.below(pop.size())];
    if (a.rank != b.rank) return a.rank < b.rank ? a : b;
    if (a.crowding != b.crowding) return a.crowding > b.crowding ? a : b;
    return a;
}

ParetoArchive finish(const std::vector<Individual>& pop, const OptimizerConfig& config, const Evaluator& eval,
                     std::chrono::steady_clock::time_point start) {
    ParetoArchive archive;
    archive.solutions = pareto_filter(pop);
    archive.config = config;
    archive.provenance.algorithm = config.algorithm;
    archive.provenance.seed = config.seed;
    archive.provenance.evaluations = eval.used();
    archive.provenance.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return archive;
}

}  // namespace

ParetoArchive nsga2(const Problem& problem, const OptimizerConfig& config, const GenerationObserver& observer) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    Rng rng(config.seed);
    Evaluator eval(problem, config.max_evaluations);
    const std::size_t m = config.population;

    std::vector<Individual> pop;
    pop.reserve(m);
    for (std::size_t i = 0; i < m; ++i) pop.push_back(eval(random_genome(problem.genome_length, rng)));
    rank_population(pop);
    if (observer) observer(0, pop);

    for (std::size_t gen = 1; !eval.exhausted(); ++gen) {
        const std::size_t count = std::min(m, eval.remaining());
        std::vector<Individual> pool = pop;
        pool.reserve(m + count);
        std::size_t made = 0;
        while (made < count) {
            const auto& p1 = tournament(pop, rng);
            const auto& p2 = tournament(pop, rng);
            auto [c1, c2] = sbx_and_mutate(p1.genome, p2.genome, config.nsga2, rng);
            pool.push_back(eval(std::move(c1)));
            ++made;
            if (made < count) {
                pool.push_back(eval(std::move(c2)));
                ++made;
            }
        }
        pop = truncate(std::move(pool), m);
        if (observer) observer(gen, pop);
    }
    return finish(pop, config, eval, start);
}

ParetoArchive gde3(const Problem& problem, const OptimizerConfig& config, const GenerationObserver& observer) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    Rng rng(config.seed);
    Evaluator eval(problem, config.max_evaluations);
    const std::size_t m = config.population;

    std::vector<Individual> pop;
    pop.reserve(m);
    for (std::size_t i = 0; i < m; ++i) pop.push_back(eval(random_genome(problem.genome_length, rng)));
    rank_population(pop);
    if (observer) observer(0, pop);

    for (std::size_t gen = 1; !eval.exhausted(); ++gen) {
        std::vector<Individual> next;
        next.reserve(2 * pop.size());
        const std::size_t size = pop.size();
        for (std::size_t i = 0; i < size; ++i) {
            if (eval.exhausted()) {
                next.push_back(pop[i]);
                continue;
            }
            std::array<std::size_t, 3> r{};
            for (std::size_t k = 0; k < 3; ++k) {
                std::size_t pick;
                do {
                    pick = rng.below(size);
                } while (pick == i || std::find(r.begin(), r.begin() + k, pick) != r.begin() + k);
                r[k] = pick;
            }
            Individual trial =
                eval(de_trial(pop[i].genome, pop[r[0]].genome, pop[r[1]].genome, pop[r[2]].genome, config.gde3, rng));
            if (dominates(trial.objectives, pop[i].objectives)) {
                next.push_back(std::move(trial));
            } else if (dominates(pop[i].objectives, trial.objectives)) {
                next.push_back(pop[i]);
            } else {
                next.push_back(pop[i]);
                next.push_back(std::move(trial));
            }
        }
        if (next.size() > m)
            pop = truncate(std::move(next), m);
        else {
            pop = std::move(next);
            rank_population(pop);
        }
        if (observer) observer(gen, pop);
    }
    return finish(pop, config, eval, start);
}

ParetoArchive nsga2(const Scenario& scenario, const OptimizerConfig& config) {
    if (config.algorithm != Algorithm::Nsga2) throw InvalidArgument("nsga2: config.algorithm must be nsga2");
    return nsga2(make_problem(scenario), config);
}

ParetoArchive gde3(const Scenario& scenario, const OptimizerConfig& config) {
    if (config.algorithm != Algorithm::Gde3) throw InvalidArgument("gde3: config.algorithm must be gde3");
    return gde3(make_problem(scenario), config);
}

ParetoArchive optimize(const Scenario& scenario, const OptimizerConfig& config) {
    switch (config.algorithm) {
        case Algorithm::Nsga2: return nsga2(scenario, config);
        case Algorithm::Gde3: return gde3(scenario, config);
        case Algorithm::RandomSearch: return random_search(make_problem(scenario), config.max_evaluations, config.seed);
    }
    throw InvalidArgument("optimize: unknown algorithm");
}

ParetoArchive random_search(const Problem& problem, std::size_t evaluations, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed);
    Evaluator eval(problem, evaluations);
    std::vector<Individual> kept;
    while (!eval.exhausted()) {
        kept.push_back(eval(random_genome(problem.genome_length, rng)));
        // prune periodically so memory stays bounded on long searches
        if (kept.size() >= 4096) kept = pareto_filter(kept);
    }
    OptimizerConfig config;
    config.algorithm = Algorithm::RandomSearch;
    config.population = std::max<std::size_t>(4, std::min<std::size_t>(evaluations, 100));
    config.max_evaluations = evaluations;
    config.seed = seed;
    return finish(kept, config, eval, start);
}

}  // namespace edl
