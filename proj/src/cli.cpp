#include "edlayout/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "edlayout/archive.hpp"
#include "edlayout/graph.hpp"
#include "edlayout/mcdm.hpp"
#include "edlayout/metrics.hpp"
#include "edlayout/moo.hpp"
#include "edlayout/render.hpp"
#include "edlayout/scenario.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace edl {

namespace {

struct GlobalOptions {
    std::string scenario;
    std::string flows;
    std::uint64_t flow_seed = kDefaultFlowSeed;
    std::string out = "out";
    std::uint64_t seed = 1;
    std::size_t jobs = 1;
};

struct OptimizeOptions {
    std::string algo = "nsga2";
    std::size_t runs = 5;
    std::size_t population = 100;
    std::size_t generations = 200;
    std::size_t evaluations = 0;  // 0: population * generations
    bool paper_scale = false;
    std::string iterations_as = "evaluations";
    Nsga2Params nsga2;
    Gde3Params gde3;
    std::string variant = "rand/1/bin";
};

struct MeasureOptions {
    std::vector<std::string> archives;
    std::optional<double> gamma;
    std::string convention = "inverse";
};

struct RankOptions {
    std::vector<std::string> archives;
    std::string criteria = "objectives";
    std::optional<double> gamma;
    std::string ncpl = "max";
    std::string convention = "inverse";
    double q = 15.0;
    double p = 30.0;
    double v = 50.0;
    std::string distillation = "full";
};

struct CompareOptions {
    std::vector<std::string> a;
    std::vector<std::string> b;
    std::optional<double> ref_f1;
    std::optional<double> ref_f2;
    bool timing = false;
};

struct RenderOptions {
    std::string archive;
    std::vector<std::string> solutions;
};

Scenario load(const GlobalOptions& g) {
    if (g.scenario.empty() || g.scenario == "builtin") {
        std::optional<fs::path> flows;
        if (!g.flows.empty()) flows = g.flows;
        return builtin_dalian(flows, g.flow_seed);
    }
    if (!fs::exists(g.scenario)) throw ValidationError("scenario file not found: " + g.scenario);
    return load_scenario(g.scenario);
}

std::string scenario_label(const GlobalOptions& g) {
    return g.scenario.empty() ? std::string("builtin") : g.scenario;
}

LengthConvention convention_from(const std::string& name) {
    if (name == "inverse") return LengthConvention::InverseWeight;
    if (name == "direct") return LengthConvention::DirectWeight;
    throw InvalidArgument("unknown length convention '" + name + "' (inverse|direct)");
}

std::vector<ParetoArchive> read_archives(const std::vector<std::string>& paths) {
    if (paths.empty()) throw ValidationError("no archive files given");
    std::vector<ParetoArchive> out;
    for (const auto& p : paths) {
        if (!fs::exists(p)) throw ValidationError("archive not found: " + p);
        out.push_back(read_archive(fs::path(p)));
    }
    return out;
}

std::vector<std::string> labels_for(const std::vector<std::string>& paths, const std::vector<ParetoArchive>& archives) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < archives.size(); ++i)
        for (std::size_t k = 0; k < archives[i].solutions.size(); ++k)
            labels.push_back(archives.size() == 1 ? solution_label(k)
                                                  : fs::path(paths[i]).stem().string() + ":" + solution_label(k));
    return labels;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path.string());
    f << text;
}

std::string utc_now() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// Runs `task(i)` for i in [0, n) on up to `jobs` threads; rethrows the first failure.
template <typename Task>
void parallel_for(std::size_t n, std::size_t jobs, Task task) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < n;) {
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, n));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

int cmd_optimize(const GlobalOptions& g, OptimizeOptions o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
    const auto scenario = load(g);
    OptimizerConfig base;
    base.algorithm = algorithm_from_string(o.algo);
    base.population = o.population;
    base.seed = g.seed;
    base.nsga2 = o.nsga2;
    base.gde3 = o.gde3;
    if (o.variant == "rand/1/bin") base.gde3.current_to_rand = false;
    else if (o.variant == "current-to-rand/1/bin") base.gde3.current_to_rand = true;
    else throw InvalidArgument("unknown GDE3 variant '" + o.variant + "'");

    if (o.paper_scale) {
        if (sub.count("--runs") == 0) o.runs = 50;
        if (o.iterations_as == "evaluations") o.evaluations = 60000;
        else if (o.iterations_as == "generations") o.evaluations = 60000 * o.population;
        else throw InvalidArgument("--iterations-as must be evaluations or generations");
    }
    base.max_evaluations = o.evaluations > 0 ? o.evaluations : o.population * o.generations;
    base.validate();
    if (o.runs == 0) throw InvalidArgument("--runs must be at least 1");

    const fs::path dir = g.out;
    fs::create_directories(dir);
    const auto algo = to_string(base.algorithm);
    out << config_to_json(base).dump(2) << '\n';

    const auto started = utc_now();
    std::vector<ParetoArchive> archives(o.runs);
    std::vector<fs::path> files(o.runs);
    parallel_for(o.runs, g.jobs, [&](std::size_t k) {
        auto config = base;
        config.seed = run_seed(g.seed, k);
        archives[k] = optimize(scenario, config);
        files[k] = dir / (algo + "_run" + std::to_string(k + 1) + ".ndjson");
        write_archive(files[k], archives[k], scenario);
    });

    json runs = json::array();
    for (std::size_t k = 0; k < o.runs; ++k) {
        const auto& a = archives[k];
        runs.push_back({{"run", k + 1},
                        {"seed", a.provenance.seed},
                        {"archive", files[k].filename().string()},
                        {"evaluations", a.provenance.evaluations},
                        {"solutions", a.solutions.size()},
                        {"wall_time_s", a.provenance.wall_time_s}});
        err << algo << " run " << k + 1 << ": " << a.solutions.size() << " solutions, "
            << format_decimal(a.provenance.wall_time_s, 3) << " s\n";
    }
    std::vector<std::uint64_t> seeds;
    for (const auto& a : archives) seeds.push_back(a.provenance.seed);
    json manifest = {{"scenario", scenario_label(g)},
                     {"scenario_name", scenario.meta.name},
                     {"algorithm", algo},
                     {"config", config_to_json(base)},
                     {"base_seed", g.seed},
                     {"seeds", seeds},
                     {"output_dir", dir.string()},
                     {"runs", runs},
                     {"started_at", started},
                     {"finished_at", utc_now()}};
    write_text(dir / (algo + "_manifest.json"), manifest.dump(2) + "\n");
    return kExitOk;
}

int cmd_measure(const GlobalOptions& g, const MeasureOptions& o, std::ostream& out, std::ostream& err) {
    const auto scenario = load(g);
    const auto archives = read_archives(o.archives);
    const auto labels = labels_for(o.archives, archives);
    const auto convention = convention_from(o.convention);
    if (labels.empty()) throw ValidationError("archives hold no solutions");

    std::vector<DecodedLayout> layouts;
    for (const auto& a : archives)
        for (const auto& s : a.solutions) layouts.push_back(decode(s.genome, scenario));

    const fs::path dir = g.out;
    fs::create_directories(dir);

    std::vector<std::pair<std::string, double>> strategies;
    if (o.gamma) {
        if (!(*o.gamma >= 0.0 && *o.gamma <= 1.0)) throw InvalidArgument("--gamma must lie in [0, 1]");
        strategies.emplace_back("", *o.gamma);
    } else {
        for (std::size_t s = 0; s < kStrategyGammas.size(); ++s)
            strategies.emplace_back("_s" + std::to_string(s + 1), kStrategyGammas[s]);
    }

    std::ostringstream global;
    write_global_measures_header(global);
    for (const auto& [suffix, gamma] : strategies) {
        std::ostringstream local;
        write_local_measures_header(local);
        for (std::size_t k = 0; k < layouts.size(); ++k) {
            const auto graph = build_adjacency(layouts[k], scenario, gamma, convention);
            write_local_measures_rows(local, labels[k], local_measures(graph));
            write_global_measures_row(global, labels[k], gamma, global_measures(graph));
        }
        write_text(dir / ("local_measures" + suffix + ".csv"), local.str());
    }
    write_text(dir / "global_measures.csv", global.str());

    const auto report = select_strategy(archives, scenario, convention);
    const auto doc = strategy_report_to_json(report);
    write_text(dir / "strategy_report.json", doc.dump(2) + "\n");
    out << "strategy\tgamma\tGE\tNCPL\tT\tmean\tstd\tcv\n";
    for (std::size_t k = 0; k < report.rows.size(); ++k) {
        const auto& r = report.rows[k];
        out << strategy_name(k) << '\t' << format_decimal(r.averages.gamma, 2) << '\t' << format_general(r.averages.ge, 6)
            << '\t' << format_general(r.averages.ncpl, 6) << '\t' << format_general(r.averages.t, 6) << '\t'
            << format_general(r.mean, 6) << '\t' << format_general(r.std, 6) << '\t' << format_general(r.cv, 6) << '\n';
    }
    out << "selected " << strategy_name(report.selected) << " (gamma = " << format_decimal(report.selected_gamma(), 2)
        << ")\n";
    for (const auto& m : report.skipped_measures) err << "measure " << m << " skipped: degenerate range\n";
    return kExitOk;
}

int cmd_rank(const GlobalOptions& g, const RankOptions& o, std::ostream& out, std::ostream& err) {
    const auto scenario = load(g);
    const auto archives = read_archives(o.archives);
    const auto regime = regime_from_string(o.criteria);

    DecisionOptions options;
    options.convention = convention_from(o.convention);
    if (o.ncpl == "max") options.ncpl_direction = Direction::Maximize;
    else if (o.ncpl == "min") options.ncpl_direction = Direction::Minimize;
    else throw InvalidArgument("--ncpl must be min or max");
    if (regime != CriteriaRegime::Objectives) {
        if (o.gamma) {
            options.gamma = *o.gamma;
        } else {
            options.gamma = select_strategy(archives, scenario, options.convention).selected_gamma();
            err << "gamma " << format_decimal(options.gamma, 2) << " from strategy selection\n";
        }
    }

    auto matrix = build_decision_matrix(archives, regime, scenario, options);
    if (archives.size() > 1) matrix.alternatives = labels_for(o.archives, archives);
    if (matrix.alternative_count() < 2) throw ValidationError("ranking needs at least 2 solutions");

    err << "criteria (" << matrix.criterion_count() << "):";
    for (const auto& c : matrix.criteria) err << ' ' << c.name << (c.direction == Direction::Minimize ? "[min]" : "[max]");
    err << '\n';

    const auto thresholds = derive_thresholds(matrix, {o.q / 100.0, o.p / 100.0, o.v / 100.0});
    for (std::size_t c = 0; c < matrix.criterion_count(); ++c)
        if (thresholds.per_criterion[c].degenerate)
            err << "criterion " << matrix.criteria[c].name << " is constant; thresholds set to 0\n";

    DistillationMode mode;
    if (o.distillation == "full") mode = DistillationMode::Full;
    else if (o.distillation == "simplified") mode = DistillationMode::Simplified;
    else throw InvalidArgument("--distillation must be full or simplified");

    const auto result = rank(matrix, thresholds, mode);
    std::ostringstream table;
    write_rank_table(table, result, matrix);
    out << table.str();

    const fs::path dir = g.out;
    fs::create_directories(dir);
    write_text(dir / ("rank_" + o.criteria + ".txt"), table.str());
    std::ostringstream csv;
    write_decision_matrix_csv(csv, matrix);
    write_text(dir / ("decision_matrix_" + o.criteria + ".csv"), csv.str());
    return kExitOk;
}

struct PairedTests {
    std::vector<double> a;
    std::vector<double> b;
    bool higher_is_better = true;
};

json paired_summary(const std::string& metric, const PairedTests& t, const std::string& algo_a,
                    const std::string& algo_b) {
    std::vector<double> a = t.a, b = t.b;
    if (!t.higher_is_better) std::swap(a, b);
    // wins are always counted for algorithm A
    const auto counts = win_counts(a, b);
    json row = {{"metric", metric},
                {"algorithm_a", algo_a},
                {"algorithm_b", algo_b},
                {"mean_a", std::accumulate(t.a.begin(), t.a.end(), 0.0) / static_cast<double>(t.a.size())},
                {"mean_b", std::accumulate(t.b.begin(), t.b.end(), 0.0) / static_cast<double>(t.b.size())},
                {"wins", counts.wins},
                {"equals", counts.equals},
                {"losses", counts.losses}};
    if (counts.wins + counts.losses == 0) {
        row["sign_p"] = 1.0;
        row["wilcoxon_statistic"] = 0.0;
        row["wilcoxon_p"] = 1.0;
        row["wilcoxon_n"] = 0;
        row["wilcoxon_method"] = "none";
    } else {
        row["sign_p"] = sign_test_p(counts.wins, counts.losses);
        const auto w = wilcoxon_signed_rank(a, b);
        row["wilcoxon_statistic"] = w.statistic;
        row["wilcoxon_p"] = w.p_value;
        row["wilcoxon_n"] = w.n;
        row["wilcoxon_method"] = to_string(w.method);
    }
    return row;
}

std::optional<double> manifest_time(const std::string& archive_path, const ParetoArchive& archive) {
    const auto dir = fs::path(archive_path).parent_path();
    const auto manifest = dir / (to_string(archive.provenance.algorithm) + "_manifest.json");
    if (!fs::exists(manifest)) return std::nullopt;
    std::ifstream f(manifest);
    const auto doc = json::parse(f, nullptr, false);
    if (doc.is_discarded() || !doc.contains("runs")) return std::nullopt;
    for (const auto& r : doc["runs"])
        if (r.value("seed", std::uint64_t{0}) == archive.provenance.seed && r.contains("wall_time_s"))
            return r["wall_time_s"].get<double>();
    return std::nullopt;
}

int cmd_compare(const GlobalOptions& g, const CompareOptions& o, std::ostream& out, std::ostream&) {
    const auto a = read_archives(o.a);
    const auto b = read_archives(o.b);
    if (a.size() != b.size())
        throw ValidationError("paired tests need equal run counts (" + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()) + ")");
    const auto algo_a = to_string(a.front().provenance.algorithm);
    const auto algo_b = to_string(b.front().provenance.algorithm);

    std::vector<FrontSet> fronts_a, fronts_b, all;
    for (const auto& x : a) fronts_a.push_back(front_of(x)), all.push_back(fronts_a.back());
    for (const auto& x : b) fronts_b.push_back(front_of(x)), all.push_back(fronts_b.back());
    for (const auto& f : all)
        if (f.empty()) throw ValidationError("an archive holds no solutions");

    ObjectiveVector ref = default_reference(all);
    if (o.ref_f1) ref.f1 = *o.ref_f1;
    if (o.ref_f2) ref.f2 = *o.ref_f2;

    const std::size_t n = a.size();
    PairedTests hv, fv{{}, {}, false}, cm;
    std::ostringstream runs;
    runs << "run,algorithm,seed,solutions,HV,FV,C_over_other";
    if (o.timing) runs << ",time_s";
    runs << '\n';
    auto row = [&](std::size_t k, const std::string& algo, const ParetoArchive& arc, const FrontSet& f, double h,
                   double v, double c, const std::string& path) {
        runs << k + 1 << ',' << algo << ',' << arc.provenance.seed << ',' << f.size() << ',' << format_general(h) << ','
             << format_general(v) << ',' << format_general(c);
        if (o.timing) {
            const auto t = manifest_time(path, arc);
            runs << ',' << (t ? format_general(*t) : std::string("nan"));
        }
        runs << '\n';
    };
    for (std::size_t k = 0; k < n; ++k) {
        hv.a.push_back(hypervolume(fronts_a[k], ref));
        hv.b.push_back(hypervolume(fronts_b[k], ref));
        fv.a.push_back(average_fitness(fronts_a[k]));
        fv.b.push_back(average_fitness(fronts_b[k]));
        cm.a.push_back(set_coverage(fronts_a[k], fronts_b[k]));
        cm.b.push_back(set_coverage(fronts_b[k], fronts_a[k]));
        row(k, algo_a, a[k], fronts_a[k], hv.a[k], fv.a[k], cm.a[k], o.a[k]);
        row(k, algo_b, b[k], fronts_b[k], hv.b[k], fv.b[k], cm.b[k], o.b[k]);
    }

    json summary = json::array();
    summary.push_back(paired_summary("HV", hv, algo_a, algo_b));
    summary.push_back(paired_summary("FV", fv, algo_a, algo_b));
    summary.push_back(paired_summary("C-metric", cm, algo_a, algo_b));

    std::ostringstream sum;
    sum << "metric,algorithm_a,algorithm_b,mean_a,mean_b,wins,equals,losses,sign_p,wilcoxon_statistic,wilcoxon_p,"
           "wilcoxon_n,wilcoxon_method\n";
    for (const auto& r : summary) {
        sum << r["metric"].get<std::string>() << ',' << algo_a << ',' << algo_b << ','
            << format_general(r["mean_a"].get<double>()) << ',' << format_general(r["mean_b"].get<double>()) << ','
            << r["wins"] << ',' << r["equals"] << ',' << r["losses"] << ',' << format_general(r["sign_p"].get<double>())
            << ',' << format_general(r["wilcoxon_statistic"].get<double>()) << ','
            << format_general(r["wilcoxon_p"].get<double>()) << ',' << r["wilcoxon_n"] << ','
            << r["wilcoxon_method"].get<std::string>() << '\n';
    }

    // normalized objective statistics over the pooled fronts
    auto pooled = [](const std::vector<FrontSet>& fronts) {
        FrontSet u;
        for (const auto& f : fronts) u.insert(u.end(), f.begin(), f.end());
        return u;
    };
    json normalized = nullptr;
    try {
        const auto norm = normalized_objective_stats(pooled(fronts_a), pooled(fronts_b));
        auto entry = [](const NormalizedObjectiveStats& s) {
            return json{{"f1", s.mean_f1}, {"f2", s.mean_f2}, {"mean", s.stats.mean}, {"std", s.stats.std}, {"cv", s.stats.cv}};
        };
        normalized = {{"a", entry(norm.first)}, {"b", entry(norm.second)}};
    } catch (const InvalidArgument&) {
        // zero objective range; nothing to normalize
    }

    json doc = {{"algorithm_a", algo_a},
                {"algorithm_b", algo_b},
                {"runs", n},
                {"hv_reference", {ref.f1, ref.f2}},
                {"HV", {{"a", hv.a}, {"b", hv.b}}},
                {"FV", {{"a", fv.a}, {"b", fv.b}}},
                {"C-metric", {{"a_over_b", cm.a}, {"b_over_a", cm.b}}},
                {"normalized_objectives", normalized},
                {"summary", summary}};

    const fs::path dir = g.out;
    fs::create_directories(dir);
    write_text(dir / "compare_runs.csv", runs.str());
    write_text(dir / "compare_summary.csv", sum.str());
    write_text(dir / "compare.json", doc.dump(2) + "\n");
    out << sum.str();
    return kExitOk;
}

int cmd_render(const GlobalOptions& g, const RenderOptions& o, std::ostream& out, std::ostream&) {
    const auto scenario = load(g);
    if (!fs::exists(o.archive)) throw ValidationError("archive not found: " + o.archive);
    const auto archive = read_archive(fs::path(o.archive));

    std::vector<std::size_t> picks;
    if (o.solutions.empty()) {
        for (std::size_t k = 0; k < archive.solutions.size(); ++k) picks.push_back(k);
    } else {
        for (const auto& id : o.solutions) {
            std::size_t k = 0;
            while (k < archive.solutions.size() && solution_label(k) != id) ++k;
            if (k == archive.solutions.size()) throw ValidationError("solution " + id + " not in archive " + o.archive);
            picks.push_back(k);
        }
    }

    const fs::path dir = g.out;
    fs::create_directories(dir);
    const auto stem = fs::path(o.archive).stem().string();
    for (auto k : picks) {
        const auto& s = archive.solutions[k];
        const auto layout = decode(s.genome, scenario);
        const auto title = solution_label(k) + "  " + compact_repr(layout);
        const auto path = dir / (stem + "_" + solution_label(k) + ".svg");
        write_text(path, render_svg(layout, scenario, title, s.objectives));
        out << path.string() << '\n';
    }
    return kExitOk;
}

int cmd_scenario(const GlobalOptions& g, std::ostream& out) {
    const auto scenario = load(g);
    const auto report = validate(scenario);
    const fs::path dir = g.out;
    fs::create_directories(dir);
    save_scenario(scenario, dir / "scenario.json");
    out << scenario.meta.name << ": " << scenario.size() << " areas, " << scenario.genome_length() << " genes, "
        << (report.ok() ? std::string("valid") : report.summary()) << '\n';
    return report.ok() ? kExitOk : kExitValidation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Emergency department layout optimization and analysis", "edlayout"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--scenario", g.scenario, "Scenario JSON file (default: built-in instance)");
    app.add_option("--flows", g.flows, "Flow CSV for the built-in instance");
    app.add_option("--flow-seed", g.flow_seed, "Seed of the synthetic flow matrix");
    app.add_option("--out", g.out, "Output directory")->capture_default_str();
    app.add_option("--seed", g.seed, "Base seed")->capture_default_str();
    app.add_option("--jobs", g.jobs, "Concurrent runs")->capture_default_str()->check(CLI::PositiveNumber);

    OptimizeOptions opt;
    auto* optimize_cmd = app.add_subcommand("optimize", "Run the optimizer and write one archive per seed");
    optimize_cmd->add_option("--algo", opt.algo, "nsga2 | gde3 | random")->capture_default_str();
    optimize_cmd->add_option("--runs", opt.runs, "Independent runs")->capture_default_str();
    optimize_cmd->add_option("--population", opt.population)->capture_default_str();
    optimize_cmd->add_option("--generations", opt.generations)->capture_default_str();
    optimize_cmd->add_option("--evaluations", opt.evaluations, "Evaluation budget (overrides --generations)");
    optimize_cmd->add_flag("--paper-scale", opt.paper_scale, "50 runs with a 60000-iteration budget");
    optimize_cmd->add_option("--iterations-as", opt.iterations_as, "Unit of the paper-scale budget")
        ->capture_default_str();
    optimize_cmd->add_option("--crossover-rate", opt.nsga2.crossover_rate)->capture_default_str();
    optimize_cmd->add_option("--mutation-rate", opt.nsga2.mutation_rate)->capture_default_str();
    optimize_cmd->add_option("--sbx-eta", opt.nsga2.sbx_eta)->capture_default_str();
    optimize_cmd->add_option("--pm-eta", opt.nsga2.pm_eta)->capture_default_str();
    optimize_cmd->add_option("--K", opt.gde3.k)->capture_default_str();
    optimize_cmd->add_option("--Cr", opt.gde3.cr)->capture_default_str();
    optimize_cmd->add_option("--F", opt.gde3.f)->capture_default_str();
    optimize_cmd->add_option("--variant", opt.variant, "rand/1/bin | current-to-rand/1/bin")->capture_default_str();

    MeasureOptions mo;
    auto* measure_cmd = app.add_subcommand("measure", "Graph measures and adjacency strategy selection");
    measure_cmd->add_option("archives", mo.archives, "Archive files")->required();
    measure_cmd->add_option("--gamma", mo.gamma, "Single strategy weight in [0, 1]");
    measure_cmd->add_option("--convention", mo.convention, "inverse | direct")->capture_default_str();

    RankOptions ro;
    auto* rank_cmd = app.add_subcommand("rank", "ELECTRE-III ranking of archived solutions");
    rank_cmd->add_option("archives", ro.archives, "Archive files")->required();
    rank_cmd->add_option("--criteria", ro.criteria, "objectives | graph | combined")->capture_default_str();
    rank_cmd->add_option("--gamma", ro.gamma, "Adjacency weight for graph criteria");
    rank_cmd->add_option("--ncpl", ro.ncpl, "NCPL direction: max | min")->capture_default_str();
    rank_cmd->add_option("--convention", ro.convention, "inverse | direct")->capture_default_str();
    rank_cmd->add_option("--q", ro.q, "Indifference threshold, % of range")->capture_default_str();
    rank_cmd->add_option("--p", ro.p, "Preference threshold, % of range")->capture_default_str();
    rank_cmd->add_option("--v", ro.v, "Veto threshold, % of range")->capture_default_str();
    rank_cmd->add_option("--distillation", ro.distillation, "full | simplified")->capture_default_str();

    CompareOptions co;
    auto* compare_cmd = app.add_subcommand("compare", "Indicators and paired tests between two algorithms");
    compare_cmd->add_option("--a", co.a, "Archives of the first algorithm, one per run")->required();
    compare_cmd->add_option("--b", co.b, "Archives of the second algorithm, one per run")->required();
    compare_cmd->add_option("--ref-f1", co.ref_f1, "Hypervolume reference, first objective");
    compare_cmd->add_option("--ref-f2", co.ref_f2, "Hypervolume reference, second objective");
    compare_cmd->add_flag("--timing", co.timing, "Add wall times from the run manifests");

    RenderOptions rd;
    auto* render_cmd = app.add_subcommand("render", "Draw archived layouts as SVG");
    render_cmd->add_option("archive", rd.archive, "Archive file")->required();
    render_cmd->add_option("--solution", rd.solutions, "Solution ids (default: all)");

    auto* scenario_cmd = app.add_subcommand("scenario", "Validate the scenario and write it as JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*optimize_cmd) return cmd_optimize(g, opt, *optimize_cmd, out, err);
        if (*measure_cmd) return cmd_measure(g, mo, out, err);
        if (*rank_cmd) return cmd_rank(g, ro, out, err);
        if (*compare_cmd) return cmd_compare(g, co, out, err);
        if (*render_cmd) return cmd_render(g, rd, out, err);
        if (*scenario_cmd) return cmd_scenario(g, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace edl
