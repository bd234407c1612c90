#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edlayout/archive.hpp"
#include "edlayout/cli.hpp"
#include "edlayout/graph.hpp"
#include "edlayout/layout.hpp"
#include "edlayout/metrics.hpp"
#include "edlayout/moo.hpp"
#include "edlayout/scenario.hpp"

namespace py = pybind11;
using namespace edl;

namespace {

Scenario scenario_from(const std::string& json_text) {
    if (json_text.empty()) return builtin_dalian();
    return scenario_from_json(nlohmann::json::parse(json_text));
}

std::vector<ObjectiveVector> points(const std::vector<std::pair<double, double>>& xs) {
    std::vector<ObjectiveVector> out;
    for (auto [a, b] : xs) out.push_back({a, b});
    return out;
}

py::dict test_result(const TestResult& r) {
    py::dict d;
    d["statistic"] = r.statistic;
    d["p_value"] = r.p_value;
    d["n"] = r.n;
    d["method"] = to_string(r.method);
    return d;
}

}  // namespace

PYBIND11_MODULE(_edlayout, m) {
    m.doc() = "Emergency department layout optimization core";

    py::register_exception<Error>(m, "Error");
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

    m.def("builtin_scenario_json", [](std::uint64_t flow_seed) { return scenario_to_json(builtin_dalian(std::nullopt, flow_seed)).dump(); },
          py::arg("flow_seed") = kDefaultFlowSeed, "Built-in 20-area instance as a JSON string.");

    m.def("genome_length", [](const std::string& scenario) { return scenario_from(scenario).genome_length(); },
          py::arg("scenario") = "");

    m.def(
        "evaluate",
        [](const std::vector<double>& genes, const std::string& scenario) {
            const auto s = scenario_from(scenario);
            const auto e = evaluate_detailed(LayoutGenome{genes}, s);
            return py::make_tuple(e.objectives.f1, e.objectives.f2, e.feasible);
        },
        py::arg("genes"), py::arg("scenario") = "", "(f1, f2, feasible) of a genome.");

    m.def(
        "describe",
        [](const std::vector<double>& genes, const std::string& scenario) {
            const auto s = scenario_from(scenario);
            return compact_repr(decode(LayoutGenome{genes}, s));
        },
        py::arg("genes"), py::arg("scenario") = "");

    m.def(
        "optimize",
        [](const std::string& algorithm, std::size_t evaluations, std::uint64_t seed, std::size_t population,
           const std::string& scenario) {
            const auto s = scenario_from(scenario);
            OptimizerConfig c;
            c.algorithm = algorithm_from_string(algorithm);
            c.max_evaluations = evaluations;
            c.population = population;
            c.seed = seed;
            ParetoArchive a;
            {
                py::gil_scoped_release release;
                a = optimize(s, c);
            }
            py::list out;
            for (std::size_t i = 0; i < a.solutions.size(); ++i) {
                const auto& x = a.solutions[i];
                py::dict d;
                d["id"] = solution_label(i);
                d["genes"] = x.genome.genes;
                d["f1"] = x.objectives.f1;
                d["f2"] = x.objectives.f2;
                d["layout"] = compact_repr(decode(x.genome, s));
                out.append(d);
            }
            return out;
        },
        py::arg("algorithm") = "nsga2", py::arg("evaluations") = 20000, py::arg("seed") = 1,
        py::arg("population") = 100, py::arg("scenario") = "", "Pareto archive of one seeded run.");

    m.def("hypervolume", [](const std::vector<std::pair<double, double>>& front, std::pair<double, double> ref) {
        return hypervolume(points(front), {ref.first, ref.second});
    });
    m.def("set_coverage", [](const std::vector<std::pair<double, double>>& a, const std::vector<std::pair<double, double>>& b) {
        return set_coverage(points(a), points(b));
    });
    m.def("average_fitness", [](const std::vector<std::pair<double, double>>& front) { return average_fitness(points(front)); });
    m.def("wilcoxon_signed_rank", [](const std::vector<double>& x, const std::vector<double>& y) {
        return test_result(wilcoxon_signed_rank(x, y));
    });
    m.def("sign_test_p", &sign_test_p, py::arg("wins"), py::arg("losses"));

    m.def(
        "global_measures",
        [](const std::vector<std::vector<double>>& weights, bool inverse) {
            const std::size_t n = weights.size();
            Matrix w(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                if (weights[i].size() != n) throw InvalidArgument("weights must be square");
                for (std::size_t j = 0; j < n; ++j) w(i, j) = weights[i][j];
            }
            const auto g = LayoutGraph::from_weights(
                w, inverse ? LengthConvention::InverseWeight : LengthConvention::DirectWeight);
            const auto gm = global_measures(g);
            py::dict d;
            d["global_efficiency"] = gm.global_efficiency;
            d["transitivity"] = gm.transitivity;
            d["char_path_length"] = gm.char_path_length;
            return d;
        },
        py::arg("weights"), py::arg("inverse") = true);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
