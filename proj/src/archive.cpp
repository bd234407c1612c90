#include "edlayout/archive.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace edl {

using nlohmann::json;

json config_to_json(const OptimizerConfig& c) {
    return {{"algorithm", to_string(c.algorithm)},
            {"population", c.population},
            {"max_evaluations", c.max_evaluations},
            {"seed", c.seed},
            {"nsga2",
             {{"crossover_rate", c.nsga2.crossover_rate},
              {"mutation_rate", c.nsga2.mutation_rate},
              {"sbx_eta", c.nsga2.sbx_eta},
              {"pm_eta", c.nsga2.pm_eta}}},
            {"gde3",
             {{"K", c.gde3.k},
              {"Cr", c.gde3.cr},
              {"F", c.gde3.f},
              {"variant", c.gde3.current_to_rand ? "current-to-rand/1/bin" : "rand/1/bin"}}}};
}

OptimizerConfig config_from_json(const json& doc) {
    OptimizerConfig c;
    try {
        c.algorithm = algorithm_from_string(doc.at("algorithm").get<std::string>());
        c.population = doc.at("population").get<std::size_t>();
        c.max_evaluations = doc.at("max_evaluations").get<std::size_t>();
        c.seed = doc.at("seed").get<std::uint64_t>();
        const auto& n = doc.at("nsga2");
        c.nsga2.crossover_rate = n.at("crossover_rate").get<double>();
        c.nsga2.mutation_rate = n.at("mutation_rate").get<double>();
        c.nsga2.sbx_eta = n.at("sbx_eta").get<double>();
        c.nsga2.pm_eta = n.at("pm_eta").get<double>();
        const auto& g = doc.at("gde3");
        c.gde3.k = g.at("K").get<double>();
        c.gde3.cr = g.at("Cr").get<double>();
        c.gde3.f = g.at("F").get<double>();
        c.gde3.current_to_rand = g.at("variant").get<std::string>() != "rand/1/bin";
    } catch (const json::exception& e) {
        throw ParseError(std::string("optimizer config: ") + e.what());
    }
    return c;
}

std::string solution_label(std::size_t index) { return "S" + std::to_string(index + 1); }

void write_archive(std::ostream& out, const ParetoArchive& archive, const Scenario& scenario) {
    const auto algo = to_string(archive.provenance.algorithm);
    json header = {{"type", "header"},
                   {"algorithm", algo},
                   {"seed", archive.provenance.seed},
                   {"scenario", scenario.meta.name},
                   {"config", config_to_json(archive.config)},
                   {"evaluations", archive.provenance.evaluations},
                   {"solutions", archive.solutions.size()}};
    out << header.dump() << '\n';
    for (std::size_t k = 0; k < archive.solutions.size(); ++k) {
        const auto& s = archive.solutions[k];
        json rec = {{"type", "solution"},
                    {"id", solution_label(k)},
                    {"algorithm", algo},
                    {"seed", archive.provenance.seed},
                    {"genome", s.genome.genes},
                    {"f1", s.objectives.f1},
                    {"f2", s.objectives.f2},
                    {"layout", compact_repr(decode(s.genome, scenario))}};
        out << rec.dump() << '\n';
    }
}

void write_archive(const std::filesystem::path& path, const ParetoArchive& archive, const Scenario& scenario) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write archive " + path.string());
    write_archive(out, archive, scenario);
}

ParetoArchive read_archive(std::istream& in) {
    ParetoArchive archive;
    std::string line;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError("archive line " + std::to_string(line_no) + ": " + e.what());
        }
        const auto type = rec.value("type", "");
        try {
            if (type == "header") {
                archive.config = config_from_json(rec.at("config"));
                archive.provenance.algorithm = algorithm_from_string(rec.at("algorithm").get<std::string>());
                archive.provenance.seed = rec.at("seed").get<std::uint64_t>();
                archive.provenance.evaluations = rec.at("evaluations").get<std::size_t>();
                header_seen = true;
            } else if (type == "solution") {
                Individual ind;
                ind.genome.genes = rec.at("genome").get<std::vector<double>>();
                ind.objectives = {rec.at("f1").get<double>(), rec.at("f2").get<double>()};
                archive.solutions.push_back(std::move(ind));
            } else {
                throw ParseError("archive line " + std::to_string(line_no) + ": unknown record type '" + type + "'");
            }
        } catch (const json::exception& e) {
            throw ParseError("archive line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!header_seen) throw ParseError("archive has no header line");
    return archive;
}

ParetoArchive read_archive(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open archive " + path.string());
    return read_archive(in);
}

}  // namespace edl
