#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "edlayout/moo.hpp"
#include "edlayout/scenario.hpp"

namespace edl {

nlohmann::json config_to_json(const OptimizerConfig& config);
OptimizerConfig config_from_json(const nlohmann::json& doc);

/// Label of the k-th (0-based) archive solution: "S1", "S2", ...
std::string solution_label(std::size_t index);

/// Newline-delimited JSON. The first line is the run header
/// {"type":"header","algorithm",...,"config":{...},"evaluations":n,"solutions":k};
/// each further line is one solution
/// {"type":"solution","id":"S1","algorithm","seed","genome":[...],"f1","f2","layout":"{[...],...}, C1=... m"}.
/// Wall time is not written so identical runs produce identical bytes.
void write_archive(std::ostream& out, const ParetoArchive& archive, const Scenario& scenario);
void write_archive(const std::filesystem::path& path, const ParetoArchive& archive, const Scenario& scenario);

ParetoArchive read_archive(std::istream& in);
ParetoArchive read_archive(const std::filesystem::path& path);

}  // namespace edl
