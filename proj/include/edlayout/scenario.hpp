#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "edlayout/core.hpp"

namespace edl {

struct ServiceArea {
    int id = 0;
    std::string name;
    double width = 0.0;  // W_i, meters along the row
    double depth = 0.0;  // D_i, meters across the row
    bool fixed = false;
    std::optional<Point> anchor;  // lower-left corner, fixed areas only

    friend bool operator==(const ServiceArea&, const ServiceArea&) = default;
};

using FlowMatrix = Matrix;
using ClosenessMatrix = SquareMatrix<int>;

/// Step table mapping a rounded normalized distance to an adjacency
/// coefficient b in [0, 1]. Step k applies to rounded distances up to and
/// including `max_nd`; the last step covers everything beyond.
struct AdjacencyCoefficientTable {
    struct Step {
        double max_nd = 0.0;
        double b = 0.0;
        friend bool operator==(const Step&, const Step&) = default;
    };
    std::vector<Step> steps;

    /// {0 -> 1, 1 -> 0.75, 2 -> 0.5, 3 -> 0.25, >=4 -> 0}
    static AdjacencyCoefficientTable standard();

    /// Empty string when valid, otherwise the first violated invariant.
    std::string check() const;

    friend bool operator==(const AdjacencyCoefficientTable&, const AdjacencyCoefficientTable&) = default;
};

enum class CellKind { Fixed, Free, Corridor, Block };

/// One slot of a template row.
///
/// Fixed cells pin a fixed service area at its anchor. Free cells receive the
/// next relocatable area in rank order. Corridor cells insert a vertical
/// corridor whose width comes from the corridor table. Block cells are inert
/// auxiliary rooms (toilet, security room, ...) that either float with the
/// packing cursor or are pinned at `anchor_x`.
struct Cell {
    CellKind kind = CellKind::Free;
    int area = -1;             // Fixed
    std::string corridor;      // Corridor
    std::string name;          // Block
    double width = 0.0;        // Block
    double depth = 0.0;        // Block
    std::optional<double> anchor_x;  // Block

    static Cell fixed(int area_id);
    static Cell free();
    static Cell corridor_cell(std::string id);
    static Cell block(std::string name, double width, double depth,
                      std::optional<double> anchor_x = std::nullopt);

    friend bool operator==(const Cell&, const Cell&) = default;
};

struct TemplateRow {
    double max_length = 0.0;  // L_r
    double baseline_y = 0.0;  // y of the lower edge of the row band
    std::vector<Cell> cells;

    std::size_t free_cells() const;
    friend bool operator==(const TemplateRow&, const TemplateRow&) = default;
};

struct CorridorBounds {
    std::string id;
    double min_width = 0.0;
    double max_width = 0.0;

    bool variable() const { return max_width > min_width; }
    friend bool operator==(const CorridorBounds&, const CorridorBounds&) = default;
};

/// Requires exactly `free_cells_left` Free cells to the left of the named block
/// in the same row.
struct IsolationRule {
    std::string block;
    int free_cells_left = 4;
    friend bool operator==(const IsolationRule&, const IsolationRule&) = default;
};

struct PlacementTemplate {
    std::vector<TemplateRow> rows;  // exactly three, top to bottom
    std::vector<CorridorBounds> corridors;
    std::optional<IsolationRule> isolation;
    double upper_corridor_depth = 0.0;  // H_1
    double lower_corridor_depth = 0.0;  // H_2

    std::size_t free_cells() const;
    const CorridorBounds* find_corridor(const std::string& id) const;
    /// Corridors that carry a gene, in declaration order.
    std::vector<std::size_t> variable_corridors() const;

    friend bool operator==(const PlacementTemplate&, const PlacementTemplate&) = default;
};

struct ScenarioMeta {
    std::string name;
    std::string units = "m";
    std::string flow_source;
    friend bool operator==(const ScenarioMeta&, const ScenarioMeta&) = default;
};

/// Immutable problem instance. Share by const reference across runs.
struct Scenario {
    std::vector<ServiceArea> areas;
    FlowMatrix flows;
    ClosenessMatrix ratings;
    PlacementTemplate layout_template;
    AdjacencyCoefficientTable b_table = AdjacencyCoefficientTable::standard();
    ScenarioMeta meta;

    std::size_t size() const { return areas.size(); }
    std::vector<int> relocatable_ids() const;
    std::size_t relocatable_count() const;
    /// Number of genes a layout genome needs for this scenario.
    std::size_t genome_length() const;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct Finding {
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<Finding> findings;

    bool ok() const { return findings.empty(); }
    bool has(const std::string& code) const;
    std::string summary() const;
};

ValidationReport validate(const Scenario& scenario);

/// Parses a scenario document. Relative flow CSV paths resolve against
/// `base_dir`. Throws ParseError on malformed input and ValidationError when
/// the parsed instance breaks an invariant.
Scenario scenario_from_json(const nlohmann::json& doc,
                            const std::filesystem::path& base_dir = {});
nlohmann::json scenario_to_json(const Scenario& scenario);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

/// Reads an N x N comma separated flow file without a header.
FlowMatrix read_flow_csv(const std::filesystem::path& path);

/// Uniform integer flows in [0, 500], zero on the diagonal and wherever the
/// closeness rating is 0. This is placeholder data, not published flows.
FlowMatrix synthetic_flows(const ClosenessMatrix& ratings, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultFlowSeed = 20240607;

/// The 20-area Dalian emergency department instance. Flows come from
/// `flow_csv` when given, otherwise from synthetic_flows(ratings, flow_seed).
Scenario builtin_dalian(const std::optional<std::filesystem::path>& flow_csv = std::nullopt,
                        std::uint64_t flow_seed = kDefaultFlowSeed);

}  // namespace edl
