#pragma once

#include <span>
#include <string>
#include <vector>

#include "edlayout/core.hpp"
#include "edlayout/scenario.hpp"

namespace edl {

/// Real-coded chromosome: one random key per relocatable area followed by one
/// gene per variable-width corridor. All genes lie in [0, 1].
struct LayoutGenome {
    std::vector<double> genes;
    friend bool operator==(const LayoutGenome&, const LayoutGenome&) = default;
};

struct Rect {
    double x = 0.0;  // left edge
    double y = 0.0;  // lower edge
    double width = 0.0;
    double depth = 0.0;

    double right() const { return x + width; }
    double top() const { return y + depth; }
    Point center() const { return {x + 0.5 * width, y + 0.5 * depth}; }
    friend bool operator==(const Rect&, const Rect&) = default;
};

/// Area of the intersection of two rectangles (0 when they only touch).
double overlap_area(const Rect& a, const Rect& b);

struct PlacedBlock {
    std::string name;
    std::size_t row = 0;
    Rect rect;
    friend bool operator==(const PlacedBlock&, const PlacedBlock&) = default;
};

struct PlacedCorridor {
    std::string id;
    std::size_t row = 0;
    Rect rect;  // vertical strip spanning the row band
    friend bool operator==(const PlacedCorridor&, const PlacedCorridor&) = default;
};

struct Violation {
    std::string code;  // "overlap", "row_length", "corridor_bounds", "isolation_rule"
    std::string detail;
    double amount = 0.0;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct DecodedLayout {
    std::vector<Rect> rects;             // indexed by area id
    std::vector<Point> centroids;        // indexed by area id
    std::vector<double> corridor_widths; // template corridor order
    std::vector<std::string> corridor_ids;
    std::vector<std::vector<int>> row_orders;  // relocatable ids per row, left to right
    std::vector<PlacedBlock> blocks;
    std::vector<PlacedCorridor> corridors;
    std::vector<double> row_lengths;
    std::vector<Violation> violations;

    bool feasible() const { return violations.empty(); }
    double violation_total() const;
    friend bool operator==(const DecodedLayout&, const DecodedLayout&) = default;
};

struct ObjectiveVector {
    double f1 = 0.0;  // patient-flow cost, trip * m
    double f2 = 0.0;  // closeness cost, dimensionless
    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

/// Objective value assigned to both components of an infeasible genome is
/// kPenalty * (1 + total violation).
inline constexpr double kPenalty = 1e9;

/// Places every area for a genome. Relocatable areas are ranked by ascending
/// key (ties to the lower id) and poured into the Free cells row by row, left
/// to right. Throws InvalidArgument on a length mismatch or out-of-range gene.
DecodedLayout decode(const LayoutGenome& genome, const Scenario& scenario);

/// Genome whose decode yields the given row orders and corridor widths.
/// `rows` must list every relocatable id once; widths follow the template's
/// corridor order and are ignored for fixed-width corridors.
LayoutGenome encode(const std::vector<std::vector<int>>& rows, const std::vector<double>& corridor_widths,
                    const Scenario& scenario);

double rectilinear_distance(Point p, Point q);

/// Mean width over the relocatable areas (divisor = relocatable count).
double average_relocatable_width(const Scenario& scenario);

double normalized_distance(double distance, double average_width);

/// Rounds nd to the nearest integer and looks it up in the step table.
double adjacency_coefficient(double nd, const AdjacencyCoefficientTable& table);

/// Sum over ordered pairs of f_ij * d_ij. Throws InvalidArgument for an
/// infeasible layout.
double flow_cost(const DecodedLayout& layout, const FlowMatrix& flows);

/// Sum over unordered pairs of r_ij * (1 - b_ij). Lower is better.
double closeness_cost(const DecodedLayout& layout, const Scenario& scenario);

struct Evaluation {
    ObjectiveVector objectives;
    bool feasible = true;
};

Evaluation evaluate_detailed(const LayoutGenome& genome, const Scenario& scenario);
ObjectiveVector evaluate(const LayoutGenome& genome, const Scenario& scenario);

/// "{[2,4,8],[7],[9,0,1]}, C1=3.273 m, C2=3.6 m"
std::string compact_repr(const DecodedLayout& layout);

struct CompactLayout {
    std::vector<std::vector<int>> rows;
    std::vector<std::pair<std::string, double>> corridors;
};

/// Inverse of compact_repr. Throws ParseError on malformed text.
CompactLayout parse_compact_repr(const std::string& text);

}  // namespace edl
