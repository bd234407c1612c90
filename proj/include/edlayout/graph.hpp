#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "edlayout/core.hpp"
#include "edlayout/layout.hpp"
#include "edlayout/moo.hpp"
#include "edlayout/scenario.hpp"

namespace edl {

/// How edge weights turn into path lengths for the weighted measures (ECC, GE,
/// NCPL). InverseWeight: length = 1 / A_ij, so strong links are short.
/// DirectWeight: length = A_ij.
enum class LengthConvention { InverseWeight, DirectWeight };

/// Undirected layout graph. No-edge entries of `lengths` are infinite.
struct LayoutGraph {
    Matrix weights;
    SquareMatrix<int> binary;
    Matrix lengths;

    std::size_t size() const { return weights.size(); }

    /// Throws InvalidArgument unless `weights` is symmetric, non-negative and
    /// has a zero diagonal.
    static LayoutGraph from_weights(Matrix weights, LengthConvention convention = LengthConvention::InverseWeight);
};

/// A_ij = (gamma * (f_ij + f_ji) + (1 - gamma) * r_ij) * d_ij.
LayoutGraph build_adjacency(const DecodedLayout& layout, const Scenario& scenario, double gamma,
                            LengthConvention convention = LengthConvention::InverseWeight);

struct DegreeCentrality {
    std::vector<int> degree;
    std::vector<double> centrality;
};

struct Betweenness {
    std::vector<double> raw;         // ordered (h, j) pairs
    std::vector<double> normalized;  // raw / ((N-1)(N-2))
};

DegreeCentrality degree_and_centrality(const LayoutGraph& g);
/// Hop-count closeness; 0 for a node that cannot reach every other node.
std::vector<double> closeness_centrality(const LayoutGraph& g);
Betweenness betweenness(const LayoutGraph& g);
std::vector<double> clustering(const LayoutGraph& g);
/// Weighted eccentricity; infinite when some node is unreachable.
std::vector<double> eccentricity(const LayoutGraph& g);
std::vector<double> strength(const LayoutGraph& g);
double global_efficiency(const LayoutGraph& g);
double transitivity(const LayoutGraph& g);
/// Infinite for a disconnected graph.
double char_path_length(const LayoutGraph& g);

/// Hop distances (infinite when unreachable).
Matrix hop_distances(const LayoutGraph& g);
/// Weighted shortest-path distances over `lengths`.
Matrix weighted_distances(const LayoutGraph& g);

struct LocalMeasures {
    std::vector<int> degree;
    std::vector<double> degree_centrality;
    std::vector<double> closeness;
    std::vector<double> betweenness;  // normalized
    std::vector<double> clustering;
    std::vector<double> eccentricity;
    std::vector<double> strength;
};

struct GlobalMeasures {
    double global_efficiency = 0.0;
    double transitivity = 0.0;
    double char_path_length = 0.0;
};

LocalMeasures local_measures(const LayoutGraph& g);
GlobalMeasures global_measures(const LayoutGraph& g);

/// Weighting parameter of each adjacency strategy S(I)..S(V).
inline constexpr std::array<double, 5> kStrategyGammas{0.0, 0.25, 0.5, 0.75, 1.0};
std::string strategy_name(std::size_t index);

/// Per-strategy averages of the normalized global measures.
struct StrategyAverages {
    double gamma = 0.0;
    double ge = 0.0;
    double ncpl = 0.0;
    double t = 0.0;
};

struct StrategyRow {
    StrategyAverages averages;
    double mean = 0.0;
    double std = 0.0;  // sample standard deviation over the usable measures
    double cv = 0.0;   // std / mean
};

struct StrategyReport {
    std::vector<StrategyRow> rows;
    std::size_t selected = 0;
    std::vector<std::string> skipped_measures;  // degenerate normalization range

    double selected_gamma() const { return rows.at(selected).averages.gamma; }
};

/// Mean, sample std and Cv over each row's (GE, NCPL, T) averages; selects the
/// lowest Cv with ties going to the earlier (smaller gamma) row.
StrategyReport summarize_strategies(std::span<const StrategyAverages> rows,
                                    std::span<const std::string> skipped = {});

/// Computes GE, NCPL and T for every archived solution under every strategy,
/// min-max normalizes each measure over all (strategy, solution) pairs and
/// summarizes. Throws InvalidArgument when no solutions are given.
StrategyReport select_strategy(std::span<const ParetoArchive> archives, const Scenario& scenario,
                               LengthConvention convention = LengthConvention::InverseWeight);

nlohmann::json strategy_report_to_json(const StrategyReport& report);

/// 1 - sum_b min(h_x(b), h_y(b)) over equal-width bins spanning the pooled
/// range of both samples, with frequency-normalized histograms.
double histogram_distance(std::span<const double> x, std::span<const double> y, std::size_t bins);

/// solution,node,degree,degree_centrality,closeness,betweenness,clustering,eccentricity,strength
void write_local_measures_header(std::ostream& out);
void write_local_measures_rows(std::ostream& out, const std::string& solution, const LocalMeasures& m);
/// solution,gamma,global_efficiency,transitivity,char_path_length
void write_global_measures_header(std::ostream& out);
void write_global_measures_row(std::ostream& out, const std::string& solution, double gamma, const GlobalMeasures& m);

}  // namespace edl
