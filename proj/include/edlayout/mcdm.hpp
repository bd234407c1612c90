#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "edlayout/core.hpp"
#include "edlayout/graph.hpp"
#include "edlayout/moo.hpp"
#include "edlayout/scenario.hpp"

namespace edl {

enum class Direction { Minimize, Maximize };

struct Criterion {
    std::string name;
    Direction direction = Direction::Maximize;
    double weight = 1.0;
};

/// scores[c][a] is g_c(a).
struct DecisionMatrix {
    std::vector<std::string> alternatives;
    std::vector<Criterion> criteria;
    std::vector<std::vector<double>> scores;

    std::size_t alternative_count() const { return alternatives.size(); }
    std::size_t criterion_count() const { return criteria.size(); }

    /// Throws InvalidArgument on shape mismatch, non-positive weights or
    /// non-finite scores.
    void validate() const;
};

struct ThresholdPercentages {
    double q = 0.15;
    double p = 0.30;
    double v = 0.50;
};

struct Thresholds {
    double q = 0.0;
    double p = 0.0;
    double v = 0.0;
    bool degenerate = false;  // zero score range
};

struct ThresholdSpec {
    std::vector<Thresholds> per_criterion;

    /// Throws InvalidArgument unless 0 <= q <= p <= v everywhere.
    void validate() const;
};

/// Fractions of each criterion's score range over the alternatives.
ThresholdSpec derive_thresholds(const DecisionMatrix& matrix, ThresholdPercentages pct = {});

/// delta = g(b) - g(a) on the maximization scale.
double concordance_index(double delta, const Thresholds& t);
double discordance_index(double delta, const Thresholds& t);

struct OutrankingModel {
    std::vector<Matrix> concordance;   // per criterion c_i(a, b)
    std::vector<Matrix> discordance;   // per criterion d_i(a, b)
    Matrix overall;                    // C(a, b)
    Matrix credibility;                // sigma(a, b)
};

/// Matrices of pairwise concordance. Returns one matrix per criterion.
std::vector<Matrix> concordance(const DecisionMatrix& matrix, const ThresholdSpec& thresholds);
std::vector<Matrix> discordance(const DecisionMatrix& matrix, const ThresholdSpec& thresholds);
/// Weighted mean of the per-criterion concordance matrices.
Matrix overall_concordance(const DecisionMatrix& matrix, const std::vector<Matrix>& per_criterion);
/// sigma from `overall` and `discordance` of the model (credibility field ignored).
Matrix credibility(const OutrankingModel& model);

OutrankingModel build_outranking(const DecisionMatrix& matrix, const ThresholdSpec& thresholds);

enum class DistillationMode { Full, Simplified };

/// Discrimination threshold s(lambda) = 0.3 - 0.15 lambda.
double discrimination(double lambda);

struct RankResult {
    std::vector<std::vector<std::size_t>> classes;  // best first
    std::vector<std::size_t> descending;            // 1-based position per alternative
    std::vector<std::size_t> ascending;             // 1-based position counted from the top

    /// 1-based rank class of alternative `a`.
    std::size_t rank_of(std::size_t a) const;
};

/// Descending and ascending distillations over sigma, intersected.
RankResult rank(const DecisionMatrix& matrix, const ThresholdSpec& thresholds,
                DistillationMode mode = DistillationMode::Full);

/// Ranking directly from a credibility matrix.
RankResult rank_from_credibility(const Matrix& sigma, DistillationMode mode = DistillationMode::Full);

enum class CriteriaRegime { Objectives, Graph, Combined };

std::string to_string(CriteriaRegime regime);
CriteriaRegime regime_from_string(const std::string& name);

struct DecisionOptions {
    double gamma = 0.75;
    Direction ncpl_direction = Direction::Maximize;
    LengthConvention convention = LengthConvention::InverseWeight;
};

/// One alternative per archived solution. Labels are S1, S2, ... for a single
/// archive and "<algorithm>-<archive index>:S<k>" otherwise.
DecisionMatrix build_decision_matrix(std::span<const ParetoArchive> archives, CriteriaRegime regime,
                                     const Scenario& scenario, const DecisionOptions& options = {});

/// Tab-separated "rank<TAB>solutions" table; one line per class, ids joined by ", ".
void write_rank_table(std::ostream& out, const RankResult& result, const DecisionMatrix& matrix);
void write_decision_matrix_csv(std::ostream& out, const DecisionMatrix& matrix);

}  // namespace edl
