#pragma once

#include <span>
#include <string>
#include <vector>

#include "edlayout/core.hpp"
#include "edlayout/layout.hpp"
#include "edlayout/moo.hpp"

namespace edl {

/// Minimization objective vectors.
using FrontSet = std::vector<ObjectiveVector>;

FrontSet front_of(const ParetoArchive& archive);

/// 2-D sweep. Points not strictly better than `ref` in both objectives are
/// dropped first; an empty remainder gives 0.
double hypervolume(std::span<const ObjectiveVector> front, ObjectiveVector ref);

/// Componentwise maximum over all given fronts, times `scale`.
ObjectiveVector default_reference(std::span<const FrontSet> fronts, double scale = 1.1);

/// Mean of (f1 + f2) / 2.
double average_fitness(std::span<const ObjectiveVector> front);

/// Percentage of `m2` dominated by at least one member of `m1`.
double set_coverage(std::span<const ObjectiveVector> m1, std::span<const ObjectiveVector> m2);

enum class TestMethod { Exact, NormalApproximation };

std::string to_string(TestMethod method);

struct TestResult {
    double statistic = 0.0;  // Wilcoxon: W+ - W-; sign test: wins - losses
    double p_value = 1.0;
    std::size_t n = 0;       // pairs left after dropping zero differences
    TestMethod method = TestMethod::Exact;
    double w_plus = 0.0;     // Wilcoxon rank sums, or sign-test wins/losses
    double w_minus = 0.0;
};

/// Two-sided paired test on x - y. Exact for n <= 12, normal approximation
/// with continuity and tie correction above.
TestResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y);

/// Two-sided exact binomial test on the sign of x - y, ties dropped.
TestResult sign_test(std::span<const double> x, std::span<const double> y);

/// Two-sided p = min(1, 2 P(X <= min(wins, losses))), X ~ Bin(wins + losses, 1/2).
double sign_test_p(std::size_t wins, std::size_t losses);

struct SpreadStats {
    double mean = 0.0;
    double std = 0.0;  // sample
    double cv = 0.0;
};

/// Mean, sample standard deviation and std / mean of `values`.
SpreadStats spread_stats(std::span<const double> values);

struct NormalizedObjectiveStats {
    double mean_f1 = 0.0;
    double mean_f2 = 0.0;
    SpreadStats stats;
};

/// Per set: means of each objective after min-max normalization over a U b,
/// then spread statistics across the two means.
std::pair<NormalizedObjectiveStats, NormalizedObjectiveStats> normalized_objective_stats(
    std::span<const ObjectiveVector> a, std::span<const ObjectiveVector> b);

struct WinCounts {
    std::size_t wins = 0;
    std::size_t equals = 0;
    std::size_t losses = 0;
};

/// Counts x_i > y_i, x_i == y_i, x_i < y_i.
WinCounts win_counts(std::span<const double> x, std::span<const double> y);

}  // namespace edl
