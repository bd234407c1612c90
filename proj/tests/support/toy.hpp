#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "edlayout/layout.hpp"
#include "edlayout/moo.hpp"
#include "edlayout/scenario.hpp"

namespace toy {

/// Three relocatable areas in the top row around one variable corridor, plus a
/// fixed area in the middle row. Flows and ratings pull in different
/// directions so several orders are Pareto-optimal.
inline edl::Scenario scenario() {
    using namespace edl;
    Scenario s;
    s.meta.name = "toy";
    s.areas = {
        {0, "A", 2.0, 3.0, false, std::nullopt},
        {1, "B", 3.0, 3.0, false, std::nullopt},
        {2, "C", 4.0, 3.0, false, std::nullopt},
        {3, "F", 2.0, 3.0, true, Point{0.0, 5.0}},
    };
    s.flows = FlowMatrix(4, 0.0);
    const double f[4][4] = {{0, 40, 5, 30}, {10, 0, 60, 5}, {5, 20, 0, 50}, {30, 5, 10, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s.flows(i, j) = f[i][j];
    s.ratings = ClosenessMatrix(4, 0);
    const int r[4][4] = {{0, 1, 5, 2}, {1, 0, 1, 4}, {5, 1, 0, 1}, {2, 4, 1, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s.ratings(i, j) = r[i][j];

    auto& t = s.layout_template;
    t.upper_corridor_depth = 2.0;
    t.lower_corridor_depth = 2.0;
    t.corridors = {{"C1", 1.0, 3.0}};
    t.rows = {
        {20.0, 10.0, {Cell::free(), Cell::corridor_cell("C1"), Cell::free(), Cell::free()}},
        {20.0, 5.0, {Cell::fixed(3)}},
        {20.0, 0.0, {}},
    };
    return s;
}

inline constexpr std::size_t kGrid = 11;

/// Objective vectors of every (order, grid corridor width) combination.
inline std::vector<edl::ObjectiveVector> enumerate(const edl::Scenario& s) {
    std::vector<edl::ObjectiveVector> out;
    std::array<int, 3> order{0, 1, 2};
    do {
        for (std::size_t g = 0; g < kGrid; ++g) {
            const double w = 1.0 + 2.0 * static_cast<double>(g) / static_cast<double>(kGrid - 1);
            const auto genome = edl::encode({{order[0], order[1], order[2]}, {}, {}}, {w}, s);
            out.push_back(edl::evaluate(genome, s));
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

/// Non-dominated, deduplicated subset by brute force.
inline std::vector<edl::ObjectiveVector> true_front(const std::vector<edl::ObjectiveVector>& all) {
    std::vector<edl::ObjectiveVector> front;
    for (const auto& p : all) {
        bool dominated = false;
        for (const auto& q : all)
            if (q.f1 <= p.f1 && q.f2 <= p.f2 && (q.f1 < p.f1 || q.f2 < p.f2)) dominated = true;
        if (!dominated && std::find(front.begin(), front.end(), p) == front.end()) front.push_back(p);
    }
    return front;
}

}  // namespace toy
