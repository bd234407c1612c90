#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "edlayout/layout.hpp"
#include "support/toy.hpp"

using namespace edl;

namespace {

LayoutGenome uniform_genome(const Scenario& s, double key) {
    LayoutGenome g;
    g.genes.assign(s.genome_length(), key);
    return g;
}

/// Hand model of the toy row: areas packed from x = 0 with the corridor after
/// the first one, all on the row baseline; F anchored below.
ObjectiveVector toy_by_hand(const Scenario& s, std::array<int, 3> order, double corridor) {
    std::array<Point, 4> c{};
    double x = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        const auto& a = s.areas[static_cast<std::size_t>(order[k])];
        c[static_cast<std::size_t>(order[k])] = {x + a.width / 2, 10.0 + a.depth / 2};
        x += a.width + (k == 0 ? corridor : 0.0);
    }
    c[3] = {1.0, 6.5};
    const double avg = 3.0;  // (2 + 3 + 4) / 3
    ObjectiveVector v;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double d = std::abs(c[i].x - c[j].x) + std::abs(c[i].y - c[j].y);
            v.f1 += s.flows(i, j) * d;
            if (i < j) {
                const double nd = std::round(d / avg);
                const double b = nd >= 4 ? 0.0 : 1.0 - 0.25 * nd;
                v.f2 += s.ratings(i, j) * (1.0 - b);
            }
        }
    return v;
}

}  // namespace

TEST_CASE("equal keys place areas in id order") {
    const auto s = builtin_dalian();
    const auto layout = decode(uniform_genome(s, 0.5), s);
    REQUIRE(layout.row_orders.size() == 3);
    CHECK(layout.row_orders[0] == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(layout.row_orders[1] == std::vector<int>{9});
    CHECK(layout.row_orders[2] == std::vector<int>{10, 11, 12});
    CHECK(compact_repr(layout).rfind("{[0,1,2,3,4,5,6,7,8],[9],[10,11,12]}, ", 0) == 0);
}

TEST_CASE("reversed keys reverse the placement") {
    const auto s = builtin_dalian();
    auto g = uniform_genome(s, 0.5);
    for (std::size_t i = 0; i < 13; ++i) g.genes[i] = 1.0 - static_cast<double>(i) / 13.0;
    const auto layout = decode(g, s);
    CHECK(layout.row_orders[0] == std::vector<int>{12, 11, 10, 9, 8, 7, 6, 5, 4});
    CHECK(layout.row_orders[1] == std::vector<int>{3});
    CHECK(layout.row_orders[2] == std::vector<int>{2, 1, 0});
}

TEST_CASE("corridor gene maps onto the width bounds") {
    const auto s = builtin_dalian();
    auto g = uniform_genome(s, 0.5);
    g.genes.back() = 0.0;
    CHECK(decode(g, s).corridor_widths.at(0) == doctest::Approx(2.4));
    g.genes.back() = 1.0;
    CHECK(decode(g, s).corridor_widths.at(0) == doctest::Approx(4.0));
    CHECK(decode(g, s).corridor_widths.at(1) == doctest::Approx(3.6));
}

TEST_CASE("published layout S17 round trips through the compact form") {
    const auto s = builtin_dalian();
    const std::vector<std::vector<int>> rows{{2, 4, 8, 10, 5, 11, 6, 12, 3}, {7}, {9, 0, 1}};
    const auto layout = decode(encode(rows, {3.273, 3.6}, s), s);
    CHECK(layout.feasible());
    const auto text = compact_repr(layout);
    CHECK(text == "{[2,4,8,10,5,11,6,12,3],[7],[9,0,1]}, C1=3.273 m, C2=3.6 m");
    const auto parsed = parse_compact_repr(text);
    CHECK(parsed.rows == rows);
    REQUIRE(parsed.corridors.size() == 2);
    CHECK(parsed.corridors[0].first == "C1");
    CHECK(parsed.corridors[0].second == doctest::Approx(3.273));
    CHECK_THROWS_AS(parse_compact_repr("{[1,2],[3]"), ParseError);
    CHECK_THROWS_AS(parse_compact_repr("nonsense"), ParseError);
}

TEST_CASE("decode rejects bad genomes") {
    const auto s = builtin_dalian();
    CHECK_THROWS_AS(decode(LayoutGenome{{0.5, 0.5}}, s), InvalidArgument);
    auto g = uniform_genome(s, 0.5);
    g.genes[0] = 1.5;
    CHECK_THROWS_AS(decode(g, s), InvalidArgument);
}

TEST_CASE("every permutation of the built-in instance is feasible") {
    const auto s = builtin_dalian();
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        LayoutGenome g;
        for (std::size_t i = 0; i < s.genome_length(); ++i) g.genes.push_back(rng.uniform());
        const auto layout = decode(g, s);
        CHECK(layout.feasible());
        for (std::size_t a = 0; a < layout.rects.size(); ++a)
            for (std::size_t b = a + 1; b < layout.rects.size(); ++b)
                CHECK(overlap_area(layout.rects[a], layout.rects[b]) == 0.0);
    }
}

TEST_CASE("rectilinear distance") {
    CHECK(rectilinear_distance({0, 0}, {3, 4}) == 7.0);
    CHECK(rectilinear_distance({2.5, -1}, {2.5, -1}) == 0.0);
    Rng rng(11);
    for (int k = 0; k < 100; ++k) {
        Point p{rng.uniform() * 50, rng.uniform() * 50}, q{rng.uniform() * 50, rng.uniform() * 50};
        CHECK(rectilinear_distance(p, q) == rectilinear_distance(q, p));
    }
}

TEST_CASE("average relocatable width and normalized distance") {
    CHECK(average_relocatable_width(builtin_dalian()) == doctest::Approx(50.9 / 13));
    auto s = toy::scenario();
    CHECK(average_relocatable_width(s) == doctest::Approx(3.0));
    s.areas[0].fixed = true;
    s.areas[0].anchor = Point{30, 10};
    s.areas[2].fixed = true;
    s.areas[2].anchor = Point{40, 10};
    CHECK(average_relocatable_width(s) == doctest::Approx(3.0));  // only B left
    s.areas[1].width = 5.0;
    CHECK(average_relocatable_width(s) == doctest::Approx(5.0));

    CHECK(normalized_distance(7.83, 3.915) == doctest::Approx(2.0));
    CHECK(normalized_distance(0.0, 3.9) == 0.0);
    CHECK(normalized_distance(3 * 7.1, 3 * 2.2) == doctest::Approx(normalized_distance(7.1, 2.2)));
}

TEST_CASE("adjacency coefficient table lookup") {
    const auto t = AdjacencyCoefficientTable::standard();
    CHECK(adjacency_coefficient(0.3, t) == 1.0);
    CHECK(adjacency_coefficient(1.4, t) == 0.75);
    CHECK(adjacency_coefficient(2.6, t) == 0.25);
    CHECK(adjacency_coefficient(7.0, t) == 0.0);
    Rng rng(5);
    for (int k = 0; k < 50; ++k) {
        AdjacencyCoefficientTable r{{{0.0, 1.0}}};
        double b = 1.0;
        for (int step = 1; step < 5; ++step) {
            b -= rng.uniform() * b;
            r.steps.push_back({static_cast<double>(step), b});
        }
        REQUIRE(r.check().empty());
        double prev = 2.0;
        for (double nd = 0.0; nd < 8.0; nd += 0.1) {
            const double v = adjacency_coefficient(nd, r);
            CHECK(v <= prev);
            prev = v;
        }
    }
}

TEST_CASE("flow and closeness cost on hand-built layouts") {
    DecodedLayout two;
    two.centroids = {{0, 0}, {3, 4}};
    FlowMatrix f(2, 0.0);
    f(0, 1) = 5.0;
    CHECK(flow_cost(two, f) == 35.0);
    CHECK(flow_cost(two, FlowMatrix(2, 0.0)) == 0.0);
    FlowMatrix f2 = f;
    f2(0, 1) = 10.0;
    CHECK(flow_cost(two, f2) == 2 * flow_cost(two, f));

    Scenario s;
    s.areas = {{0, "a", 4.0, 3.0, false, std::nullopt}, {1, "b", 4.0, 3.0, false, std::nullopt}};
    s.ratings = ClosenessMatrix(2, 0);
    s.ratings(0, 1) = s.ratings(1, 0) = 4;
    DecodedLayout near;
    near.centroids = {{0, 0}, {1, 0}};  // nd = 0.25
    CHECK(closeness_cost(near, s) == 0.0);
    DecodedLayout far;
    far.centroids = {{0, 0}, {20, 0}};  // nd = 5
    CHECK(closeness_cost(far, s) == 4.0);
    s.ratings(0, 1) = s.ratings(1, 0) = 0;
    CHECK(closeness_cost(far, s) == 0.0);
}

TEST_CASE("toy objectives agree with a hand model for every order and width") {
    const auto s = toy::scenario();
    REQUIRE(validate(s).ok());
    std::array<int, 3> order{0, 1, 2};
    do {
        for (double w : {1.0, 1.6, 3.0}) {
            const auto g = encode({{order[0], order[1], order[2]}, {}, {}}, {w}, s);
            const auto got = evaluate(g, s);
            const auto want = toy_by_hand(s, order, w);
            CHECK(got.f1 == doctest::Approx(want.f1).epsilon(1e-12));
            CHECK(got.f2 == doctest::Approx(want.f2).epsilon(1e-12));
        }
    } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("evaluate") {
    auto s = builtin_dalian();
    Rng rng(9);
    LayoutGenome g;
    for (std::size_t i = 0; i < s.genome_length(); ++i) g.genes.push_back(rng.uniform());
    // rescaling keys keeps the order, so the geometry and objectives are unchanged
    LayoutGenome h = g;
    for (std::size_t i = 0; i < 13; ++i) h.genes[i] = g.genes[i] * 0.5;
    CHECK(evaluate(g, s) == evaluate(h, s));
    s.flows = FlowMatrix(s.size(), 0.0);
    CHECK(evaluate(g, s).f1 == 0.0);
}

TEST_CASE("infeasible genomes get the penalty") {
    auto s = toy::scenario();
    s.layout_template.rows[0].max_length = 8.0;  // 9 m of areas plus the corridor cannot fit
    const auto e = evaluate_detailed(encode({{0, 1, 2}, {}, {}}, {1.0}, s), s);
    CHECK_FALSE(e.feasible);
    CHECK(e.objectives.f1 >= kPenalty);
    CHECK(e.objectives.f1 == e.objectives.f2);
}
