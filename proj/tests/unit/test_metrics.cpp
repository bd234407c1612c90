#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edlayout/metrics.hpp"
#include "support/oracles.hpp"

using namespace edl;

TEST_CASE("hypervolume") {
    const FrontSet f{{1, 3}, {2, 2}, {3, 1}};
    CHECK(hypervolume(f, {4, 4}) == 6.0);
    CHECK(hypervolume(FrontSet{{1, 1}}, {2, 2}) == 1.0);
    FrontSet more = f;
    more.push_back({3, 3});
    CHECK(hypervolume(more, {4, 4}) == 6.0);
    CHECK(hypervolume(FrontSet{{5, 5}}, {4, 4}) == 0.0);
    CHECK(hypervolume(FrontSet{}, {4, 4}) == 0.0);
    CHECK_THROWS_AS(hypervolume(FrontSet{{kInf, 1}}, {4, 4}), InvalidArgument);
}

TEST_CASE("hypervolume agrees with inclusion-exclusion") {
    Rng rng(10);
    for (int trial = 0; trial < 500; ++trial) {
        FrontSet f;
        const std::size_t n = 1 + rng.below(6);
        for (std::size_t i = 0; i < n; ++i) {
            if (trial % 3 == 0)
                f.push_back({static_cast<double>(rng.below(5)), static_cast<double>(rng.below(5))});
            else
                f.push_back({rng.uniform() * 4.0, rng.uniform() * 4.0});
        }
        const ObjectiveVector ref{4.2, 4.2};
        CHECK(hypervolume(f, ref) == doctest::Approx(oracle::union_of_boxes(f, ref)).epsilon(1e-12));
    }
}

TEST_CASE("reference point and average fitness") {
    const std::vector<FrontSet> fronts{{{1, 5}, {2, 3}}, {{4, 1}}};
    const auto ref = default_reference(fronts);
    CHECK(ref.f1 == doctest::Approx(4.4));
    CHECK(ref.f2 == doctest::Approx(5.5));
    CHECK(average_fitness(FrontSet{{10, 2}}) == 6.0);
    CHECK(average_fitness(FrontSet{{2, 2}, {4, 4}}) == 3.0);
    // objectives of the published magnitude give FV near half the flow cost
    CHECK(average_fitness(FrontSet{{1.07e7, 150}}) == doctest::Approx(5.35e6).epsilon(1e-3));
    CHECK_THROWS_AS(average_fitness(FrontSet{}), InvalidArgument);
}

TEST_CASE("set coverage") {
    CHECK(set_coverage(FrontSet{{1, 1}}, FrontSet{{2, 2}, {0, 3}}) == 50.0);
    const FrontSet f{{1, 3}, {2, 2}};
    CHECK(set_coverage(f, f) == 0.0);
    CHECK(set_coverage(FrontSet{{0, 0}}, f) == 100.0);
    CHECK_THROWS_AS(set_coverage(f, FrontSet{}), InvalidArgument);
}

TEST_CASE("wilcoxon signed rank") {
    const std::vector<double> x{1.1, 2.2, 3.3, 4.4, 5.5}, zero(5, 0.0);
    const auto r = wilcoxon_signed_rank(x, zero);
    CHECK(r.w_minus == 0.0);
    CHECK(r.w_plus == 15.0);
    CHECK(r.p_value == 0.0625);
    CHECK(r.method == TestMethod::Exact);

    const auto swapped = wilcoxon_signed_rank(zero, x);
    CHECK(swapped.statistic == -r.statistic);
    CHECK(swapped.p_value == r.p_value);

    CHECK_THROWS_AS(wilcoxon_signed_rank(x, x), InvalidArgument);
    CHECK_THROWS_AS(wilcoxon_signed_rank(x, std::vector<double>{1.0}), InvalidArgument);
}

TEST_CASE("exact wilcoxon p equals full sign enumeration") {
    Rng rng(6);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.below(10);
        std::vector<double> x, y;
        for (std::size_t i = 0; i < n; ++i) {
            // coarse values force ties and some zero differences
            x.push_back(static_cast<double>(rng.below(6)));
            y.push_back(static_cast<double>(rng.below(6)));
        }
        if (x == y) continue;
        bool all_zero = true;
        for (std::size_t i = 0; i < n; ++i) all_zero = all_zero && x[i] == y[i];
        if (all_zero) continue;
        CHECK(wilcoxon_signed_rank(x, y).p_value == doctest::Approx(oracle::wilcoxon_enumerated_p(x, y)).epsilon(1e-12));
    }
}

TEST_CASE("fifty shifted pairs are highly significant") {
    Rng rng(50);
    std::vector<double> x, y;
    for (int i = 0; i < 50; ++i) {
        const double base = rng.uniform();
        x.push_back(base + 0.3 + 0.1 * rng.uniform());
        y.push_back(base + 0.1 * rng.uniform());
    }
    const auto r = wilcoxon_signed_rank(x, y);
    CHECK(r.method == TestMethod::NormalApproximation);
    CHECK(r.p_value < 1e-4);
}

TEST_CASE("sign test") {
    CHECK(sign_test_p(8, 0) == 0.0078125);
    CHECK(sign_test_p(4, 4) == 1.0);
    CHECK(sign_test_p(45, 5) < 1e-4);
    for (std::size_t w = 0; w <= 30; ++w)
        for (std::size_t l = 0; l + w <= 30; ++l)
            if (w + l > 0) CHECK(sign_test_p(w, l) == oracle::binomial_two_sided(w, l));
    CHECK_THROWS_AS(sign_test_p(0, 0), InvalidArgument);

    const std::vector<double> x{3, 2, 5, 1}, y{1, 2, 4, 0};
    const auto r = sign_test(x, y);
    CHECK(r.w_plus == 3.0);
    CHECK(r.n == 3);
    CHECK(r.p_value == 0.25);
}

TEST_CASE("spread statistics") {
    const std::vector<double> a{0.292, 0.454}, b{0.481, 0.264};
    const auto sa = spread_stats(a), sb = spread_stats(b);
    CHECK(sa.mean == doctest::Approx(0.373).epsilon(2e-3));
    CHECK(sa.std == doctest::Approx(0.114).epsilon(1e-2));
    CHECK(sa.cv == doctest::Approx(0.306).epsilon(1e-2));
    CHECK(sb.mean == doctest::Approx(0.373).epsilon(2e-3));
    CHECK(sb.std == doctest::Approx(0.153).epsilon(1e-2));
    CHECK(sb.cv == doctest::Approx(0.411).epsilon(1e-2));
    CHECK_THROWS_AS(spread_stats(std::vector<double>{1.0}), InvalidArgument);
}

TEST_CASE("normalized objective statistics") {
    const FrontSet a{{0, 10}, {10, 0}}, b{{5, 5}};
    const auto [na, nb] = normalized_objective_stats(a, b);
    CHECK(na.mean_f1 == doctest::Approx(0.5));
    CHECK(nb.mean_f2 == doctest::Approx(0.5));
    const auto [x, y] = normalized_objective_stats(a, a);
    CHECK(x.stats.mean == y.stats.mean);
    CHECK(x.stats.cv == y.stats.cv);
    CHECK_THROWS_AS(normalized_objective_stats(FrontSet{{1, 1}}, FrontSet{{1, 1}}), InvalidArgument);
}

TEST_CASE("win counts") {
    const std::vector<double> x{1, 2, 3}, y{0, 2, 4};
    const auto c = win_counts(x, y);
    CHECK(c.wins == 1);
    CHECK(c.equals == 1);
    CHECK(c.losses == 1);
}
