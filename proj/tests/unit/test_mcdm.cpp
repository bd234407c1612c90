#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "edlayout/mcdm.hpp"
#include "support/toy.hpp"

using namespace edl;

namespace {

DecisionMatrix two_max(std::vector<double> g1, std::vector<double> g2) {
    DecisionMatrix m;
    for (std::size_t a = 0; a < g1.size(); ++a) m.alternatives.push_back(std::string(1, static_cast<char>('a' + a)));
    m.criteria = {{"g1", Direction::Maximize, 1.0}, {"g2", Direction::Maximize, 1.0}};
    m.scores = {std::move(g1), std::move(g2)};
    return m;
}

ThresholdSpec uniform_thresholds(std::size_t criteria, double q, double p, double v) {
    ThresholdSpec t;
    t.per_criterion.assign(criteria, Thresholds{q, p, v, false});
    return t;
}

}  // namespace

TEST_CASE("thresholds from the score range") {
    DecisionMatrix m;
    m.alternatives = {"x", "y", "z"};
    m.criteria = {{"g", Direction::Minimize, 1.0}, {"h", Direction::Maximize, 1.0}};
    m.scores = {{100, 150, 200}, {7, 7, 7}};
    const auto t = derive_thresholds(m);
    CHECK(t.per_criterion[0].q == doctest::Approx(15));
    CHECK(t.per_criterion[0].p == doctest::Approx(30));
    CHECK(t.per_criterion[0].v == doctest::Approx(50));
    CHECK_FALSE(t.per_criterion[0].degenerate);
    CHECK(t.per_criterion[1].degenerate);
    CHECK(t.per_criterion[1].q == 0.0);
    CHECK(t.per_criterion[1].v == 0.0);

    auto scaled = m;
    for (auto& v : scaled.scores[0]) v *= 3.0;
    CHECK(derive_thresholds(scaled).per_criterion[0].p == doctest::Approx(90));

    ThresholdSpec bad = uniform_thresholds(1, 2, 1, 3);
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("concordance and discordance indices") {
    const Thresholds t{1, 3, 5, false};
    CHECK(concordance_index(0.5, t) == 1.0);
    CHECK(concordance_index(2.0, t) == doctest::Approx(0.5));
    CHECK(concordance_index(5.0, t) == 0.0);
    CHECK(discordance_index(2.0, t) == 0.0);
    CHECK(discordance_index(4.0, t) == doctest::Approx(0.5));
    CHECK(discordance_index(9.0, t) == 1.0);
}

TEST_CASE("credibility") {
    OutrankingModel m;
    m.overall = Matrix(2, 0.0);
    m.overall(0, 1) = 0.6;
    m.overall(1, 0) = 0.4;
    m.discordance = {Matrix(2, 0.0)};
    auto sigma = credibility(m);
    CHECK(sigma(0, 1) == doctest::Approx(0.6));
    CHECK(sigma(1, 0) == doctest::Approx(0.4));

    m.discordance[0](0, 1) = 0.8;
    CHECK(credibility(m)(0, 1) == doctest::Approx(0.3));
    m.discordance[0](0, 1) = 0.5;  // not above C: no effect
    CHECK(credibility(m)(0, 1) == doctest::Approx(0.6));
    m.discordance[0](0, 1) = 1.0;
    CHECK(credibility(m)(0, 1) == 0.0);
}

TEST_CASE("hand-computed three alternative instance") {
    // a = (10, 10), b = (8, 14), c = (4, 6); q = 1, p = 3, v = 6 on both
    const auto m = two_max({10, 8, 4}, {10, 14, 6});
    const auto t = uniform_thresholds(2, 1, 3, 6);
    const auto model = build_outranking(m, t);
    const auto& s = model.credibility;
    CHECK(s(0, 1) == doctest::Approx(0.5));
    CHECK(s(1, 0) == doctest::Approx(0.75));
    CHECK(s(0, 2) == doctest::Approx(1.0));
    CHECK(s(2, 0) == 0.0);
    CHECK(s(1, 2) == doctest::Approx(1.0));
    CHECK(s(2, 1) == 0.0);
    CHECK(model.discordance[1](0, 1) == doctest::Approx(1.0 / 3.0));

    const auto r = rank(m, t);
    REQUIRE(r.classes.size() == 3);
    CHECK(r.classes[0] == std::vector<std::size_t>{1});
    CHECK(r.classes[1] == std::vector<std::size_t>{0});
    CHECK(r.classes[2] == std::vector<std::size_t>{2});
    CHECK(r.rank_of(1) == 1);
    CHECK(r.rank_of(2) == 3);
    CHECK(r.descending == std::vector<std::size_t>{2, 1, 3});
    CHECK(r.ascending == std::vector<std::size_t>{2, 1, 3});

    // a single qualification step at the first cut cannot separate a from b
    const auto one = rank(m, t, DistillationMode::Simplified);
    REQUIRE(one.classes.size() == 2);
    CHECK(one.classes[0] == std::vector<std::size_t>{0, 1});
    CHECK(one.classes[1] == std::vector<std::size_t>{2});
}

TEST_CASE("unanimous preference and ties") {
    const auto m = two_max({10, 2}, {10, 2});
    const auto r = rank(m, uniform_thresholds(2, 1, 3, 6));
    CHECK(r.rank_of(0) == 1);
    CHECK(r.rank_of(1) == 2);

    const auto same = two_max({5, 5, 5}, {3, 3, 3});
    const auto tied = rank(same, derive_thresholds(same));
    REQUIRE(tied.classes.size() == 1);
    CHECK(tied.classes[0].size() == 3);
}

TEST_CASE("minimized criteria are mirrored") {
    DecisionMatrix m = two_max({10, 2}, {10, 2});
    m.criteria[0].direction = Direction::Minimize;
    m.criteria[1].direction = Direction::Minimize;
    const auto r = rank(m, uniform_thresholds(2, 1, 3, 6));
    CHECK(r.rank_of(1) == 1);
}

TEST_CASE("ranking is unchanged when one criterion is rescaled") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t alts = 3 + rng.below(6), crits = 2 + rng.below(4);
        DecisionMatrix m;
        for (std::size_t a = 0; a < alts; ++a) m.alternatives.push_back("S" + std::to_string(a + 1));
        for (std::size_t c = 0; c < crits; ++c) {
            m.criteria.push_back({"g" + std::to_string(c), c % 2 ? Direction::Minimize : Direction::Maximize, 1.0});
            std::vector<double> col;
            for (std::size_t a = 0; a < alts; ++a) col.push_back(std::round(rng.uniform() * 1000.0) / 10.0);
            m.scores.push_back(col);
        }
        const auto base = rank(m, derive_thresholds(m)).classes;
        for (double k : {0.01, 100.0}) {
            auto scaled = m;
            const std::size_t c = rng.below(crits);
            for (auto& v : scaled.scores[c]) v *= k;
            CHECK(rank(scaled, derive_thresholds(scaled)).classes == base);
        }
    }
}

TEST_CASE("decision matrix validation") {
    auto m = two_max({1, 2}, {3, 4});
    CHECK_NOTHROW(m.validate());
    m.scores[1].pop_back();
    CHECK_THROWS_AS(m.validate(), InvalidArgument);
    m = two_max({1, 2}, {3, 4});
    m.criteria[0].weight = 0.0;
    CHECK_THROWS_AS(m.validate(), InvalidArgument);
}

TEST_CASE("decision matrices built from archives") {
    const auto s = builtin_dalian();
    OptimizerConfig c;
    c.max_evaluations = 1500;
    c.seed = 4;
    std::vector<ParetoArchive> one{optimize(s, c)};
    const std::size_t n = one[0].solutions.size();
    REQUIRE(n >= 1);

    const auto obj = build_decision_matrix(one, CriteriaRegime::Objectives, s);
    CHECK(obj.criterion_count() == 2);
    CHECK(obj.alternative_count() == n);
    CHECK(obj.scores[0][0] == one[0].solutions[0].objectives.f1);
    CHECK(obj.alternatives[0] == "S1");

    const auto all = build_decision_matrix(one, CriteriaRegime::Combined, s);
    CHECK(all.criterion_count() == 5);

    DecisionOptions opt;
    opt.gamma = 0.5;
    const auto graph = build_decision_matrix(one, CriteriaRegime::Graph, s, opt);
    REQUIRE(graph.criterion_count() == 3);
    const auto g = build_adjacency(decode(one[0].solutions[0].genome, s), s, 0.5);
    const auto gm = global_measures(g);
    CHECK(graph.scores[0][0] == gm.global_efficiency);
    CHECK(graph.scores[1][0] == gm.transitivity);
    CHECK(graph.scores[2][0] == gm.char_path_length);

    std::vector<ParetoArchive> two{one[0], one[0]};
    const auto both = build_decision_matrix(two, CriteriaRegime::Objectives, s);
    CHECK(both.alternative_count() == 2 * n);
    CHECK(both.alternatives[0].find(":S1") != std::string::npos);

    CHECK(regime_from_string("combined") == CriteriaRegime::Combined);
    CHECK(to_string(CriteriaRegime::Graph) == "graph");
    CHECK_THROWS(regime_from_string("everything"));
}

TEST_CASE("rank table layout") {
    const auto m = two_max({10, 8, 8}, {10, 14, 14});
    const auto r = rank(m, uniform_thresholds(2, 1, 3, 6));
    std::ostringstream out;
    write_rank_table(out, r, m);
    const auto text = out.str();
    CHECK(text.rfind("rank\tsolutions\n", 0) == 0);
    CHECK(text.find("b, c") != std::string::npos);
}
