#include "edlayout/mcdm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

#include "edlayout/archive.hpp"

namespace edl {

void DecisionMatrix::validate() const {
    if (scores.size() != criteria.size())
        throw InvalidArgument("decision matrix: " + std::to_string(criteria.size()) + " criteria but " +
                              std::to_string(scores.size()) + " score rows");
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        if (!(criteria[c].weight > 0.0) || !std::isfinite(criteria[c].weight))
            throw InvalidArgument("decision matrix: criterion '" + criteria[c].name + "' needs a positive weight");
        if (scores[c].size() != alternatives.size())
            throw InvalidArgument("decision matrix: criterion '" + criteria[c].name + "' has " +
                                  std::to_string(scores[c].size()) + " scores for " +
                                  std::to_string(alternatives.size()) + " alternatives");
        for (double v : scores[c])
            if (!std::isfinite(v)) throw InvalidArgument("decision matrix: non-finite score for '" + criteria[c].name + "'");
    }
}

void ThresholdSpec::validate() const {
    for (const auto& t : per_criterion)
        if (!(t.q >= 0.0 && t.q <= t.p && t.p <= t.v))
            throw InvalidArgument("thresholds must satisfy 0 <= q <= p <= v");
}

ThresholdSpec derive_thresholds(const DecisionMatrix& matrix, ThresholdPercentages pct) {
    matrix.validate();
    if (!(pct.q >= 0.0 && pct.q <= pct.p && pct.p <= pct.v))
        throw InvalidArgument("threshold percentages must satisfy 0 <= q <= p <= v");
    ThresholdSpec spec;
    for (const auto& row : matrix.scores) {
        Thresholds t;
        if (!row.empty()) {
            const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
            const double range = *hi - *lo;
            if (range > 0.0) {
                t.q = pct.q * range;
                t.p = pct.p * range;
                t.v = pct.v * range;
            } else {
                t.degenerate = true;
            }
        } else {
            t.degenerate = true;
        }
        spec.per_criterion.push_back(t);
    }
    return spec;
}

double concordance_index(double delta, const Thresholds& t) {
    if (delta <= t.q) return 1.0;
    if (delta > t.p) return 0.0;
    return (t.p - delta) / (t.p - t.q);
}

double discordance_index(double delta, const Thresholds& t) {
    if (delta <= t.p) return 0.0;
    if (delta > t.v) return 1.0;
    return (delta - t.p) / (t.v - t.p);
}

namespace {

void check_pair(const DecisionMatrix& matrix, const ThresholdSpec& thresholds) {
    matrix.validate();
    thresholds.validate();
    if (thresholds.per_criterion.size() != matrix.criterion_count())
        throw InvalidArgument("threshold count does not match criterion count");
}

/// g(b) - g(a) after turning minimized criteria into maximized ones.
double oriented_delta(const DecisionMatrix& m, std::size_t c, std::size_t a, std::size_t b) {
    const double d = m.scores[c][b] - m.scores[c][a];
    return m.criteria[c].direction == Direction::Maximize ? d : -d;
}

template <typename Index>
std::vector<Matrix> per_criterion(const DecisionMatrix& matrix, const ThresholdSpec& thresholds, Index index) {
    check_pair(matrix, thresholds);
    const std::size_t n = matrix.alternative_count();
    std::vector<Matrix> out;
    for (std::size_t c = 0; c < matrix.criterion_count(); ++c) {
        Matrix m(n, 0.0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                m(a, b) = index(oriented_delta(matrix, c, a, b), thresholds.per_criterion[c]);
        out.push_back(std::move(m));
    }
    return out;
}

// sigma values are snapped to this grid so that rescaling a criterion, which
// perturbs the last bits of the interpolated indices, cannot flip a comparison
// inside the distillation.
constexpr double kSigmaGrid = 1e12;

double snap(double v) { return std::round(v * kSigmaGrid) / kSigmaGrid; }

}  // namespace

std::vector<Matrix> concordance(const DecisionMatrix& matrix, const ThresholdSpec& thresholds) {
    return per_criterion(matrix, thresholds, concordance_index);
}

std::vector<Matrix> discordance(const DecisionMatrix& matrix, const ThresholdSpec& thresholds) {
    return per_criterion(matrix, thresholds, discordance_index);
}

Matrix overall_concordance(const DecisionMatrix& matrix, const std::vector<Matrix>& per_criterion_c) {
    if (per_criterion_c.size() != matrix.criterion_count())
        throw InvalidArgument("concordance matrices do not match criterion count");
    const std::size_t n = matrix.alternative_count();
    double total_weight = 0.0;
    for (const auto& c : matrix.criteria) total_weight += c.weight;
    Matrix out(n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            double s = 0.0;
            for (std::size_t c = 0; c < per_criterion_c.size(); ++c) s += matrix.criteria[c].weight * per_criterion_c[c](a, b);
            out(a, b) = s / total_weight;
        }
    }
    return out;
}

Matrix credibility(const OutrankingModel& model) {
    const std::size_t n = model.overall.size();
    Matrix sigma(n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const double c = model.overall(a, b);
            double s = c;
            for (const auto& d : model.discordance) {
                const double di = d(a, b);
                if (di >= 1.0) {
                    s = 0.0;
                    break;
                }
                if (di > c) s *= (1.0 - di) / (1.0 - c);
            }
            sigma(a, b) = snap(s);
        }
    }
    return sigma;
}

OutrankingModel build_outranking(const DecisionMatrix& matrix, const ThresholdSpec& thresholds) {
    OutrankingModel model;
    model.concordance = concordance(matrix, thresholds);
    model.discordance = discordance(matrix, thresholds);
    model.overall = overall_concordance(matrix, model.concordance);
    model.credibility = credibility(model);
    return model;
}

double discrimination(double lambda) { return 0.3 - 0.15 * lambda; }

std::size_t RankResult::rank_of(std::size_t a) const {
    for (std::size_t k = 0; k < classes.size(); ++k)
        if (std::find(classes[k].begin(), classes[k].end(), a) != classes[k].end()) return k + 1;
    throw InvalidArgument("rank_of: unknown alternative");
}

namespace {

bool outranks(const Matrix& sigma, std::size_t a, std::size_t b, double lambda) {
    const double s = sigma(a, b);
    return s > lambda && s > sigma(b, a) + discrimination(s);
}

/// Largest sigma among distinct members of `set` strictly below `bound`, or 0.
double next_level(const Matrix& sigma, const std::vector<std::size_t>& set, double bound) {
    double best = 0.0;
    for (auto a : set)
        for (auto b : set)
            if (a != b && sigma(a, b) < bound) best = std::max(best, sigma(a, b));
    return best;
}

std::vector<long> qualifications(const Matrix& sigma, const std::vector<std::size_t>& set, double lambda) {
    std::vector<long> q(set.size(), 0);
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = 0; j < set.size(); ++j) {
            if (i == j) continue;
            if (outranks(sigma, set[i], set[j], lambda)) {
                ++q[i];
                --q[j];
            }
        }
    }
    return q;
}

std::vector<std::size_t> extreme(const std::vector<std::size_t>& set, const std::vector<long>& q, bool best) {
    const long target = best ? *std::max_element(q.begin(), q.end()) : *std::min_element(q.begin(), q.end());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < set.size(); ++i)
        if (q[i] == target) out.push_back(set[i]);
    return out;
}

/// One distillation; returns classes in extraction order.
std::vector<std::vector<std::size_t>> distill(const Matrix& sigma, bool descending) {
    std::vector<std::size_t> remaining(sigma.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    std::vector<std::vector<std::size_t>> classes;
    while (!remaining.empty()) {
        std::vector<std::size_t> d = remaining;
        double lambda = 0.0;
        for (auto a : d)
            for (auto b : d)
                if (a != b) lambda = std::max(lambda, sigma(a, b));
        while (d.size() > 1) {
            const double next = next_level(sigma, d, lambda - discrimination(lambda));
            d = extreme(d, qualifications(sigma, d, next), descending);
            if (next == 0.0) break;
            lambda = next;
        }
        classes.push_back(d);
        std::erase_if(remaining, [&](std::size_t a) { return std::find(d.begin(), d.end(), a) != d.end(); });
    }
    return classes;
}

std::vector<std::size_t> positions(const std::vector<std::vector<std::size_t>>& classes, std::size_t n, bool reversed) {
    std::vector<std::size_t> pos(n, 0);
    for (std::size_t k = 0; k < classes.size(); ++k)
        for (auto a : classes[k]) pos[a] = reversed ? classes.size() - k : k + 1;
    return pos;
}

}  // namespace

RankResult rank_from_credibility(const Matrix& sigma, DistillationMode mode) {
    const std::size_t n = sigma.size();
    if (n < 2) throw InvalidArgument("ranking needs at least 2 alternatives");
    RankResult result;

    if (mode == DistillationMode::Simplified) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        double lambda = 0.0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (a != b) lambda = std::max(lambda, sigma(a, b));
        const auto q = qualifications(sigma, all, next_level(sigma, all, lambda - discrimination(lambda)));
        std::map<long, std::vector<std::size_t>, std::greater<>> by_score;
        for (std::size_t i = 0; i < n; ++i) by_score[q[i]].push_back(i);
        for (auto& [score, members] : by_score) result.classes.push_back(members);
        result.descending = positions(result.classes, n, false);
        result.ascending = result.descending;
        return result;
    }

    result.descending = positions(distill(sigma, true), n, false);
    result.ascending = positions(distill(sigma, false), n, true);

    // a precedes b when it is at least as good in both preorders and better in one
    auto precedes = [&](std::size_t a, std::size_t b) {
        return result.descending[a] <= result.descending[b] && result.ascending[a] <= result.ascending[b] &&
               (result.descending[a] < result.descending[b] || result.ascending[a] < result.ascending[b]);
    };
    std::vector<bool> placed(n, false);
    std::size_t left = n;
    while (left > 0) {
        std::vector<std::size_t> layer;
        for (std::size_t a = 0; a < n; ++a) {
            if (placed[a]) continue;
            bool dominated = false;
            for (std::size_t b = 0; b < n && !dominated; ++b)
                if (!placed[b] && b != a && precedes(b, a)) dominated = true;
            if (!dominated) layer.push_back(a);
        }
        for (auto a : layer) placed[a] = true;
        left -= layer.size();
        result.classes.push_back(std::move(layer));
    }
    return result;
}

RankResult rank(const DecisionMatrix& matrix, const ThresholdSpec& thresholds, DistillationMode mode) {
    if (matrix.alternative_count() < 2) throw InvalidArgument("ranking needs at least 2 alternatives");
    return rank_from_credibility(build_outranking(matrix, thresholds).credibility, mode);
}

std::string to_string(CriteriaRegime regime) {
    switch (regime) {
        case CriteriaRegime::Objectives: return "objectives";
        case CriteriaRegime::Graph: return "graph";
        case CriteriaRegime::Combined: return "combined";
    }
    return "?";
}

CriteriaRegime regime_from_string(const std::string& name) {
    if (name == "objectives") return CriteriaRegime::Objectives;
    if (name == "graph") return CriteriaRegime::Graph;
    if (name == "combined") return CriteriaRegime::Combined;
    throw InvalidArgument("unknown criteria regime '" + name + "' (objectives|graph|combined)");
}

DecisionMatrix build_decision_matrix(std::span<const ParetoArchive> archives, CriteriaRegime regime,
                                     const Scenario& scenario, const DecisionOptions& options) {
    DecisionMatrix m;
    const bool objectives = regime != CriteriaRegime::Graph;
    const bool graph = regime != CriteriaRegime::Objectives;
    if (objectives) {
        m.criteria.push_back({"F1", Direction::Minimize, 1.0});
        m.criteria.push_back({"F2", Direction::Minimize, 1.0});
    }
    if (graph) {
        m.criteria.push_back({"GE", Direction::Maximize, 1.0});
        m.criteria.push_back({"T", Direction::Maximize, 1.0});
        m.criteria.push_back({"NCPL", options.ncpl_direction, 1.0});
    }
    m.scores.assign(m.criteria.size(), {});

    for (std::size_t i = 0; i < archives.size(); ++i) {
        const auto& archive = archives[i];
        for (std::size_t k = 0; k < archive.solutions.size(); ++k) {
            const auto& s = archive.solutions[k];
            m.alternatives.push_back(archives.size() == 1 ? solution_label(k)
                                                          : to_string(archive.provenance.algorithm) + "-" +
                                                                std::to_string(i) + ":" + solution_label(k));
            std::size_t c = 0;
            if (objectives) {
                m.scores[c++].push_back(s.objectives.f1);
                m.scores[c++].push_back(s.objectives.f2);
            }
            if (graph) {
                const auto g = build_adjacency(decode(s.genome, scenario), scenario, options.gamma, options.convention);
                const auto gm = global_measures(g);
                m.scores[c++].push_back(gm.global_efficiency);
                m.scores[c++].push_back(gm.transitivity);
                m.scores[c++].push_back(gm.char_path_length);
            }
        }
    }
    if (m.alternatives.empty()) throw InvalidArgument("build_decision_matrix: archives hold no solutions");
    m.validate();
    return m;
}

void write_rank_table(std::ostream& out, const RankResult& result, const DecisionMatrix& matrix) {
    out << "rank\tsolutions\n";
    for (std::size_t k = 0; k < result.classes.size(); ++k) {
        out << k + 1 << '\t';
        for (std::size_t i = 0; i < result.classes[k].size(); ++i) {
            if (i) out << ", ";
            out << matrix.alternatives.at(result.classes[k][i]);
        }
        out << '\n';
    }
}

void write_decision_matrix_csv(std::ostream& out, const DecisionMatrix& matrix) {
    out << "alternative";
    for (const auto& c : matrix.criteria) out << ',' << c.name;
    out << '\n';
    for (std::size_t a = 0; a < matrix.alternative_count(); ++a) {
        out << matrix.alternatives[a];
        for (const auto& row : matrix.scores) out << ',' << format_general(row[a]);
        out << '\n';
    }
}

}  // namespace edl
