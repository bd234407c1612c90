#include "edlayout/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <ostream>

namespace edl {

LayoutGraph LayoutGraph::from_weights(Matrix weights, LengthConvention convention) {
    const std::size_t n = weights.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (weights(i, i) != 0.0) throw InvalidArgument("layout graph: nonzero diagonal weight");
        for (std::size_t j = 0; j < n; ++j) {
            const double w = weights(i, j);
            if (!std::isfinite(w) || w < 0.0) throw InvalidArgument("layout graph: weights must be finite and >= 0");
            if (w != weights(j, i)) throw InvalidArgument("layout graph: weights must be symmetric");
        }
    }
    LayoutGraph g;
    g.binary = SquareMatrix<int>(n, 0);
    g.lengths = Matrix(n, kInf);
    for (std::size_t i = 0; i < n; ++i) {
        g.lengths(i, i) = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !(weights(i, j) > 0.0)) continue;
            g.binary(i, j) = 1;
            g.lengths(i, j) = convention == LengthConvention::InverseWeight ? 1.0 / weights(i, j) : weights(i, j);
        }
    }
    g.weights = std::move(weights);
    return g;
}

LayoutGraph build_adjacency(const DecodedLayout& layout, const Scenario& scenario, double gamma,
                            LengthConvention convention) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw InvalidArgument("build_adjacency: gamma must lie in [0, 1]");
    if (!layout.feasible()) throw InvalidArgument("build_adjacency: layout is infeasible");
    const std::size_t n = scenario.size();
    Matrix a(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double f = scenario.flows(i, j) + scenario.flows(j, i);
            const double d = rectilinear_distance(layout.centroids[i], layout.centroids[j]);
            const double w = (gamma * f + (1.0 - gamma) * scenario.ratings(i, j)) * d;
            a(i, j) = w;
            a(j, i) = w;
        }
    }
    return LayoutGraph::from_weights(std::move(a), convention);
}

Matrix hop_distances(const LayoutGraph& g) {
    const std::size_t n = g.size();
    Matrix dist(n, kInf);
    for (std::size_t s = 0; s < n; ++s) {
        dist(s, s) = 0.0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (std::size_t v = 0; v < n; ++v) {
                if (g.binary(u, v) && std::isinf(dist(s, v))) {
                    dist(s, v) = dist(s, u) + 1.0;
                    queue.push_back(v);
                }
            }
        }
    }
    return dist;
}

Matrix weighted_distances(const LayoutGraph& g) {
    // dense Dijkstra from every source; n is small
    const std::size_t n = g.size();
    Matrix dist(n, kInf);
    std::vector<bool> done(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(done.begin(), done.end(), false);
        dist(s, s) = 0.0;
        for (std::size_t iter = 0; iter < n; ++iter) {
            std::size_t u = n;
            for (std::size_t v = 0; v < n; ++v)
                if (!done[v] && (u == n || dist(s, v) < dist(s, u))) u = v;
            if (u == n || std::isinf(dist(s, u))) break;
            done[u] = true;
            for (std::size_t v = 0; v < n; ++v) {
                if (!g.binary(u, v) || done[v]) continue;
                const double alt = dist(s, u) + g.lengths(u, v);
                if (alt < dist(s, v)) dist(s, v) = alt;
            }
        }
    }
    return dist;
}

DegreeCentrality degree_and_centrality(const LayoutGraph& g) {
    const std::size_t n = g.size();
    if (n < 2) throw InvalidArgument("degree centrality needs at least 2 nodes");
    DegreeCentrality out;
    out.degree.assign(n, 0);
    out.centrality.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out.degree[i] += g.binary(i, j);
        out.centrality[i] = static_cast<double>(out.degree[i]) / static_cast<double>(n - 1);
    }
    return out;
}

std::vector<double> closeness_centrality(const LayoutGraph& g) {
    const std::size_t n = g.size();
    const auto hops = hop_distances(g);
    std::vector<double> cc(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double total = 0.0;
        bool reachable = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (std::isinf(hops(i, j))) {
                reachable = false;
                break;
            }
            total += hops(i, j);
        }
        cc[i] = (reachable && total > 0.0) ? static_cast<double>(n - 1) / total : 0.0;
    }
    return cc;
}

Betweenness betweenness(const LayoutGraph& g) {
    const std::size_t n = g.size();
    if (n < 3) throw InvalidArgument("betweenness needs at least 3 nodes");
    Betweenness out;
    out.raw.assign(n, 0.0);

    // Brandes accumulation over unweighted shortest paths. Each source s sums
    // dependencies over all targets t, so the total runs over ordered pairs.
    std::vector<double> sigma(n), delta(n);
    std::vector<long> depth(n);
    std::vector<std::vector<std::size_t>> preds(n);
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        std::fill(depth.begin(), depth.end(), -1);
        for (auto& p : preds) p.clear();
        stack.clear();
        sigma[s] = 1.0;
        depth[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            stack.push_back(u);
            for (std::size_t v = 0; v < n; ++v) {
                if (!g.binary(u, v)) continue;
                if (depth[v] < 0) {
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                }
                if (depth[v] == depth[u] + 1) {
                    sigma[v] += sigma[u];
                    preds[v].push_back(u);
                }
            }
        }
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            const auto w = *it;
            for (auto v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) out.raw[w] += delta[w];
        }
    }
    const double norm = static_cast<double>((n - 1) * (n - 2));
    out.normalized.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.normalized[i] = out.raw[i] / norm;
    return out;
}

namespace {

/// Triangles through each node on the binary graph.
std::vector<double> triangles(const LayoutGraph& g) {
    const std::size_t n = g.size();
    std::vector<double> t(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.binary(i, j))
                for (std::size_t k = j + 1; k < n; ++k)
                    if (g.binary(i, k) && g.binary(j, k)) t[i] += 1.0;
    return t;
}

std::vector<int> degrees(const LayoutGraph& g) {
    const std::size_t n = g.size();
    std::vector<int> d(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i] += g.binary(i, j);
    return d;
}

}  // namespace

std::vector<double> clustering(const LayoutGraph& g) {
    const auto t = triangles(g);
    const auto d = degrees(g);
    std::vector<double> c(g.size(), 0.0);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (d[i] >= 2) c[i] = 2.0 * t[i] / (static_cast<double>(d[i]) * (d[i] - 1));
    return c;
}

std::vector<double> eccentricity(const LayoutGraph& g) {
    const auto dist = weighted_distances(g);
    const std::size_t n = g.size();
    std::vector<double> ecc(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ecc[i] = std::max(ecc[i], dist(i, j));
    return ecc;
}

std::vector<double> strength(const LayoutGraph& g) {
    const std::size_t n = g.size();
    std::vector<double> s(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i] += g.weights(i, j);
    return s;
}

double global_efficiency(const LayoutGraph& g) {
    const std::size_t n = g.size();
    if (n < 2) throw InvalidArgument("global efficiency needs at least 2 nodes");
    const auto dist = weighted_distances(g);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && std::isfinite(dist(i, j)) && dist(i, j) > 0.0) row += 1.0 / dist(i, j);
        total += row / static_cast<double>(n - 1);
    }
    return total / static_cast<double>(n);
}

double transitivity(const LayoutGraph& g) {
    const auto t = triangles(g);
    const auto d = degrees(g);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        num += 2.0 * t[i];
        den += static_cast<double>(d[i]) * (d[i] - 1);
    }
    return den > 0.0 ? num / den : 0.0;
}

double char_path_length(const LayoutGraph& g) {
    const std::size_t n = g.size();
    if (n < 2) throw InvalidArgument("characteristic path length needs at least 2 nodes");
    const auto dist = weighted_distances(g);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (std::isinf(dist(i, j))) return kInf;
            row += dist(i, j);
        }
        total += row / static_cast<double>(n - 1);
    }
    return total / static_cast<double>(n);
}

LocalMeasures local_measures(const LayoutGraph& g) {
    LocalMeasures m;
    auto dc = degree_and_centrality(g);
    m.degree = std::move(dc.degree);
    m.degree_centrality = std::move(dc.centrality);
    m.closeness = closeness_centrality(g);
    m.betweenness = g.size() >= 3 ? betweenness(g).normalized : std::vector<double>(g.size(), 0.0);
    m.clustering = clustering(g);
    m.eccentricity = eccentricity(g);
    m.strength = strength(g);
    return m;
}

GlobalMeasures global_measures(const LayoutGraph& g) {
    return {global_efficiency(g), transitivity(g), char_path_length(g)};
}

std::string strategy_name(std::size_t index) {
    static const char* names[] = {"S(I)", "S(II)", "S(III)", "S(IV)", "S(V)"};
    return index < 5 ? names[index] : "S(" + std::to_string(index + 1) + ")";
}

StrategyReport summarize_strategies(std::span<const StrategyAverages> rows, std::span<const std::string> skipped) {
    if (rows.empty()) throw InvalidArgument("summarize_strategies: no strategies");
    auto is_skipped = [&](const char* name) { return std::find(skipped.begin(), skipped.end(), name) != skipped.end(); };
    StrategyReport report;
    report.skipped_measures.assign(skipped.begin(), skipped.end());
    for (const auto& avg : rows) {
        std::vector<double> values;
        if (!is_skipped("GE")) values.push_back(avg.ge);
        if (!is_skipped("NCPL")) values.push_back(avg.ncpl);
        if (!is_skipped("T")) values.push_back(avg.t);
        StrategyRow row{avg, std::nan(""), std::nan(""), std::nan("")};
        if (!values.empty()) {
            row.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
            double ss = 0.0;
            for (double v : values) ss += (v - row.mean) * (v - row.mean);
            row.std = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
            row.cv = row.mean != 0.0 ? row.std / row.mean : kInf;
        }
        report.rows.push_back(row);
    }
    report.selected = 0;
    for (std::size_t k = 1; k < report.rows.size(); ++k)
        if (report.rows[k].cv < report.rows[report.selected].cv) report.selected = k;
    return report;
}

StrategyReport select_strategy(std::span<const ParetoArchive> archives, const Scenario& scenario,
                               LengthConvention convention) {
    std::vector<DecodedLayout> layouts;
    for (const auto& archive : archives)
        for (const auto& s : archive.solutions) layouts.push_back(decode(s.genome, scenario));
    if (layouts.empty()) throw InvalidArgument("select_strategy: archives hold no solutions");

    const std::size_t strategies = kStrategyGammas.size();
    // values[measure][strategy][solution]
    std::array<std::vector<std::vector<double>>, 3> values;
    for (auto& v : values) v.assign(strategies, std::vector<double>(layouts.size()));
    for (std::size_t s = 0; s < strategies; ++s) {
        for (std::size_t k = 0; k < layouts.size(); ++k) {
            const auto g = build_adjacency(layouts[k], scenario, kStrategyGammas[s], convention);
            const auto m = global_measures(g);
            values[0][s][k] = m.global_efficiency;
            values[1][s][k] = m.char_path_length;
            values[2][s][k] = m.transitivity;
        }
    }

    const char* names[3] = {"GE", "NCPL", "T"};
    std::vector<std::string> skipped;
    std::array<std::vector<double>, 3> averages;
    for (int m = 0; m < 3; ++m) {
        double lo = kInf, hi = -kInf;
        bool finite = true;
        for (const auto& per_strategy : values[m]) {
            for (double v : per_strategy) {
                if (!std::isfinite(v)) finite = false;
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
        averages[m].assign(strategies, 0.0);
        if (!finite || !(hi > lo)) {
            skipped.emplace_back(names[m]);
            continue;
        }
        for (std::size_t s = 0; s < strategies; ++s) {
            double sum = 0.0;
            for (double v : values[m][s]) sum += (v - lo) / (hi - lo);
            averages[m][s] = sum / static_cast<double>(layouts.size());
        }
    }

    std::vector<StrategyAverages> rows;
    for (std::size_t s = 0; s < strategies; ++s)
        rows.push_back({kStrategyGammas[s], averages[0][s], averages[1][s], averages[2][s]});
    return summarize_strategies(rows, skipped);
}

nlohmann::json strategy_report_to_json(const StrategyReport& report) {
    auto num = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(format_general(v)); };
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t k = 0; k < report.rows.size(); ++k) {
        const auto& r = report.rows[k];
        rows.push_back({{"strategy", strategy_name(k)},
                        {"gamma", r.averages.gamma},
                        {"GE", num(r.averages.ge)},
                        {"NCPL", num(r.averages.ncpl)},
                        {"Transitivity", num(r.averages.t)},
                        {"Mean", num(r.mean)},
                        {"Std", num(r.std)},
                        {"CV", num(r.cv)}});
    }
    return {{"rows", std::move(rows)},
            {"selected", strategy_name(report.selected)},
            {"selected_gamma", report.selected_gamma()},
            {"skipped_measures", report.skipped_measures}};
}

double histogram_distance(std::span<const double> x, std::span<const double> y, std::size_t bins) {
    if (x.empty() || y.empty()) throw InvalidArgument("histogram_distance: empty sample");
    if (bins == 0) throw InvalidArgument("histogram_distance: need at least one bin");
    double lo = kInf, hi = -kInf;
    for (double v : x) lo = std::min(lo, v), hi = std::max(hi, v);
    for (double v : y) lo = std::min(lo, v), hi = std::max(hi, v);
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw InvalidArgument("histogram_distance: non-finite sample");

    auto histogram = [&](std::span<const double> s) {
        std::vector<double> h(bins, 0.0);
        for (double v : s) {
            std::size_t b = 0;
            if (hi > lo) b = std::min(bins - 1, static_cast<std::size_t>((v - lo) / (hi - lo) * static_cast<double>(bins)));
            h[b] += 1.0;
        }
        for (auto& c : h) c /= static_cast<double>(s.size());
        return h;
    };
    const auto hx = histogram(x), hy = histogram(y);
    double shared = 0.0;
    for (std::size_t b = 0; b < bins; ++b) shared += std::min(hx[b], hy[b]);
    return std::clamp(1.0 - shared, 0.0, 1.0);
}

void write_local_measures_header(std::ostream& out) {
    out << "solution,node,degree,degree_centrality,closeness,betweenness,clustering,eccentricity,strength\n";
}

void write_local_measures_rows(std::ostream& out, const std::string& solution, const LocalMeasures& m) {
    for (std::size_t i = 0; i < m.degree.size(); ++i) {
        out << solution << ',' << i << ',' << m.degree[i] << ',' << format_general(m.degree_centrality[i]) << ','
            << format_general(m.closeness[i]) << ',' << format_general(m.betweenness[i]) << ','
            << format_general(m.clustering[i]) << ',' << format_general(m.eccentricity[i]) << ','
            << format_general(m.strength[i]) << '\n';
    }
}

void write_global_measures_header(std::ostream& out) {
    out << "solution,gamma,global_efficiency,transitivity,char_path_length\n";
}

void write_global_measures_row(std::ostream& out, const std::string& solution, double gamma, const GlobalMeasures& m) {
    out << solution << ',' << format_general(gamma) << ',' << format_general(m.global_efficiency) << ','
        << format_general(m.transitivity) << ',' << format_general(m.char_path_length) << '\n';
}

}  // namespace edl
