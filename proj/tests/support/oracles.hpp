#pragma once

// Brute-force reference implementations. Deliberately naive and independent
// of the library algorithms they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "edlayout/graph.hpp"
#include "edlayout/moo.hpp"

namespace oracle {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Everything derivable from the full set of simple paths between each pair.
struct PathFacts {
    std::size_t n = 0;
    std::vector<std::vector<double>> hops;      // minimum edge count
    std::vector<std::vector<double>> length;    // minimum summed length
    std::vector<std::vector<double>> count;     // number of minimum-hop paths
    // through[s][t][v]: minimum-hop s-t paths with v as an interior node
    std::vector<std::vector<std::vector<double>>> through;
};

inline PathFacts enumerate_paths(const edl::LayoutGraph& g) {
    const std::size_t n = g.size();
    PathFacts f;
    f.n = n;
    f.hops.assign(n, std::vector<double>(n, kInf));
    f.length.assign(n, std::vector<double>(n, kInf));
    f.count.assign(n, std::vector<double>(n, 0.0));
    f.through.assign(n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));

    std::vector<std::size_t> path;
    std::vector<bool> on(n, false);
    // records every simple path ending at path.back()
    auto visit = [&](auto&& self, double len) -> void {
        const std::size_t s = path.front(), t = path.back();
        const double h = static_cast<double>(path.size() - 1);
        f.length[s][t] = std::min(f.length[s][t], len);
        if (h < f.hops[s][t]) {
            f.hops[s][t] = h;
            f.count[s][t] = 0.0;
            std::fill(f.through[s][t].begin(), f.through[s][t].end(), 0.0);
        }
        if (h == f.hops[s][t]) {
            f.count[s][t] += 1.0;
            for (std::size_t k = 1; k + 1 < path.size(); ++k) f.through[s][t][path[k]] += 1.0;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (on[v] || !g.binary(t, v)) continue;
            on[v] = true;
            path.push_back(v);
            self(self, len + g.lengths(t, v));
            path.pop_back();
            on[v] = false;
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        path = {s};
        on.assign(n, false);
        on[s] = true;
        visit(visit, 0.0);
    }
    return f;
}

struct GraphReference {
    std::vector<double> degree, degree_centrality, closeness, betweenness, clustering, eccentricity, strength;
    double global_efficiency = 0.0;
    double transitivity = 0.0;
    double char_path_length = 0.0;
};

inline GraphReference graph_reference(const edl::LayoutGraph& g) {
    const std::size_t n = g.size();
    const auto f = enumerate_paths(g);
    const double nm1 = static_cast<double>(n - 1);
    GraphReference r;
    r.degree.assign(n, 0.0);
    r.strength.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (g.binary(i, j)) r.degree[i] += 1.0;
            r.strength[i] += g.weights(i, j);
        }
    for (std::size_t i = 0; i < n; ++i) {
        r.degree_centrality.push_back(r.degree[i] / nm1);

        double hop_sum = 0.0;
        bool reach_all = true;
        double ecc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (std::isinf(f.hops[i][j])) reach_all = false;
            hop_sum += f.hops[i][j];
            ecc = std::max(ecc, f.length[i][j]);
        }
        r.closeness.push_back(reach_all && hop_sum > 0.0 ? nm1 / hop_sum : 0.0);
        r.eccentricity.push_back(ecc);

        double bc = 0.0;
        if (n >= 3) {
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t t = 0; t < n; ++t)
                    if (s != t && s != i && t != i && f.count[s][t] > 0.0) bc += f.through[s][t][i] / f.count[s][t];
            bc /= (nm1 * (nm1 - 1.0));
        }
        r.betweenness.push_back(bc);
    }

    // triangles and connected triples by listing vertex triples
    std::vector<double> tri(n, 0.0);
    double closed = 0.0, triples = 0.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                if (g.binary(a, b) && g.binary(b, c) && g.binary(a, c)) {
                    tri[a] += 1.0, tri[b] += 1.0, tri[c] += 1.0;
                    closed += 3.0;
                }
    for (std::size_t centre = 0; centre < n; ++centre)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (a != centre && b != centre && g.binary(centre, a) && g.binary(centre, b)) triples += 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = r.degree[i];
        r.clustering.push_back(d >= 2.0 ? tri[i] / (d * (d - 1.0) / 2.0) : 0.0);
    }
    r.transitivity = triples > 0.0 ? closed / triples : 0.0;

    double ge = 0.0, cpl = 0.0;
    bool connected = true;
    for (std::size_t i = 0; i < n; ++i) {
        double e = 0.0, l = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (std::isinf(f.length[i][j])) {
                connected = false;
                continue;
            }
            e += 1.0 / f.length[i][j];
            l += f.length[i][j];
        }
        ge += e / nm1;
        cpl += l / nm1;
    }
    r.global_efficiency = ge / static_cast<double>(n);
    r.char_path_length = connected ? cpl / static_cast<double>(n) : kInf;
    return r;
}

/// Indices of points no other point dominates, in input order.
inline std::vector<std::size_t> pareto_indices(const std::vector<edl::ObjectiveVector>& pts) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
            const auto& a = pts[j];
            const auto& b = pts[i];
            dominated = a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
        }
        if (!dominated) out.push_back(i);
    }
    return out;
}

/// Area of the union of boxes [p, ref] by inclusion-exclusion over subsets.
inline double union_of_boxes(const std::vector<edl::ObjectiveVector>& pts, edl::ObjectiveVector ref) {
    std::vector<edl::ObjectiveVector> in;
    for (const auto& p : pts)
        if (p.f1 < ref.f1 && p.f2 < ref.f2) in.push_back(p);
    const std::size_t m = in.size();
    double total = 0.0;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        double lo1 = -kInf, lo2 = -kInf;
        int bits = 0;
        for (std::size_t k = 0; k < m; ++k)
            if (mask & (1u << k)) {
                lo1 = std::max(lo1, in[k].f1);
                lo2 = std::max(lo2, in[k].f2);
                ++bits;
            }
        const double vol = (ref.f1 - lo1) * (ref.f2 - lo2);
        total += (bits % 2 == 1 ? vol : -vol);
    }
    return total;
}

/// Two-sided Wilcoxon p by listing every sign pattern of the nonzero
/// differences: 2 * share of patterns with W+ <= min(W+, W-) observed.
inline double wilcoxon_enumerated_p(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> d;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) d.push_back(x[i] - y[i]);
    const std::size_t n = d.size();
    std::vector<double> rank(n);
    for (std::size_t i = 0; i < n; ++i) {
        double less = 0.0, equal = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(d[j]) < std::abs(d[i])) less += 1.0;
            else if (std::abs(d[j]) == std::abs(d[i])) equal += 1.0;
        }
        rank[i] = less + (equal + 1.0) / 2.0;
    }
    double wp = 0.0, wm = 0.0;
    for (std::size_t i = 0; i < n; ++i) (d[i] > 0 ? wp : wm) += rank[i];
    const double observed = std::min(wp, wm);
    std::uint64_t hits = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) s += rank[i];
        if (s <= observed + 1e-9) ++hits;
    }
    return std::min(1.0, 2.0 * static_cast<double>(hits) / static_cast<double>(std::uint64_t{1} << n));
}

/// Two-sided binomial tail from Pascal's triangle in exact integers (n <= 62).
inline double binomial_two_sided(std::size_t wins, std::size_t losses) {
    const std::size_t n = wins + losses;
    std::vector<std::uint64_t> row{1};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::uint64_t> next(k + 1, 1);
        for (std::size_t j = 1; j < k; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    std::uint64_t tail = 0;
    for (std::size_t j = 0; j <= std::min(wins, losses); ++j) tail += row[j];
    return std::min(1.0, 2.0 * static_cast<double>(tail) / std::ldexp(1.0, static_cast<int>(n)));
}

}  // namespace oracle
