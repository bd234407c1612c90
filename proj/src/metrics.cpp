#include "edlayout/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace edl {

FrontSet front_of(const ParetoArchive& archive) {
    FrontSet out;
    out.reserve(archive.solutions.size());
    for (const auto& s : archive.solutions) out.push_back(s.objectives);
    return out;
}

double hypervolume(std::span<const ObjectiveVector> front, ObjectiveVector ref) {
    std::vector<ObjectiveVector> pts;
    for (const auto& p : front) {
        if (!std::isfinite(p.f1) || !std::isfinite(p.f2)) throw InvalidArgument("hypervolume: non-finite point");
        if (p.f1 < ref.f1 && p.f2 < ref.f2) pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return a.f1 != b.f1 ? a.f1 < b.f1 : a.f2 < b.f2;
    });
    double hv = 0.0;
    double best_f2 = ref.f2;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].f2 >= best_f2) continue;  // dominated by an earlier point
        best_f2 = pts[i].f2;
        // width runs to the next point that improves f2, or to the reference
        double next_f1 = ref.f1;
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[j].f2 < best_f2) {
                next_f1 = pts[j].f1;
                break;
            }
        }
        hv += (next_f1 - pts[i].f1) * (ref.f2 - best_f2);
    }
    return hv;
}

ObjectiveVector default_reference(std::span<const FrontSet> fronts, double scale) {
    ObjectiveVector ref{-kInf, -kInf};
    for (const auto& f : fronts)
        for (const auto& p : f) ref.f1 = std::max(ref.f1, p.f1), ref.f2 = std::max(ref.f2, p.f2);
    if (!std::isfinite(ref.f1)) throw InvalidArgument("default_reference: no points");
    return {ref.f1 * scale, ref.f2 * scale};
}

double average_fitness(std::span<const ObjectiveVector> front) {
    if (front.empty()) throw InvalidArgument("average_fitness: empty front");
    double s = 0.0;
    for (const auto& p : front) s += (p.f1 + p.f2) / 2.0;
    return s / static_cast<double>(front.size());
}

double set_coverage(std::span<const ObjectiveVector> m1, std::span<const ObjectiveVector> m2) {
    if (m2.empty()) throw InvalidArgument("set_coverage: second set is empty");
    std::size_t covered = 0;
    for (const auto& b : m2)
        if (std::any_of(m1.begin(), m1.end(), [&](const auto& a) { return dominates(a, b); })) ++covered;
    return 100.0 * static_cast<double>(covered) / static_cast<double>(m2.size());
}

std::string to_string(TestMethod method) {
    return method == TestMethod::Exact ? "exact" : "normal-approximation";
}

namespace {

void check_paired(std::span<const double> x, std::span<const double> y, const char* what) {
    if (x.size() != y.size()) throw InvalidArgument(std::string(what) + ": samples differ in length");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!std::isfinite(x[i]) || !std::isfinite(y[i])) throw InvalidArgument(std::string(what) + ": non-finite value");
}

constexpr std::size_t kExactLimit = 12;

}  // namespace

TestResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y) {
    check_paired(x, y, "wilcoxon_signed_rank");
    std::vector<double> diffs;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) diffs.push_back(x[i] - y[i]);
    const std::size_t n = diffs.size();
    if (n == 0) throw InvalidArgument("wilcoxon_signed_rank: all differences are zero");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return std::abs(diffs[a]) < std::abs(diffs[b]); });

    // midranks; tie_term accumulates sum(t^3 - t) over tie groups
    std::vector<double> ranks(n);
    double tie_term = 0.0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && std::abs(diffs[order[j + 1]]) == std::abs(diffs[order[i]])) ++j;
        const double mid = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }

    TestResult r;
    r.n = n;
    for (std::size_t i = 0; i < n; ++i) (diffs[i] > 0 ? r.w_plus : r.w_minus) += ranks[i];
    r.statistic = r.w_plus - r.w_minus;

    if (n <= kExactLimit) {
        r.method = TestMethod::Exact;
        // midranks are multiples of 1/2, so doubled ranks are integers
        std::vector<long> doubled(n);
        long total = 0;
        for (std::size_t i = 0; i < n; ++i) total += doubled[i] = std::lround(2.0 * ranks[i]);
        std::vector<double> count(static_cast<std::size_t>(total) + 1, 0.0);
        count[0] = 1.0;
        for (long d : doubled)
            for (long s = total; s >= d; --s) count[static_cast<std::size_t>(s)] += count[static_cast<std::size_t>(s - d)];
        const long observed = std::lround(2.0 * std::min(r.w_plus, r.w_minus));
        double tail = 0.0;
        for (long s = 0; s <= observed; ++s) tail += count[static_cast<std::size_t>(s)];
        r.p_value = std::min(1.0, 2.0 * tail / std::ldexp(1.0, static_cast<int>(n)));
    } else {
        r.method = TestMethod::NormalApproximation;
        const double nd = static_cast<double>(n);
        const double mean = nd * (nd + 1.0) / 4.0;
        const double var = nd * (nd + 1.0) * (2.0 * nd + 1.0) / 24.0 - tie_term / 48.0;
        if (var <= 0.0) {
            r.p_value = 1.0;
        } else {
            const double dev = std::max(0.0, std::abs(r.w_plus - mean) - 0.5);
            r.p_value = std::min(1.0, std::erfc(dev / std::sqrt(var) / std::sqrt(2.0)));
        }
    }
    return r;
}

double sign_test_p(std::size_t wins, std::size_t losses) {
    const std::size_t n = wins + losses;
    if (n == 0) throw InvalidArgument("sign test: all pairs tied");
    const std::size_t k = std::min(wins, losses);
    double tail = 0.0;
    if (n <= 1000) {
        // binomial coefficients stay exact integers in double well past n = 50
        double coef = 1.0;
        for (std::size_t i = 0; i <= k; ++i) {
            tail += coef;
            coef = coef * static_cast<double>(n - i) / static_cast<double>(i + 1);
        }
        tail = std::ldexp(tail, -static_cast<int>(n));
    } else {
        for (std::size_t i = 0; i <= k; ++i) {
            const double log_term = std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(i) + 1.0) -
                                    std::lgamma(static_cast<double>(n - i) + 1.0) - static_cast<double>(n) * std::log(2.0);
            tail += std::exp(log_term);
        }
    }
    return std::min(1.0, 2.0 * tail);
}

TestResult sign_test(std::span<const double> x, std::span<const double> y) {
    check_paired(x, y, "sign_test");
    const auto c = win_counts(x, y);
    TestResult r;
    r.n = c.wins + c.losses;
    r.method = TestMethod::Exact;
    r.w_plus = static_cast<double>(c.wins);
    r.w_minus = static_cast<double>(c.losses);
    r.statistic = r.w_plus - r.w_minus;
    r.p_value = sign_test_p(c.wins, c.losses);
    return r;
}

SpreadStats spread_stats(std::span<const double> values) {
    if (values.size() < 2) throw InvalidArgument("spread_stats: need at least 2 values");
    SpreadStats s;
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
    s.cv = s.mean != 0.0 ? s.std / s.mean : kInf;
    return s;
}

std::pair<NormalizedObjectiveStats, NormalizedObjectiveStats> normalized_objective_stats(
    std::span<const ObjectiveVector> a, std::span<const ObjectiveVector> b) {
    if (a.empty() || b.empty()) throw InvalidArgument("normalized_objective_stats: empty set");
    double lo1 = kInf, hi1 = -kInf, lo2 = kInf, hi2 = -kInf;
    for (auto set : {a, b}) {
        for (const auto& p : set) {
            lo1 = std::min(lo1, p.f1), hi1 = std::max(hi1, p.f1);
            lo2 = std::min(lo2, p.f2), hi2 = std::max(hi2, p.f2);
        }
    }
    if (!(hi1 > lo1) || !(hi2 > lo2)) throw InvalidArgument("normalized_objective_stats: zero objective range");
    auto summarize = [&](std::span<const ObjectiveVector> set) {
        NormalizedObjectiveStats out;
        for (const auto& p : set) {
            out.mean_f1 += (p.f1 - lo1) / (hi1 - lo1);
            out.mean_f2 += (p.f2 - lo2) / (hi2 - lo2);
        }
        out.mean_f1 /= static_cast<double>(set.size());
        out.mean_f2 /= static_cast<double>(set.size());
        const double means[2] = {out.mean_f1, out.mean_f2};
        out.stats = spread_stats(means);
        return out;
    };
    return {summarize(a), summarize(b)};
}

WinCounts win_counts(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw InvalidArgument("win_counts: samples differ in length");
    WinCounts c;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > y[i]) ++c.wins;
        else if (x[i] < y[i]) ++c.losses;
        else ++c.equals;
    }
    return c;
}

}  // namespace edl
