#include "qmst/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qmst {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double squared_distance(const ObjectivePair& a, const ObjectivePair& b) {
    const double dx = a.f1 - b.f1;
    const double dy = a.f2 - b.f2;
    return dx * dx + dy * dy;
}

double distance(const ObjectivePair& a, const ObjectivePair& b) {
    return std::sqrt(squared_distance(a, b));
}

double nearest_squared(const ObjectivePair& p, const std::vector<ObjectivePair>& pool) {
    double best = kInf;
    for (const ObjectivePair& q : pool) best = std::min(best, squared_distance(p, q));
    return best;
}

}  // namespace

Front Front::nondominated(std::vector<ObjectivePair> points) {
    std::sort(points.begin(), points.end());
    Front front;
    double best_f2 = kInf;
    for (const ObjectivePair& p : points) {
        if (!front.points_.empty() && p.f1 == front.points_.back().f1) continue;
        if (p.f2 < best_f2) {
            front.points_.push_back(p);
            best_f2 = p.f2;
        }
    }
    return front;
}

Front build_reference_front(const std::vector<Front>& fronts) {
    std::vector<ObjectivePair> all;
    for (const Front& f : fronts) {
        all.insert(all.end(), f.points().begin(), f.points().end());
    }
    return Front::nondominated(std::move(all));
}

Front normalize(const Front& front, const Front& ref) {
    double min1 = kInf, max1 = -kInf, min2 = kInf, max2 = -kInf;
    for (const ObjectivePair& p : ref.points()) {
        min1 = std::min(min1, p.f1);
        max1 = std::max(max1, p.f1);
        min2 = std::min(min2, p.f2);
        max2 = std::max(max2, p.f2);
    }
    const double range1 = max1 - min1;
    const double range2 = max2 - min2;
    std::vector<ObjectivePair> mapped;
    mapped.reserve(front.size());
    for (const ObjectivePair& p : front.points()) {
        mapped.push_back({range1 > 0.0 ? (p.f1 - min1) / range1 : 0.0,
                          range2 > 0.0 ? (p.f2 - min2) / range2 : 0.0});
    }
    return Front::nondominated(std::move(mapped));
}

double hypervolume(const Front& front) {
    double area = 0.0;
    double prev_f2 = 1.0;  // sweep down from the reference point
    for (const ObjectivePair& p : front.points()) {
        if (p.f1 >= 1.0 || p.f2 >= prev_f2) continue;
        area += (1.0 - p.f1) * (prev_f2 - p.f2);
        prev_f2 = p.f2;
    }
    return area;
}

double gd(const std::vector<ObjectivePair>& front, const std::vector<ObjectivePair>& ref) {
    if (front.empty() || ref.empty()) return 0.0;
    double sum = 0.0;
    for (const ObjectivePair& p : front) sum += nearest_squared(p, ref);
    return std::sqrt(sum) / static_cast<double>(front.size());
}

double igd(const std::vector<ObjectivePair>& front, const std::vector<ObjectivePair>& ref) {
    if (front.empty() || ref.empty()) return 0.0;
    double sum = 0.0;
    for (const ObjectivePair& p : ref) sum += nearest_squared(p, front);
    return std::sqrt(sum) / static_cast<double>(ref.size());
}

double gd(const Front& front, const Front& ref) { return gd(front.points(), ref.points()); }

double igd(const Front& front, const Front& ref) { return igd(front.points(), ref.points()); }

double spread(const Front& front, const Front& ref) {
    if (front.empty() || ref.empty()) return 0.0;
    const std::vector<ObjectivePair>& fp = front.points();
    const std::vector<ObjectivePair>& rp = ref.points();
    const double d_first = distance(fp.front(), rp.front());
    const double d_last = distance(fp.back(), rp.back());
    const std::size_t n = fp.size();
    if (n < 2) {
        return d_first + d_last > 0.0 ? 1.0 : 0.0;
    }
    double gap_sum = 0.0;
    std::vector<double> gaps(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        gaps[i] = distance(fp[i], fp[i + 1]);
        gap_sum += gaps[i];
    }
    const double mean_gap = gap_sum / static_cast<double>(n - 1);
    double deviation = 0.0;
    for (double g : gaps) deviation += std::fabs(g - mean_gap);
    const double denom = d_first + d_last + static_cast<double>(n - 1) * mean_gap;
    if (denom <= 0.0) return 0.0;
    return (d_first + d_last + deviation) / denom;
}

double epsilon_additive(const std::vector<ObjectivePair>& front,
                        const std::vector<ObjectivePair>& ref) {
    if (front.empty() || ref.empty()) return 0.0;
    double worst = -kInf;
    for (const ObjectivePair& r : ref) {
        double best = kInf;
        for (const ObjectivePair& f : front) {
            best = std::min(best, std::max(f.f1 - r.f1, f.f2 - r.f2));
        }
        worst = std::max(worst, best);
    }
    return worst;
}

double epsilon_additive(const Front& front, const Front& ref) {
    return epsilon_additive(front.points(), ref.points());
}

IndicatorValues compute_indicators(const Front& run, const Front& reference) {
    const Front fn = normalize(run, reference);
    const Front rn = normalize(reference, reference);
    IndicatorValues out;
    out.hv = hypervolume(fn);
    out.sp = spread(fn, rn);
    out.gd = gd(fn, rn);
    out.igd = igd(fn, rn);
    out.eps = epsilon_additive(fn, rn);
    return out;
}

RunStats summarize_runs(std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("summarize_runs: empty input");
    }
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double variance = 0.0;
    for (double v : values) variance += (v - mean) * (v - mean);
    variance /= n;

    std::sort(values.begin(), values.end());
    auto quantile = [&](double p) {
        const double pos = p * (n - 1.0);
        const std::size_t i = static_cast<std::size_t>(pos);
        const double frac = pos - static_cast<double>(i);
        if (i + 1 >= values.size()) return values.back();
        return values[i] * (1.0 - frac) + values[i + 1] * frac;
    };
    return {mean, std::sqrt(variance), quantile(0.5), quantile(0.75) - quantile(0.25)};
}

}  // namespace qmst
