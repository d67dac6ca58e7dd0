#include "uavplan/metrics.hpp"

#include "uavplan/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace uavplan {

namespace {

void require_non_empty(const Trajectory& t, const char* which) {
    if (t.points.empty()) {
        throw ValidationError(std::string(which) + " trajectory is empty");
    }
}

double sq(double v) { return v * v; }

Aggregate aggregate_of(std::vector<double> values) {
    Aggregate agg;
    const std::size_t n = values.size();
    double sum = 0.0;
    for (double v : values) {
        sum += v;
        agg.max = std::max(agg.max, v);
    }
    agg.mean = sum / static_cast<double>(n);
    std::sort(values.begin(), values.end());
    if (n % 2 == 1) {
        agg.median = values[n / 2];
    } else {
        agg.median = 0.5 * (values[n / 2 - 1] + values[n / 2]);
    }
    return agg;
}

} // namespace

double knn_rmse(const Trajectory& gen, const Trajectory& ref) {
    require_non_empty(gen, "generated");
    require_non_empty(ref, "reference");
    double total = 0.0;
    for (const auto& g : gen.points) {
        double nearest_sq = std::numeric_limits<double>::infinity();
        for (const auto& r : ref.points) {
            nearest_sq = std::min(nearest_sq, sq(haversine_m(g, r)));
        }
        total += nearest_sq;
    }
    return std::sqrt(total / static_cast<double>(gen.points.size()));
}

double dtw_rmse(const Trajectory& gen, const Trajectory& ref) {
    require_non_empty(gen, "generated");
    require_non_empty(ref, "reference");
    const std::size_t n = gen.points.size();
    const std::size_t m = ref.points.size();

    // DP over (accumulated cost, path length); lexicographic minimum.
    // Both components grow by the same increment per cell, so per-cell
    // minimization over the three predecessors is exact.
    struct State {
        double cost;
        std::int64_t len;
    };
    const State unset{std::numeric_limits<double>::infinity(), 0};
    std::vector<State> prev(m, unset);
    std::vector<State> curr(m, unset);

    auto better = [](const State& a, const State& b) {
        if (a.cost != b.cost) return a.cost < b.cost;
        return a.len < b.len;
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double local = sq(haversine_m(gen.points[i], ref.points[j]));
            State best = unset;
            if (i == 0 && j == 0) {
                best = State{0.0, 0};
            } else {
                if (i > 0 && better(prev[j], best)) best = prev[j];
                if (j > 0 && better(curr[j - 1], best)) best = curr[j - 1];
                if (i > 0 && j > 0 && better(prev[j - 1], best)) best = prev[j - 1];
            }
            curr[j] = State{best.cost + local, best.len + 1};
        }
        std::swap(prev, curr);
        std::fill(curr.begin(), curr.end(), unset);
    }

    const State& final_state = prev[m - 1];
    return std::sqrt(final_state.cost / static_cast<double>(final_state.len));
}

Trajectory resample_by_arclength(const Trajectory& t, int m) {
    require_non_empty(t, "resample input");
    if (m < 2) throw ValidationError("resample count must be >= 2");

    const auto& pts = t.points;
    std::vector<double> cum(pts.size(), 0.0);
    for (std::size_t k = 1; k < pts.size(); ++k) {
        cum[k] = cum[k - 1] + haversine_m(pts[k - 1], pts[k]);
    }
    const double total = cum.back();

    Trajectory out;
    out.points.reserve(static_cast<std::size_t>(m));
    if (pts.size() == 1 || total <= 0.0) {
        out.points.assign(static_cast<std::size_t>(m), pts.front());
        return out;
    }

    std::size_t seg = 0;
    for (int k = 0; k < m; ++k) {
        if (k == 0) {
            out.points.push_back(pts.front());
            continue;
        }
        if (k == m - 1) {
            out.points.push_back(pts.back());
            continue;
        }
        const double target = total * static_cast<double>(k) / static_cast<double>(m - 1);
        while (seg + 1 < pts.size() - 1 && cum[seg + 1] < target) ++seg;
        const double seg_len = cum[seg + 1] - cum[seg];
        const double frac = seg_len > 0.0 ? (target - cum[seg]) / seg_len : 0.0;
        out.points.push_back(GeoPoint{
            pts[seg].lat + frac * (pts[seg + 1].lat - pts[seg].lat),
            pts[seg].lon + frac * (pts[seg + 1].lon - pts[seg].lon)});
    }
    return out;
}

double sequential_rmse(const Trajectory& gen, const Trajectory& ref, int m) {
    require_non_empty(gen, "generated");
    require_non_empty(ref, "reference");
    const Trajectory a = resample_by_arclength(gen, m);
    const Trajectory b = resample_by_arclength(ref, m);
    double total = 0.0;
    for (int k = 0; k < m; ++k) {
        total += sq(haversine_m(a.points[static_cast<std::size_t>(k)],
                                b.points[static_cast<std::size_t>(k)]));
    }
    return std::sqrt(total / static_cast<double>(m));
}

MetricsReport report(std::span<const ScenePair> pairs, int sequential_samples) {
    if (pairs.empty()) throw ValidationError("metrics report needs at least one scene pair");

    MetricsReport rep;
    rep.sequential_samples = sequential_samples;
    std::vector<double> knn_v, dtw_v, seq_v, gen_v, ref_v;
    for (const auto& p : pairs) {
        SceneMetricsRow row;
        row.scene = p.scene;
        row.knn_m = knn_rmse(p.gen, p.ref);
        row.dtw_m = dtw_rmse(p.gen, p.ref);
        row.seq_m = sequential_rmse(p.gen, p.ref, sequential_samples);
        row.gen_length_km = polyline_length_m(p.gen.points) / 1000.0;
        row.ref_length_km = polyline_length_m(p.ref.points) / 1000.0;
        knn_v.push_back(row.knn_m);
        dtw_v.push_back(row.dtw_m);
        seq_v.push_back(row.seq_m);
        gen_v.push_back(row.gen_length_km);
        ref_v.push_back(row.ref_length_km);
        rep.per_scene.push_back(std::move(row));
    }
    rep.knn = aggregate_of(std::move(knn_v));
    rep.dtw = aggregate_of(std::move(dtw_v));
    rep.seq = aggregate_of(std::move(seq_v));
    rep.gen_length = aggregate_of(std::move(gen_v));
    rep.ref_length = aggregate_of(std::move(ref_v));
    return rep;
}

} // namespace uavplan
