#pragma once

#include "uavplan/geo.hpp"

#include <string>
#include <vector>

namespace uavplan {

/// Non-empty ordered sequence of geographic points.
struct Trajectory {
    std::vector<GeoPoint> points;
};

/// RMSE over generated points of the distance to the nearest reference
/// point (k=1, directed gen -> ref). Throws ValidationError when either
/// trajectory is empty.
double knn_rmse(const Trajectory& gen, const Trajectory& ref);

/// Dynamic-time-warping RMSE: full DP with squared-haversine local cost
/// and the standard match/insert/delete recurrence, boundary-anchored.
/// Returns sqrt(total optimal cost / warping path length); among
/// minimum-cost alignments the shortest path defines the length, which
/// keeps the metric symmetric.
double dtw_rmse(const Trajectory& gen, const Trajectory& ref);

/// m points at equal arc-length spacing along the polyline, linear
/// interpolation in lat/lon between vertices. Endpoints are preserved
/// exactly; a single-point (or zero-length) input yields m copies.
Trajectory resample_by_arclength(const Trajectory& t, int m);

/// Resamples both trajectories to m points by arc length and takes the
/// RMSE of index-paired distances.
double sequential_rmse(const Trajectory& gen, const Trajectory& ref, int m = 200);

struct SceneMetricsRow {
    std::string scene;
    double knn_m = 0.0;
    double dtw_m = 0.0;
    double seq_m = 0.0;
    double gen_length_km = 0.0;
    double ref_length_km = 0.0;
};

struct Aggregate {
    double mean = 0.0;
    double median = 0.0; // even counts: average of the two middle values
    double max = 0.0;
};

struct MetricsReport {
    std::vector<SceneMetricsRow> per_scene;
    Aggregate knn;
    Aggregate dtw;
    Aggregate seq;
    Aggregate gen_length;
    Aggregate ref_length;
    int sequential_samples = 200; // configuration echoed for reproducibility
};

struct ScenePair {
    std::string scene;
    Trajectory gen;
    Trajectory ref;
};

/// Per-scene rows plus mean/median/max aggregates for the three metrics
/// and both lengths. Throws ValidationError on empty input.
MetricsReport report(std::span<const ScenePair> pairs, int sequential_samples = 200);

} // namespace uavplan
