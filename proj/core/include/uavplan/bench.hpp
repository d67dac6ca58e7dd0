#pragma once

#include "uavplan/scene_io.hpp"

#include <string>
#include <vector>

namespace uavplan {

/// One benchmark CSV row. mode is one of tsp-euclid, astar-seq, hybrid or
/// reference (the straight-leg input-order baseline).
struct BenchmarkRow {
    std::string scene;
    std::string mode;
    double length_km = 0.0;
    double knn_m = 0.0;
    double dtw_m = 0.0;
    double seq_m = 0.0;
    double plan_wall_ms = 0.0;
};

struct BenchmarkOptions {
    int n_scenes = 50;
    std::uint64_t seed = 7;
    GenParams gen;          // per-scene seeds are derived from `seed`
    bool timings = false;   // off by default so the CSV is byte-deterministic
    int sequential_samples = 200;
};

struct BenchmarkOutput {
    std::vector<BenchmarkRow> rows;
    std::string csv;       // header + rows, ordered by (scene, fixed mode order)
    std::string plot_csv;  // scene,mode,idx,lat,lon polylines of every mission
    std::string summary;   // ordering counts, ends with ordering_violations=<k>
    int hybrid_le_astar = 0;
    int hybrid_strict = 0;
    int tsp_le_input = 0;
    int ordering_violations = 0;
};

/// Straight-leg mission in input (detection) order; the benchmark's
/// reference baseline.
Mission plan_input_order(const Scene& scene);

/// Mission geo points at waypoint level (Takeoff, Waypoints, RTL);
/// PathPoints included only on request.
Trajectory mission_trajectory(const Mission& m, bool include_pathpoints = false);

/// Generates the seeded scenes, plans all four modes per scene, computes
/// the alignment metrics against the input-order baseline and checks the
/// two route-length orderings (hybrid <= astar-seq, tsp-euclid <= input
/// order, both with 1e-6 m tolerance).
BenchmarkOutput run_benchmark(const BenchmarkOptions& options);

} // namespace uavplan
