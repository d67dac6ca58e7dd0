#include "uavplan/bench.hpp"

#include "uavplan/errors.hpp"
#include "uavplan/rng.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

namespace uavplan {

namespace {

constexpr double kOrderingTolM = 1e-6;

std::string format_row(const BenchmarkRow& row) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%s,%.3f,%.3f,%.3f,%.3f,%.3f\n", row.scene.c_str(),
                  row.mode.c_str(), row.length_km, row.knn_m, row.dtw_m, row.seq_m,
                  row.plan_wall_ms);
    return buf;
}

void append_plot(std::string& out, const std::string& scene, const char* mode,
                 const Mission& mission) {
    char buf[160];
    int idx = 0;
    for (const auto& item : mission.items) {
        std::snprintf(buf, sizeof(buf), "%s,%s,%d,%.7f,%.7f\n", scene.c_str(), mode, idx,
                      item.geo.lat, item.geo.lon);
        out += buf;
        ++idx;
    }
}

} // namespace

Mission plan_input_order(const Scene& scene) {
    scene.validate();
    Mission mission;
    mission.mode = PlanMode::TspEuclid; // straight legs; order is the point
    const GeoPoint home = geo_from_pixel(scene.transform, scene.home);
    mission.items.push_back(MissionItem{ItemKind::Takeoff, home, scene.params.altitude_m});
    for (std::size_t k = 0; k < scene.targets.size(); ++k) {
        mission.visit_order.push_back(static_cast<int>(k));
        mission.items.push_back(MissionItem{ItemKind::Waypoint,
                                            geo_from_pixel(scene.transform, scene.targets[k]),
                                            scene.params.altitude_m});
    }
    mission.items.push_back(MissionItem{ItemKind::ReturnToLand, home, 0.0});
    std::vector<GeoPoint> polyline;
    for (const auto& item : mission.items) polyline.push_back(item.geo);
    mission.length_m = polyline_length_m(polyline);
    return mission;
}

Trajectory mission_trajectory(const Mission& m, bool include_pathpoints) {
    Trajectory traj;
    for (const auto& item : m.items) {
        if (!include_pathpoints && item.kind == ItemKind::PathPoint) continue;
        traj.points.push_back(item.geo);
    }
    return traj;
}

BenchmarkOutput run_benchmark(const BenchmarkOptions& options) {
    if (options.n_scenes < 1) throw ValidationError("benchmark needs at least one scene");

    BenchmarkOutput out;
    out.csv = "scene,mode,length_km,knn_m,dtw_m,seq_m,plan_wall_ms\n";
    out.plot_csv = "scene,mode,idx,lat,lon\n";

    const SplitMix64 seeder(options.seed);
    for (int s = 0; s < options.n_scenes; ++s) {
        GenParams gp = options.gen;
        gp.seed = seeder.split(static_cast<std::uint64_t>(s)).next();
        const Scene scene = generate_scene(gp);

        auto timed = [&](const std::function<Mission()>& plan, double& wall_ms) {
            if (!options.timings) {
                wall_ms = 0.0;
                return plan();
            }
            const auto t0 = std::chrono::steady_clock::now();
            Mission m = plan();
            const auto t1 = std::chrono::steady_clock::now();
            wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            return m;
        };

        double wall_tsp = 0.0, wall_seq = 0.0, wall_hyb = 0.0, wall_ref = 0.0;
        const Mission ref = timed([&] { return plan_input_order(scene); }, wall_ref);
        const Mission tsp = timed([&] { return plan_tsp_euclid(scene); }, wall_tsp);
        const Mission seq = timed([&] { return plan_astar_seq(scene).mission; }, wall_seq);
        const Mission hyb = timed([&] { return plan_hybrid(scene).mission; }, wall_hyb);

        const Trajectory ref_traj = mission_trajectory(ref);
        auto row_for = [&](const char* mode, const Mission& m, double wall_ms) {
            BenchmarkRow row;
            row.scene = scene.name;
            row.mode = mode;
            row.length_km = m.length_m / 1000.0;
            const Trajectory traj = mission_trajectory(m);
            row.knn_m = knn_rmse(traj, ref_traj);
            row.dtw_m = dtw_rmse(traj, ref_traj);
            row.seq_m = sequential_rmse(traj, ref_traj, options.sequential_samples);
            row.plan_wall_ms = wall_ms;
            return row;
        };

        out.rows.push_back(row_for("tsp-euclid", tsp, wall_tsp));
        out.rows.push_back(row_for("astar-seq", seq, wall_seq));
        out.rows.push_back(row_for("hybrid", hyb, wall_hyb));
        out.rows.push_back(row_for("reference", ref, wall_ref));
        for (std::size_t k = out.rows.size() - 4; k < out.rows.size(); ++k) {
            out.csv += format_row(out.rows[k]);
        }
        append_plot(out.plot_csv, scene.name, "tsp-euclid", tsp);
        append_plot(out.plot_csv, scene.name, "astar-seq", seq);
        append_plot(out.plot_csv, scene.name, "hybrid", hyb);
        append_plot(out.plot_csv, scene.name, "reference", ref);

        if (hyb.length_m <= seq.length_m + kOrderingTolM) {
            ++out.hybrid_le_astar;
            if (hyb.length_m < seq.length_m - kOrderingTolM) ++out.hybrid_strict;
        } else {
            ++out.ordering_violations;
        }
        if (tsp.length_m <= ref.length_m + kOrderingTolM) {
            ++out.tsp_le_input;
        } else {
            ++out.ordering_violations;
        }
    }

    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "hybrid_le_astar_seq=%d/%d strict=%d\n"
                  "tsp_euclid_le_input_order=%d/%d\n"
                  "ordering_violations=%d\n",
                  out.hybrid_le_astar, options.n_scenes, out.hybrid_strict, out.tsp_le_input,
                  options.n_scenes, out.ordering_violations);
    out.summary = buf;
    return out;
}

} // namespace uavplan
