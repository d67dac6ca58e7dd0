// uavplan - mission planning CLI: plan, evaluate, benchmark, generate.

#include "uavplan/bench.hpp"
#include "uavplan/errors.hpp"
#include "uavplan/scene_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw uavplan::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Write-to-temp plus rename, so failures never leave partial output.
void write_file_atomic(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw uavplan::Error("cannot write file: " + tmp.string());
        out << content;
        if (!out) throw uavplan::Error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

void add_gen_options(CLI::App* cmd, uavplan::GenParams& gen) {
    cmd->add_option("--width", gen.width_px, "Scene width in pixels");
    cmd->add_option("--height", gen.height_px, "Scene height in pixels");
    cmd->add_option("--targets", gen.n_targets, "Number of targets");
    cmd->add_option("--obstacles", gen.n_obstacles, "Number of obstacles");
    cmd->add_option("--cell", gen.cell_size_px, "Grid cell size in pixels");
    cmd->add_option("--disc-fraction", gen.disc_fraction, "Fraction of disc obstacles");
    cmd->add_option("--min-obstacle", gen.min_obstacle_px, "Minimum obstacle diameter (px)");
    cmd->add_option("--max-obstacle", gen.max_obstacle_px, "Maximum obstacle diameter (px)");
    cmd->add_option("--clearance", gen.min_clearance_px,
                    "Minimum home/target clearance from obstacles (px)");
}

int run_plan(const std::string& scene_path, const std::string& mode, const std::string& out_path,
             bool snap, int margin) {
    uavplan::Scene scene;
    try {
        scene = uavplan::load_scene(read_file(scene_path));
    } catch (const uavplan::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (snap) scene.params.snap_endpoints = true;
    if (margin >= 0) scene.params.margin_cells = margin;

    try {
        uavplan::Mission mission;
        if (mode == "tsp-euclid") {
            mission = uavplan::plan_tsp_euclid(scene);
        } else if (mode == "astar-seq") {
            mission = uavplan::plan_astar_seq(scene).mission;
        } else if (mode == "hybrid") {
            mission = uavplan::plan_hybrid(scene).mission;
        } else {
            std::cerr << "error: unknown mode '" << mode
                      << "' (expected tsp-euclid, astar-seq or hybrid)\n";
            return 1;
        }
        write_file_atomic(out_path, uavplan::save_mission(mission));
        std::printf("length_km=%.3f\n", mission.length_m / 1000.0);
        return 0;
    } catch (const uavplan::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const uavplan::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

uavplan::Trajectory load_trajectory(const std::string& path, bool include_pathpoints) {
    const std::string text = read_file(path);
    if (uavplan::looks_like_plan(text)) {
        const uavplan::PlanFile plan = uavplan::load_plan(text);
        uavplan::Trajectory traj;
        for (const auto& item : plan.items) {
            if (!include_pathpoints && item.kind == uavplan::ItemKind::PathPoint) continue;
            traj.points.push_back(item.geo);
        }
        if (traj.points.empty()) throw uavplan::ParseError(path + ": no usable points");
        return traj;
    }
    return uavplan::load_reference(text);
}

uavplan::Trajectory load_full_trajectory(const std::string& path) {
    return uavplan::load_reference(read_file(path));
}

int run_evaluate(const std::string& gen_path, const std::string& ref_path, int samples,
                 bool include_pathpoints) {
    try {
        const uavplan::Trajectory gen = load_trajectory(gen_path, include_pathpoints);
        const uavplan::Trajectory ref = load_trajectory(ref_path, include_pathpoints);
        // Lengths are geometry: always over every point in the file.
        const double gen_km = uavplan::polyline_length_m(load_full_trajectory(gen_path).points) / 1000.0;
        const double ref_km = uavplan::polyline_length_m(load_full_trajectory(ref_path).points) / 1000.0;
        std::printf("%.3f,%.3f,%.3f,%.3f,%.3f\n", uavplan::knn_rmse(gen, ref),
                    uavplan::dtw_rmse(gen, ref), uavplan::sequential_rmse(gen, ref, samples),
                    gen_km, ref_km);
        return 0;
    } catch (const uavplan::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_benchmark_cmd(const uavplan::BenchmarkOptions& options, const std::string& out_path,
                      const std::string& plot_path) {
    try {
        const uavplan::BenchmarkOutput result = uavplan::run_benchmark(options);
        write_file_atomic(out_path, result.csv);
        if (!plot_path.empty()) write_file_atomic(plot_path, result.plot_csv);
        std::cout << result.summary;
        if (result.ordering_violations != 0) {
            std::cerr << "error: route-length orderings violated on " << result.ordering_violations
                      << " scene(s)\n";
            return 1;
        }
        return 0;
    } catch (const uavplan::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_generate(const uavplan::GenParams& gen, const std::string& out_path) {
    try {
        const uavplan::Scene scene = uavplan::generate_scene(gen);
        write_file_atomic(out_path, uavplan::save_scene(scene));
        return 0;
    } catch (const uavplan::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"UAV mission planning toolkit"};
    app.require_subcommand(1);

    // plan
    std::string scene_path, mode = "hybrid", plan_out;
    bool snap = false;
    int margin = -1;
    CLI::App* plan = app.add_subcommand("plan", "Plan a mission for a scene file");
    plan->add_option("--scene", scene_path, "Scene document (JSON)")->required();
    plan->add_option("--mode", mode, "tsp-euclid | astar-seq | hybrid");
    plan->add_option("--out", plan_out, "Output plan file")->required();
    plan->add_flag("--snap", snap, "Snap blocked endpoint cells to the nearest traversable cell");
    plan->add_option("--margin", margin, "Obstacle dilation margin in cells");

    // evaluate
    std::string gen_path, ref_path;
    int samples = 200;
    bool include_pathpoints = false;
    CLI::App* evaluate = app.add_subcommand("evaluate", "Compare a generated plan to a reference");
    evaluate->add_option("--gen", gen_path, "Generated plan file (or lat,lon CSV)")->required();
    evaluate->add_option("--ref", ref_path, "Reference plan file (or lat,lon CSV)")->required();
    evaluate->add_option("--samples", samples, "Arc-length resample count for the sequential metric");
    evaluate->add_flag("--include-pathpoints", include_pathpoints,
                       "Include PATHPOINT items in the metric point sets");

    // benchmark
    uavplan::BenchmarkOptions bench;
    std::string bench_out, plot_out;
    CLI::App* benchmark = app.add_subcommand("benchmark",
                                             "Run the seeded multi-scene planner comparison");
    benchmark->add_option("--scenes", bench.n_scenes, "Number of scenes")->required();
    benchmark->add_option("--seed", bench.seed, "Master seed")->required();
    benchmark->add_option("--out", bench_out, "Output CSV")->required();
    benchmark->add_option("--plot-out", plot_out, "Optional polyline CSV for external plotting");
    benchmark->add_flag("--timings", bench.timings,
                        "Record wall-clock per plan (breaks byte-determinism of the CSV)");
    benchmark->add_option("--samples", bench.sequential_samples,
                          "Arc-length resample count for the sequential metric");
    add_gen_options(benchmark, bench.gen);

    // generate
    uavplan::GenParams gen;
    std::string gen_out;
    CLI::App* generate = app.add_subcommand("generate", "Generate a seeded synthetic scene");
    generate->add_option("--seed", gen.seed, "Scene seed")->required();
    generate->add_option("--out", gen_out, "Output scene document")->required();
    add_gen_options(generate, gen);

    CLI11_PARSE(app, argc, argv);

    if (plan->parsed()) return run_plan(scene_path, mode, plan_out, snap, margin);
    if (evaluate->parsed()) return run_evaluate(gen_path, ref_path, samples, include_pathpoints);
    if (benchmark->parsed()) return run_benchmark_cmd(bench, bench_out, plot_out);
    if (generate->parsed()) return run_generate(gen, gen_out);
    return 1;
}
