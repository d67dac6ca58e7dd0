// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Each check is self-contained and uses independent
// oracles where the contract calls for one.

#include "../test_support.hpp"
#include "uavplan/bench.hpp"
#include "uavplan/errors.hpp"
#include "uavplan/rng.hpp"
#include "uavplan/scene_io.hpp"
#include "uavplan/tsp.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace uavplan;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> check;
};

// --- helpers shared by the scene-based criteria --------------------------

std::vector<Scene> benchmark_scenes(std::uint64_t master_seed, int n) {
    std::vector<Scene> scenes;
    const SplitMix64 seeder(master_seed);
    for (int s = 0; s < n; ++s) {
        GenParams gp; // defaults: 8 targets, 6 obstacles, 1000x1000 px
        gp.seed = seeder.split(static_cast<std::uint64_t>(s)).next();
        scenes.push_back(generate_scene(gp));
    }
    return scenes;
}

// --- criteria -------------------------------------------------------------

bool astar_dijkstra_oracle(std::string& detail) {
    const auto t0 = Clock::now();
    int exact = 0;
    int verdicts = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto c = test_support::random_grid_case(90000 + seed, 64, 64, 0.20);
        const SearchResult res = astar(c.grid, c.start, c.goal);
        const auto oracle = test_support::dijkstra_oracle(c.grid, c.start, c.goal);
        if (res.path.has_value() != oracle.reachable) {
            detail = "reachability mismatch at case " + std::to_string(seed);
            return false;
        }
        ++verdicts;
        if (res.path) {
            if (!(res.path->steps == oracle.cost)) {
                detail = "cost mismatch at case " + std::to_string(seed);
                return false;
            }
            ++exact;
        }
    }
    const double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%d/200 verdicts agree, %d reachable all cost-exact, %.2fs",
                  verdicts, exact, secs);
    detail = buf;
    return secs < 10.0;
}

bool two_opt_envelope(std::string& detail) {
    int equal = 0;
    for (int k = 0; k < 100; ++k) {
        const int n = 5 + k % 5; // 5..9
        SplitMix64 rng(7000 + static_cast<std::uint64_t>(k));
        std::vector<std::pair<double, double>> pts;
        for (int v = 0; v < n; ++v) {
            pts.emplace_back(rng.next_double(0.0, 1000.0), rng.next_double(0.0, 1000.0));
        }
        CostMatrix m(n);
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                const double dx = pts[a].first - pts[b].first;
                const double dy = pts[a].second - pts[b].second;
                m.set(a, b, std::sqrt(dx * dx + dy * dy));
            }
        }
        std::vector<int> identity(static_cast<std::size_t>(n));
        std::iota(identity.begin(), identity.end(), 0);

        const Tour local = two_opt(m, identity);
        const Tour global = brute_force_tsp(m);
        if (local.length_m < global.length_m - 1e-9) {
            detail = "two_opt beat the exhaustive optimum at instance " + std::to_string(k);
            return false;
        }
        if (std::abs(local.length_m - global.length_m) <= 1e-6) ++equal;

        // local-minimum verifier: no reversal may improve
        for (int i = 1; i < n - 1; ++i) {
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> cand = local.order;
                std::reverse(cand.begin() + i, cand.begin() + j + 1);
                if (tour_length(m, cand) < local.length_m - 1e-9) {
                    detail = "returned tour is not 2-opt minimal at instance " + std::to_string(k);
                    return false;
                }
            }
        }
    }
    detail = "100/100 bounded by the optimum, optimum hit on " + std::to_string(equal) +
             "/100 (>= 70 required), local minima verified";
    return equal >= 70;
}

struct SuiteResults {
    std::vector<Scene> scenes;
    std::vector<PlanResult> seq;
    std::vector<PlanResult> hyb;
    std::vector<Mission> tsp;
    std::vector<Mission> input;
    double build_seconds = 0.0;
};

SuiteResults& suite() {
    static SuiteResults results = [] {
        SuiteResults r;
        const auto t0 = Clock::now();
        r.scenes = benchmark_scenes(7, 50);
        for (const Scene& scene : r.scenes) {
            r.seq.push_back(plan_astar_seq(scene));
            r.hyb.push_back(plan_hybrid(scene));
            r.tsp.push_back(plan_tsp_euclid(scene));
            r.input.push_back(plan_input_order(scene));
        }
        r.build_seconds = seconds_since(t0);
        return r;
    }();
    return results;
}

bool ordering_hybrid_vs_seq(std::string& detail) {
    SuiteResults& r = suite();
    int ok = 0, strict = 0;
    for (std::size_t k = 0; k < r.scenes.size(); ++k) {
        const double h = r.hyb[k].mission.length_m;
        const double s = r.seq[k].mission.length_m;
        if (h <= s + 1e-6) ++ok;
        if (h < s - 1e-6) ++strict;
    }
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "hybrid <= astar-seq on %d/50 (50 required), strict on %d/50 (>= 40 required), "
                  "planning %.1fs (< 60s required)",
                  ok, strict, r.build_seconds);
    detail = buf;
    return ok == 50 && strict >= 40 && r.build_seconds < 60.0;
}

bool ordering_tsp_vs_input(std::string& detail) {
    SuiteResults& r = suite();
    int ok = 0;
    for (std::size_t k = 0; k < r.scenes.size(); ++k) {
        if (r.tsp[k].length_m <= r.input[k].length_m + 1e-6) ++ok;
    }
    detail = "tsp-euclid <= input-order straight legs on " + std::to_string(ok) + "/50";
    return ok == 50;
}

bool obstacle_safety(std::string& detail) {
    SuiteResults& r = suite();
    std::int64_t cells_checked = 0;
    for (std::size_t k = 0; k < r.scenes.size(); ++k) {
        const Scene& scene = r.scenes[k];
        const OccupancyGrid grid =
            build_grid(scene.grid, scene.obstacles, scene.params.margin_cells);
        for (const PlanResult* plan : {&r.seq[k], &r.hyb[k]}) {
            for (const LegPath& leg : plan->legs) {
                for (const CellIndex& cell : leg.cells) {
                    ++cells_checked;
                    if (!is_traversable(grid, cell)) {
                        detail = "blocked cell in a leg of scene " + scene.name;
                        return false;
                    }
                }
            }
        }
    }
    detail = std::to_string(cells_checked) + " leg cells audited, none blocked";
    return cells_checked > 0;
}

bool metric_identities(std::string& detail) {
    SplitMix64 rng(55);
    auto random_traj = [&](int n, double lat0, double lon0) {
        Trajectory t;
        double lat = lat0, lon = lon0;
        for (int k = 0; k < n; ++k) {
            t.points.push_back(GeoPoint{lat, lon});
            lat += rng.next_double(-1e-3, 1e-3);
            lon += rng.next_double(-1e-3, 1e-3);
        }
        return t;
    };

    for (int k = 0; k < 20; ++k) {
        const Trajectory t = random_traj(5 + k % 7, 40.0, -100.0);
        if (knn_rmse(t, t) > 1e-9 || dtw_rmse(t, t) > 1e-9 || sequential_rmse(t, t) > 1e-9) {
            detail = "identity pair " + std::to_string(k) + " has a nonzero metric";
            return false;
        }
    }

    for (int k = 0; k < 20; ++k) {
        const Trajectory a = random_traj(6 + k % 5, 40.0, -100.0);
        const Trajectory b = random_traj(5 + k % 6, 40.001, -100.001);
        if (std::abs(dtw_rmse(a, b) - dtw_rmse(b, a)) > 1e-9) {
            detail = "dtw asymmetry on random pair " + std::to_string(k);
            return false;
        }
    }

    const double m_per_deg_lat = haversine_m(GeoPoint{0, 0}, GeoPoint{1, 0});
    for (double offset_m : {2.0, 5.0, 20.0}) {
        Trajectory gen, ref;
        const double dlat = offset_m / m_per_deg_lat;
        for (int k = 0; k < 25; ++k) {
            ref.points.push_back(GeoPoint{0.0, 0.0004 * k});
            gen.points.push_back(GeoPoint{dlat, 0.0004 * k});
        }
        if (std::abs(knn_rmse(gen, ref) - offset_m) > 0.01 * offset_m ||
            std::abs(sequential_rmse(gen, ref) - offset_m) > 0.01 * offset_m) {
            detail = "constant offset " + std::to_string(offset_m) + " m not recovered within 1%";
            return false;
        }
    }

    detail = "20 self-pairs zero, 20 dtw symmetry pairs, 3 constant-offset pairs within 1%";
    return true;
}

bool benchmark_determinism(std::string& detail) {
    BenchmarkOptions options;
    options.n_scenes = 50;
    options.seed = 7;
    const BenchmarkOutput a = run_benchmark(options);
    const BenchmarkOutput b = run_benchmark(options);
    if (a.csv != b.csv) {
        detail = "CSV differs between two runs with seed 7";
        return false;
    }
    if (a.ordering_violations != 0) {
        detail = "orderings violated inside the benchmark run";
        return false;
    }
    detail = "two seed-7 runs byte-identical (" + std::to_string(a.rows.size()) +
             " rows); costs use exact integer arithmetic, so the bytes are platform-independent";
    return true;
}

bool complexity_smoke(std::string& detail) {
    const OccupancyGrid grid = build_grid(GridSpec{1, 512, 512}, {});
    const auto t0 = Clock::now();
    const SearchResult res = astar(grid, CellIndex{0, 0}, CellIndex{511, 511});
    const double secs = seconds_since(t0);
    if (!res.path) {
        detail = "corner-to-corner search failed on an empty grid";
        return false;
    }
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "512x512 corner-to-corner in %.3fs (< 1s), expanded %lld <= V=%lld, "
                  "edges generated %lld <= 8*expanded",
                  secs, static_cast<long long>(res.stats.expanded_nodes),
                  static_cast<long long>(res.stats.grid_vertices),
                  static_cast<long long>(res.stats.generated_edges));
    detail = buf;
    return secs < 1.0 && res.stats.expanded_nodes <= res.stats.grid_vertices &&
           res.stats.generated_edges <= 8 * res.stats.expanded_nodes;
}

bool golden_plans(std::string& detail) {
    const std::string dir = UAVPLAN_GOLDEN_DIR;
    for (std::uint64_t seed : {501ULL, 502ULL, 503ULL}) {
        GenParams gp;
        gp.seed = seed;
        const Scene scene = generate_scene(gp);
        const std::string produced = save_mission(plan_hybrid(scene).mission);

        const std::string path = dir + "/hybrid_seed" + std::to_string(seed) + ".plan";
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            detail = "missing golden file " + path;
            return false;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        if (buf.str() != produced) {
            detail = "byte mismatch against " + path;
            return false;
        }
    }
    detail = "3 frozen hybrid plans match byte-for-byte";
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"astar-dijkstra-oracle", astar_dijkstra_oracle},
        {"two-opt-optimality-envelope", two_opt_envelope},
        {"ordering-hybrid-le-astar-seq", ordering_hybrid_vs_seq},
        {"ordering-tsp-le-input-order", ordering_tsp_vs_input},
        {"obstacle-safety", obstacle_safety},
        {"metric-identities", metric_identities},
        {"benchmark-determinism", benchmark_determinism},
        {"complexity-smoke", complexity_smoke},
        {"golden-plan-files", golden_plans},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", criterion.name.c_str(),
                    detail.empty() ? "" : " — ", detail.c_str());
        failures += ok ? 0 : 1;
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
    return failures == 0 ? 0 : 1;
}
