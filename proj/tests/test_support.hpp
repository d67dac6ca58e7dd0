// Shared test-only helpers: independent oracles and fixture builders.
// Everything here deliberately re-derives behavior instead of calling the
// implementation paths it is used to check.
#pragma once

#include "uavplan/astar.hpp"
#include "uavplan/grid.hpp"
#include "uavplan/planner.hpp"
#include "uavplan/rng.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <vector>

namespace test_support {

using uavplan::CellIndex;
using uavplan::OccupancyGrid;
using uavplan::StepCost;

struct DijkstraOutcome {
    bool reachable = false;
    StepCost cost;
    std::int64_t expanded = 0;
};

// Uniform-cost search over the same move rule as the planner: 8-connected,
// diagonals cost sqrt(2) and are blocked when either orthogonal neighbor
// is blocked. No heuristic.
inline DijkstraOutcome dijkstra_oracle(const OccupancyGrid& grid, CellIndex start,
                                       CellIndex goal) {
    struct Entry {
        StepCost g;
        CellIndex cell;
    };
    struct Later {
        bool operator()(const Entry& a, const Entry& b) const {
            const int c = StepCost::compare(a.g, b.g);
            if (c != 0) return c > 0;
            return CellIndex{a.cell.i, a.cell.j} > CellIndex{b.cell.i, b.cell.j};
        }
    };

    const int rows = grid.rows();
    const int cols = grid.cols();
    const std::size_t n = static_cast<std::size_t>(rows) * cols;
    std::vector<StepCost> dist(n);
    std::vector<std::uint8_t> state(n, 0);
    auto id_of = [cols](CellIndex c) { return static_cast<std::size_t>(c.i) * cols + c.j; };

    DijkstraOutcome out;
    std::priority_queue<Entry, std::vector<Entry>, Later> open;
    dist[id_of(start)] = StepCost{};
    state[id_of(start)] = 1;
    open.push(Entry{StepCost{}, start});

    const int di[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
    const int dj[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
    while (!open.empty()) {
        const Entry top = open.top();
        open.pop();
        const std::size_t uid = id_of(top.cell);
        if (state[uid] == 2 || !(top.g == dist[uid])) continue;
        state[uid] = 2;
        ++out.expanded;
        if (top.cell == goal) {
            out.reachable = true;
            out.cost = top.g;
            return out;
        }
        for (int k = 0; k < 8; ++k) {
            const CellIndex next{top.cell.i + di[k], top.cell.j + dj[k]};
            if (!uavplan::is_traversable(grid, next)) continue;
            const bool diagonal = di[k] != 0 && dj[k] != 0;
            if (diagonal &&
                (!uavplan::is_traversable(grid, CellIndex{top.cell.i + di[k], top.cell.j}) ||
                 !uavplan::is_traversable(grid, CellIndex{top.cell.i, top.cell.j + dj[k]}))) {
                continue;
            }
            const std::size_t vid = id_of(next);
            if (state[vid] == 2) continue;
            const StepCost cand = top.g + (diagonal ? StepCost{0, 1} : StepCost{1, 0});
            if (state[vid] == 1 && StepCost::compare(dist[vid], cand) <= 0) continue;
            dist[vid] = cand;
            state[vid] = 1;
            open.push(Entry{cand, next});
        }
    }
    return out;
}

// Seeded random grid with roughly the requested blocked fraction, plus a
// random traversable endpoint pair.
struct RandomGridCase {
    OccupancyGrid grid;
    CellIndex start;
    CellIndex goal;
};

inline RandomGridCase random_grid_case(std::uint64_t seed, int rows, int cols,
                                       double blocked_fraction) {
    uavplan::SplitMix64 rng(seed);
    std::vector<std::uint8_t> blocked(static_cast<std::size_t>(rows) * cols, 0);
    for (auto& b : blocked) b = rng.next_double() < blocked_fraction ? 1 : 0;

    auto pick = [&]() {
        while (true) {
            const CellIndex c{static_cast<int>(rng.next_int(0, rows - 1)),
                              static_cast<int>(rng.next_int(0, cols - 1))};
            if (!blocked[static_cast<std::size_t>(c.i) * cols + c.j]) return c;
        }
    };
    const CellIndex start = pick();
    const CellIndex goal = pick();
    return RandomGridCase{OccupancyGrid(uavplan::GridSpec{1, cols, rows}, std::move(blocked)),
                          start, goal};
}

// CellPath contract: 8-adjacent consecutive cells, all traversable, no
// repeats, cost equal to the recounted step costs.
inline bool valid_cell_path(const OccupancyGrid& grid, const uavplan::CellPath& path) {
    if (path.cells.empty()) return false;
    std::set<std::pair<int, int>> seen;
    StepCost recount;
    for (std::size_t k = 0; k < path.cells.size(); ++k) {
        const CellIndex c = path.cells[k];
        if (!uavplan::is_traversable(grid, c)) return false;
        if (!seen.insert({c.i, c.j}).second) return false;
        if (k == 0) continue;
        const int di = c.i - path.cells[k - 1].i;
        const int dj = c.j - path.cells[k - 1].j;
        if (di == 0 && dj == 0) return false;
        if (std::abs(di) > 1 || std::abs(dj) > 1) return false;
        recount = recount + (di != 0 && dj != 0 ? StepCost{0, 1} : StepCost{1, 0});
    }
    if (!(recount == path.steps)) return false;
    return std::abs(path.cost - recount.cell_units()) <= 1e-9;
}

// Scene over a square-meter-pixel georeference near (40N, 100W), 1 m/px.
inline uavplan::Scene make_scene(int width_px, int height_px, int cell_size_px,
                                 uavplan::PixelPoint home,
                                 std::vector<uavplan::PixelPoint> targets,
                                 std::vector<uavplan::Obstacle> obstacles) {
    constexpr double deg_to_rad = 3.14159265358979323846 / 180.0;
    uavplan::Scene scene;
    scene.name = "test";
    scene.grid = uavplan::GridSpec{cell_size_px, width_px, height_px};
    scene.home = home;
    scene.targets = std::move(targets);
    scene.obstacles = std::move(obstacles);
    scene.transform.origin_lat = 40.0;
    scene.transform.origin_lon = -100.0;
    scene.transform.deg_per_px_y = 1.0 / (uavplan::kEarthRadiusM * deg_to_rad);
    const double center_lat = 40.0 - 0.5 * height_px * scene.transform.deg_per_px_y;
    scene.transform.deg_per_px_x =
        1.0 / (uavplan::kEarthRadiusM * deg_to_rad * std::cos(center_lat * deg_to_rad));
    return scene;
}

// Axis-aligned rectangle as a polygon obstacle.
inline uavplan::Obstacle rect_obstacle(double x0, double y0, double x1, double y1) {
    return uavplan::PolygonObstacle{
        {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

} // namespace test_support
