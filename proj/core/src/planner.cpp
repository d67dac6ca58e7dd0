#include "uavplan/planner.hpp"

#include "uavplan/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

namespace uavplan {

namespace {

std::string node_name(int node) {
    return node == 0 ? "home" : "target " + std::to_string(node - 1);
}

GeoPoint node_geo(const Scene& scene, int node) {
    return geo_from_pixel(scene.transform,
                          node == 0 ? scene.home : scene.targets[static_cast<std::size_t>(node - 1)]);
}

// Takeoff climbs to mission altitude; ReturnToLand descends to ground.
void append_takeoff(const Scene& scene, Mission& mission) {
    mission.items.push_back(MissionItem{ItemKind::Takeoff, node_geo(scene, 0),
                                        scene.params.altitude_m});
}

void append_rtl(const Scene& scene, Mission& mission) {
    mission.items.push_back(MissionItem{ItemKind::ReturnToLand, node_geo(scene, 0), 0.0});
}

void finish_mission(Mission& mission) {
    std::vector<GeoPoint> polyline;
    polyline.reserve(mission.items.size());
    for (const auto& item : mission.items) polyline.push_back(item.geo);
    mission.length_m = polyline_length_m(polyline);
}

// Stitches Takeoff + per-leg PathPoints/Waypoints + ReturnToLand along the
// node tour [0, o1, ..., ok]; legs[t] runs tour[t] -> tour[t+1 mod].
Mission assemble_grid_mission(const Scene& scene, PlanMode mode,
                              const std::vector<int>& tour,
                              const std::vector<LegPath>& legs) {
    Mission mission;
    mission.mode = mode;
    for (std::size_t k = 1; k < tour.size(); ++k) {
        mission.visit_order.push_back(tour[k] - 1);
    }
    append_takeoff(scene, mission);
    for (const auto& leg : legs) {
        const CellPath path{leg.cells, leg.steps, leg.steps.cell_units()};
        const std::vector<CellIndex> pruned = prune_collinear(path);
        for (std::size_t k = 1; k + 1 < pruned.size(); ++k) {
            mission.items.push_back(MissionItem{
                ItemKind::PathPoint,
                geo_from_pixel(scene.transform, center_of(scene.grid, pruned[k])),
                scene.params.altitude_m});
        }
        if (leg.to_node != 0) {
            mission.items.push_back(MissionItem{ItemKind::Waypoint,
                                                node_geo(scene, leg.to_node),
                                                scene.params.altitude_m});
        }
    }
    append_rtl(scene, mission);
    finish_mission(mission);
    return mission;
}

LegPath run_leg(const OccupancyGrid& grid, std::span<const CellIndex> cells,
                int from, int to, const char* planner_name) {
    SearchResult res = astar(grid, cells[static_cast<std::size_t>(from)],
                             cells[static_cast<std::size_t>(to)]);
    if (!res.path) {
        throw InfeasibleError(std::string(planner_name) + ": no obstacle-free path for leg " +
                              node_name(from) + " -> " + node_name(to));
    }
    return LegPath{from, to, std::move(res.path->cells), res.path->steps};
}

} // namespace

void Scene::validate() const {
    if (!transform.valid()) {
        throw ValidationError("scene '" + name + "': georeference scales must be > 0");
    }
    grid.validate();
    if (params.altitude_m <= 0.0) {
        throw ValidationError("scene '" + name + "': altitude must be > 0");
    }
    if (params.margin_cells < 0 || params.snap_radius_cells < 0) {
        throw ValidationError("scene '" + name + "': margins and snap radius must be >= 0");
    }
    auto in_extent = [this](const PixelPoint& p) {
        return p.x >= 0.0 && p.x < grid.width_px && p.y >= 0.0 && p.y < grid.height_px;
    };
    if (!in_extent(home)) {
        throw ValidationError("scene '" + name + "': home outside image extent");
    }
    for (std::size_t k = 0; k < targets.size(); ++k) {
        if (!in_extent(targets[k])) {
            throw ValidationError("scene '" + name + "': target " + std::to_string(k) +
                                  " outside image extent");
        }
    }
    for (const auto& o : obstacles) validate_obstacle(o);
    // All four extent corners must map to valid geographic coordinates.
    geo_from_pixel(transform, PixelPoint{0.0, 0.0});
    geo_from_pixel(transform, PixelPoint{static_cast<double>(grid.width_px), 0.0});
    geo_from_pixel(transform, PixelPoint{0.0, static_cast<double>(grid.height_px)});
    geo_from_pixel(transform,
                   PixelPoint{static_cast<double>(grid.width_px), static_cast<double>(grid.height_px)});
}

LegCache::LegCache(int n_nodes) : n_(n_nodes) {
    legs_.resize(static_cast<std::size_t>(n_) * n_);
}

std::size_t LegCache::slot(int a, int b) const {
    return static_cast<std::size_t>(std::min(a, b)) * n_ + std::max(a, b);
}

void LegCache::put(int a, int b, LegPath leg) {
    legs_[slot(a, b)] = std::move(leg);
}

LegPath LegCache::get(int a, int b) const {
    LegPath leg = legs_[slot(a, b)];
    if (leg.from_node != a) {
        std::reverse(leg.cells.begin(), leg.cells.end());
        std::swap(leg.from_node, leg.to_node);
    }
    return leg;
}

double meters_per_pixel(const Scene& scene) {
    constexpr double deg_to_rad = std::numbers::pi / 180.0;
    const double center_lat =
        scene.transform.origin_lat - 0.5 * scene.grid.height_px * scene.transform.deg_per_px_y;
    return kEarthRadiusM * scene.transform.deg_per_px_x * deg_to_rad *
           std::cos(center_lat * deg_to_rad);
}

Mission plan_tsp_euclid(const Scene& scene) {
    scene.validate();
    const int n = 1 + static_cast<int>(scene.targets.size());
    CostMatrix matrix(n);
    std::vector<GeoPoint> geos;
    geos.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) geos.push_back(node_geo(scene, k));
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            matrix.set(a, b, haversine_m(geos[static_cast<std::size_t>(a)],
                                         geos[static_cast<std::size_t>(b)]));
        }
    }

    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    const Tour tour = two_opt(matrix, identity);

    Mission mission;
    mission.mode = PlanMode::TspEuclid;
    append_takeoff(scene, mission);
    for (std::size_t k = 1; k < tour.order.size(); ++k) {
        mission.visit_order.push_back(tour.order[k] - 1);
        mission.items.push_back(MissionItem{ItemKind::Waypoint,
                                            node_geo(scene, tour.order[k]),
                                            scene.params.altitude_m});
    }
    append_rtl(scene, mission);
    finish_mission(mission);
    return mission;
}

CellIndex snap_endpoint(const OccupancyGrid& grid, CellIndex c, int radius) {
    bool found = false;
    CellIndex best{};
    int best_cheb = 0;
    std::int64_t best_euclid_sq = 0;
    for (int di = -radius; di <= radius; ++di) {
        for (int dj = -radius; dj <= radius; ++dj) {
            const CellIndex cand{c.i + di, c.j + dj};
            if (!is_traversable(grid, cand)) continue;
            const int cheb = std::max(std::abs(di), std::abs(dj));
            const std::int64_t euclid_sq =
                static_cast<std::int64_t>(di) * di + static_cast<std::int64_t>(dj) * dj;
            const auto key = std::tuple{cheb, euclid_sq, cand.i, cand.j};
            if (!found || key < std::tuple{best_cheb, best_euclid_sq, best.i, best.j}) {
                found = true;
                best = cand;
                best_cheb = cheb;
                best_euclid_sq = euclid_sq;
            }
        }
    }
    if (!found) {
        throw InfeasibleError("no traversable cell within radius " + std::to_string(radius) +
                              " of (" + std::to_string(c.i) + ", " + std::to_string(c.j) + ")");
    }
    return best;
}

std::vector<CellIndex> resolve_endpoint_cells(const OccupancyGrid& grid, const Scene& scene) {
    const int n = 1 + static_cast<int>(scene.targets.size());
    std::vector<CellIndex> cells;
    cells.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const PixelPoint px = k == 0 ? scene.home : scene.targets[static_cast<std::size_t>(k - 1)];
        CellIndex cell = cell_of(scene.grid, px);
        if (!is_traversable(grid, cell)) {
            if (!scene.params.snap_endpoints) {
                throw InfeasibleError(node_name(k) + " cell (" + std::to_string(cell.i) + ", " +
                                      std::to_string(cell.j) +
                                      ") is blocked and endpoint snapping is disabled");
            }
            try {
                cell = snap_endpoint(grid, cell, scene.params.snap_radius_cells);
            } catch (const InfeasibleError&) {
                throw InfeasibleError(node_name(k) + ": no traversable cell within snap radius " +
                                      std::to_string(scene.params.snap_radius_cells));
            }
        }
        cells.push_back(cell);
    }
    return cells;
}

PlanResult plan_astar_seq(const Scene& scene) {
    scene.validate();
    const OccupancyGrid grid = build_grid(scene.grid, scene.obstacles, scene.params.margin_cells);
    const std::vector<CellIndex> cells = resolve_endpoint_cells(grid, scene);
    const int n = static_cast<int>(cells.size());

    PlanResult result;
    std::vector<int> tour(static_cast<std::size_t>(n));
    std::iota(tour.begin(), tour.end(), 0);
    if (n > 1) {
        for (int k = 0; k < n; ++k) {
            result.legs.push_back(run_leg(grid, cells, tour[static_cast<std::size_t>(k)],
                                          tour[static_cast<std::size_t>((k + 1) % n)],
                                          "astar-seq"));
        }
    }
    result.mission = assemble_grid_mission(scene, PlanMode::AstarSeq, tour, result.legs);
    return result;
}

std::pair<CostMatrix, LegCache> build_cost_matrix(const OccupancyGrid& grid, const Scene& scene,
                                                  std::span<const CellIndex> endpoint_cells) {
    const int n = static_cast<int>(endpoint_cells.size());
    CostMatrix matrix(n);
    LegCache cache(n);
    const double meters_per_cell = scene.grid.cell_size_px * meters_per_pixel(scene);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            SearchResult res = astar(grid, endpoint_cells[static_cast<std::size_t>(a)],
                                     endpoint_cells[static_cast<std::size_t>(b)]);
            if (!res.path) {
                throw InfeasibleError("unreachable pair (" + node_name(a) + ", " + node_name(b) +
                                      ")");
            }
            matrix.set(a, b, res.path->steps.cell_units() * meters_per_cell);
            cache.put(a, b, LegPath{a, b, std::move(res.path->cells), res.path->steps});
        }
    }
    return {std::move(matrix), std::move(cache)};
}

PlanResult plan_hybrid(const Scene& scene) {
    scene.validate();
    const OccupancyGrid grid = build_grid(scene.grid, scene.obstacles, scene.params.margin_cells);
    const std::vector<CellIndex> cells = resolve_endpoint_cells(grid, scene);
    const int n = static_cast<int>(cells.size());

    auto [matrix, cache] = build_cost_matrix(grid, scene, cells);
    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    const Tour tour = two_opt(matrix, identity);

    PlanResult result;
    if (n > 1) {
        for (int k = 0; k < n; ++k) {
            result.legs.push_back(cache.get(tour.order[static_cast<std::size_t>(k)],
                                            tour.order[static_cast<std::size_t>((k + 1) % n)]));
        }
    }
    result.mission = assemble_grid_mission(scene, PlanMode::Hybrid, tour.order, result.legs);
    return result;
}

const char* to_string(PlanMode mode) {
    switch (mode) {
    case PlanMode::TspEuclid: return "tsp-euclid";
    case PlanMode::AstarSeq: return "astar-seq";
    case PlanMode::Hybrid: return "hybrid";
    }
    return "?";
}

const char* to_string(ItemKind kind) {
    switch (kind) {
    case ItemKind::Takeoff: return "TAKEOFF";
    case ItemKind::Waypoint: return "WAYPOINT";
    case ItemKind::PathPoint: return "PATHPOINT";
    case ItemKind::ReturnToLand: return "RTL";
    }
    return "?";
}

} // namespace uavplan
