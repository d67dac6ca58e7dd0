#pragma once

#include "uavplan/astar.hpp"
#include "uavplan/geo.hpp"
#include "uavplan/grid.hpp"
#include "uavplan/tsp.hpp"

#include <string>
#include <vector>

namespace uavplan {

struct MissionParams {
    double altitude_m = 100.0;
    int margin_cells = 0;
    bool snap_endpoints = false;
    int snap_radius_cells = 3;
};

/// One planning problem: a georeferenced image with a home point, target
/// waypoints in detection order, and obstacle footprints.
struct Scene {
    std::string name;
    GeoTransform transform;
    GridSpec grid;
    PixelPoint home;
    std::vector<PixelPoint> targets;
    std::vector<Obstacle> obstacles;
    MissionParams params;

    /// Throws ValidationError when home or a target lies outside the
    /// image extent, an obstacle is malformed, or the georeference is
    /// invalid over the extent.
    void validate() const;
};

enum class PlanMode { TspEuclid, AstarSeq, Hybrid };

enum class ItemKind { Takeoff, Waypoint, PathPoint, ReturnToLand };

struct MissionItem {
    ItemKind kind;
    GeoPoint geo;
    double alt_m = 0.0;
};

/// Ordered flight plan: starts with Takeoff at home, visits every target
/// exactly once as a Waypoint, ends with ReturnToLand at home. PathPoints
/// are intermediate grid-path vertices (collinear cells pruned).
struct Mission {
    PlanMode mode;
    std::vector<MissionItem> items;
    double length_m = 0.0;           // polyline length over all item geos
    std::vector<int> visit_order;    // permutation of target indices
};

/// One grid leg between mission nodes (node 0 = home, node k = target
/// k-1). cells is the full unpruned path, for safety audits.
struct LegPath {
    int from_node = 0;
    int to_node = 0;
    std::vector<CellIndex> cells;
    StepCost steps;
};

struct PlanResult {
    Mission mission;
    std::vector<LegPath> legs; // empty for tsp-euclid
};

/// Cached pairwise grid legs between mission nodes, stored once per
/// unordered pair.
class LegCache {
public:
    explicit LegCache(int n_nodes);
    void put(int a, int b, LegPath leg);
    /// Leg from a to b, reversing the stored direction when needed.
    LegPath get(int a, int b) const;

private:
    int n_;
    std::vector<LegPath> legs_;
    std::size_t slot(int a, int b) const;
};

/// Single meters-per-pixel scale for the scene, evaluated at the center
/// latitude (longitude scale times cos(lat)).
double meters_per_pixel(const Scene& scene);

/// Straight-leg tour over {home} + targets with the haversine matrix;
/// obstacles ignored by definition.
Mission plan_tsp_euclid(const Scene& scene);

/// Targets visited in input order, each leg replaced by the pruned grid
/// path. Throws InfeasibleError when an endpoint cell is blocked (with
/// snapping disabled) or a leg has no path.
PlanResult plan_astar_seq(const Scene& scene);

/// Tour over the grid-path cost matrix, legs stitched from the cached
/// paths; every leg obstacle-free by construction.
PlanResult plan_hybrid(const Scene& scene);

/// Pairwise grid-path costs between all mission nodes, in meters
/// (cell-units x cell_size_px x meters_per_pixel); symmetric by mirrored
/// construction. endpoint_cells[k] is the (possibly snapped) cell of node
/// k. Throws InfeasibleError naming the first unreachable pair.
std::pair<CostMatrix, LegCache> build_cost_matrix(const OccupancyGrid& grid, const Scene& scene,
                                                  std::span<const CellIndex> endpoint_cells);

/// Nearest traversable cell within the given Chebyshev radius; ties by
/// Euclidean distance, then lowest (i,j). Throws InfeasibleError when the
/// radius contains no traversable cell.
CellIndex snap_endpoint(const OccupancyGrid& grid, CellIndex c, int radius);

/// Resolves every mission node (home + targets) to a traversable cell,
/// snapping when the scene params allow it. Throws InfeasibleError
/// otherwise, naming the offending node.
std::vector<CellIndex> resolve_endpoint_cells(const OccupancyGrid& grid, const Scene& scene);

const char* to_string(PlanMode mode);
const char* to_string(ItemKind kind);

} // namespace uavplan
