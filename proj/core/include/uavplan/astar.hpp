#pragma once

#include "uavplan/grid.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace uavplan {

/// Exact grid-path cost: ortho orthogonal steps plus diag diagonal steps,
/// i.e. the value ortho + diag * sqrt(2). Kept as integers so that cost
/// comparison and equality are exact on every platform (sqrt(2) is
/// irrational, so the representation of a path cost is unique).
struct StepCost {
    std::int64_t ortho = 0;
    std::int64_t diag = 0;

    double cell_units() const;

    StepCost operator+(const StepCost& other) const {
        return StepCost{ortho + other.ortho, diag + other.diag};
    }

    friend bool operator==(const StepCost&, const StepCost&) = default;

    /// Exact three-way comparison of ortho + diag*sqrt(2) values.
    static int compare(const StepCost& a, const StepCost& b);
};

inline bool operator<(const StepCost& a, const StepCost& b) {
    return StepCost::compare(a, b) < 0;
}
inline bool operator<=(const StepCost& a, const StepCost& b) {
    return StepCost::compare(a, b) <= 0;
}

/// 8-connected cell path. Consecutive cells are king moves, every cell is
/// traversable, no cell repeats; cost is the sum of step costs (1 per
/// orthogonal move, sqrt(2) per diagonal move).
struct CellPath {
    std::vector<CellIndex> cells;
    StepCost steps;
    double cost = 0.0; // steps in cell-units
};

/// Search effort counters. expanded_nodes / generated_edges are the
/// measurable V and E proxies; grid_vertices is the vertex count of the
/// underlying grid graph and grid_edges_bound its 8-connected edge bound.
struct SearchStats {
    std::int64_t expanded_nodes = 0;
    std::int64_t generated_edges = 0;
    std::int64_t grid_vertices = 0;
    std::int64_t grid_edges_bound = 0;
};

/// path is empty (nullopt) when start and goal are not connected.
struct SearchResult {
    std::optional<CellPath> path;
    SearchStats stats;
};

/// Octile distance max(dx,dy) + (sqrt(2)-1)*min(dx,dy) in cell-units;
/// admissible and consistent for the step costs above.
double heuristic(CellIndex a, CellIndex b);

/// Exact-integer form of the octile distance.
StepCost octile_steps(CellIndex a, CellIndex b);

/// Minimum-cost 8-connected path on the grid. Diagonal moves are legal
/// only when both orthogonal neighbors are traversable (no corner
/// cutting). Ties on f are broken by larger g, then lowest (i,j), so the
/// result is deterministic across runs and platforms. Throws
/// ValidationError when start or goal is blocked or out of range.
SearchResult astar(const OccupancyGrid& grid, CellIndex start, CellIndex goal);

/// Drops interior cells whose predecessor->successor direction does not
/// change; endpoints always survive.
std::vector<CellIndex> prune_collinear(const CellPath& path);

} // namespace uavplan
