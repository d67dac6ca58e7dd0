#pragma once

#include "uavplan/geo.hpp"

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace uavplan {

/// Uniform discretization of one scene image into square cells.
struct GridSpec {
    int cell_size_px = 5;
    int width_px = 0;
    int height_px = 0;

    int rows() const { return (height_px + cell_size_px - 1) / cell_size_px; }
    int cols() const { return (width_px + cell_size_px - 1) / cell_size_px; }

    /// Throws ValidationError unless cell_size_px >= 1 and both image
    /// dimensions are at least one cell.
    void validate() const;
};

/// (row, column) cell coordinate.
struct CellIndex {
    int i = 0;
    int j = 0;

    friend bool operator==(const CellIndex&, const CellIndex&) = default;
    friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

struct DiscObstacle {
    PixelPoint center;
    double radius_px = 0.0;
};

struct PolygonObstacle {
    std::vector<PixelPoint> vertices; // closed implicitly, >= 3 vertices
};

using Obstacle = std::variant<DiscObstacle, PolygonObstacle>;

/// Throws ValidationError if the obstacle is malformed (disc radius <= 0,
/// fewer than 3 polygon vertices, or a self-intersecting polygon).
void validate_obstacle(const Obstacle& o);

/// Immutable traversability field. Cells are blocked exactly when their
/// closed square footprint intersects an (inflated) obstacle; read-only
/// sharing across planner workers is safe.
class OccupancyGrid {
public:
    OccupancyGrid(GridSpec spec, std::vector<std::uint8_t> blocked);

    const GridSpec& spec() const { return spec_; }
    int rows() const { return spec_.rows(); }
    int cols() const { return spec_.cols(); }

    bool in_range(CellIndex c) const {
        return c.i >= 0 && c.i < rows() && c.j >= 0 && c.j < cols();
    }
    bool blocked(CellIndex c) const {
        return blocked_[static_cast<std::size_t>(c.i) * cols() + c.j] != 0;
    }
    std::int64_t blocked_count() const;

private:
    GridSpec spec_;
    std::vector<std::uint8_t> blocked_;
};

/// Rasterizes obstacles onto the grid: a cell is blocked iff its closed
/// square footprint intersects any obstacle, then the blocked set is
/// dilated by Chebyshev radius margin_cells.
OccupancyGrid build_grid(const GridSpec& spec, std::span<const Obstacle> obstacles,
                         int margin_cells = 0);

/// Cell containing pixel p. Throws ValidationError if p lies outside
/// [0, width_px) x [0, height_px).
CellIndex cell_of(const GridSpec& spec, const PixelPoint& p);

/// Pixel center of cell c. Throws ValidationError on an out-of-range index.
PixelPoint center_of(const GridSpec& spec, CellIndex c);

/// False for any out-of-range index (simplifies neighbor generation),
/// otherwise true iff the cell is not blocked.
bool is_traversable(const OccupancyGrid& grid, CellIndex c);

/// Exact closed-set intersection predicates between an axis-aligned box
/// [x0,x1] x [y0,y1] and an obstacle; boundary contact counts.
bool disc_intersects_box(const DiscObstacle& d, double x0, double y0, double x1, double y1);
bool polygon_intersects_box(const PolygonObstacle& p, double x0, double y0, double x1, double y1);

/// True if q lies inside or on the boundary of the (simple, implicitly
/// closed) polygon.
bool point_in_polygon(const PolygonObstacle& poly, const PixelPoint& q);

} // namespace uavplan
