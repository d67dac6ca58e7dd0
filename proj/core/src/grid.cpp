#include "uavplan/grid.hpp"

#include "uavplan/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace uavplan {

namespace {

double clamp_to(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

// Orientation of (a,b,c): >0 counter-clockwise, <0 clockwise, 0 collinear.
double orient(const PixelPoint& a, const PixelPoint& b, const PixelPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool on_segment(const PixelPoint& a, const PixelPoint& b, const PixelPoint& q) {
    if (orient(a, b, q) != 0.0) return false;
    return q.x >= std::min(a.x, b.x) && q.x <= std::max(a.x, b.x) &&
           q.y >= std::min(a.y, b.y) && q.y <= std::max(a.y, b.y);
}

// Closed-segment intersection, collinear overlap included.
bool segments_intersect(const PixelPoint& a, const PixelPoint& b,
                        const PixelPoint& c, const PixelPoint& d) {
    const double o1 = orient(a, b, c);
    const double o2 = orient(a, b, d);
    const double o3 = orient(c, d, a);
    const double o4 = orient(c, d, b);
    if (((o1 > 0) != (o2 > 0)) && o1 != 0 && o2 != 0 &&
        ((o3 > 0) != (o4 > 0)) && o3 != 0 && o4 != 0) {
        return true;
    }
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
           (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

bool polygon_is_simple(const PolygonObstacle& poly) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t a2 = (a + 1) % n;
        if (v[a].x == v[a2].x && v[a].y == v[a2].y) return false; // degenerate edge
        for (std::size_t b = a + 1; b < n; ++b) {
            const std::size_t b2 = (b + 1) % n;
            if (a == b || a2 == b || a == b2) continue; // adjacent edges share a vertex
            if (segments_intersect(v[a], v[a2], v[b], v[b2])) return false;
        }
    }
    return true;
}

struct Box {
    double x0, y0, x1, y1;
    bool contains(const PixelPoint& p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
};

} // namespace

void GridSpec::validate() const {
    if (cell_size_px < 1) {
        throw ValidationError("grid cell_size_px must be >= 1, got " + std::to_string(cell_size_px));
    }
    if (width_px < cell_size_px || height_px < cell_size_px) {
        throw ValidationError("grid extent must be at least one cell (" +
                              std::to_string(width_px) + "x" + std::to_string(height_px) +
                              " px, cell " + std::to_string(cell_size_px) + ")");
    }
}

void validate_obstacle(const Obstacle& o) {
    if (const auto* disc = std::get_if<DiscObstacle>(&o)) {
        if (!(disc->radius_px > 0.0)) {
            throw ValidationError("disc obstacle radius must be > 0");
        }
        return;
    }
    const auto& poly = std::get<PolygonObstacle>(o);
    if (poly.vertices.size() < 3) {
        throw ValidationError("polygon obstacle needs >= 3 vertices, got " +
                              std::to_string(poly.vertices.size()));
    }
    if (!polygon_is_simple(poly)) {
        throw ValidationError("polygon obstacle is self-intersecting");
    }
}

OccupancyGrid::OccupancyGrid(GridSpec spec, std::vector<std::uint8_t> blocked)
    : spec_(spec), blocked_(std::move(blocked)) {
    spec_.validate();
    if (blocked_.size() != static_cast<std::size_t>(spec_.rows()) * spec_.cols()) {
        throw ValidationError("occupancy field size does not match grid spec");
    }
}

std::int64_t OccupancyGrid::blocked_count() const {
    return std::accumulate(blocked_.begin(), blocked_.end(), std::int64_t{0});
}

bool disc_intersects_box(const DiscObstacle& d, double x0, double y0, double x1, double y1) {
    const double cx = clamp_to(d.center.x, x0, x1);
    const double cy = clamp_to(d.center.y, y0, y1);
    const double dx = d.center.x - cx;
    const double dy = d.center.y - cy;
    return dx * dx + dy * dy <= d.radius_px * d.radius_px;
}

bool point_in_polygon(const PolygonObstacle& poly, const PixelPoint& q) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (on_segment(v[k], v[(k + 1) % n], q)) return true;
    }
    bool inside = false;
    for (std::size_t k = 0; k < n; ++k) {
        const PixelPoint& a = v[k];
        const PixelPoint& b = v[(k + 1) % n];
        if ((a.y > q.y) != (b.y > q.y)) {
            const double x_int = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (q.x < x_int) inside = !inside;
        }
    }
    return inside;
}

bool polygon_intersects_box(const PolygonObstacle& p, double x0, double y0, double x1, double y1) {
    const Box box{x0, y0, x1, y1};
    for (const auto& v : p.vertices) {
        if (box.contains(v)) return true;
    }
    const PixelPoint corners[4] = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
    for (const auto& c : corners) {
        if (point_in_polygon(p, c)) return true;
    }
    const std::size_t n = p.vertices.size();
    for (std::size_t k = 0; k < n; ++k) {
        const PixelPoint& a = p.vertices[k];
        const PixelPoint& b = p.vertices[(k + 1) % n];
        for (int e = 0; e < 4; ++e) {
            if (segments_intersect(a, b, corners[e], corners[(e + 1) % 4])) return true;
        }
    }
    return false;
}

OccupancyGrid build_grid(const GridSpec& spec, std::span<const Obstacle> obstacles,
                         int margin_cells) {
    spec.validate();
    if (margin_cells < 0) {
        throw ValidationError("margin_cells must be >= 0");
    }
    for (const auto& o : obstacles) validate_obstacle(o);

    const int rows = spec.rows();
    const int cols = spec.cols();
    const double cell = spec.cell_size_px;
    std::vector<std::uint8_t> blocked(static_cast<std::size_t>(rows) * cols, 0);

    // Scan one cell beyond the bounding box: closed squares touch obstacles
    // whose bbox ends exactly on a cell boundary. The exact predicate
    // rejects the extras.
    auto mark_range = [&](double px0, double py0, double px1, double py1, auto&& hit) {
        const int j0 = std::max(0, static_cast<int>(std::floor(px0 / cell)) - 1);
        const int j1 = std::min(cols - 1, static_cast<int>(std::floor(px1 / cell)) + 1);
        const int i0 = std::max(0, static_cast<int>(std::floor(py0 / cell)) - 1);
        const int i1 = std::min(rows - 1, static_cast<int>(std::floor(py1 / cell)) + 1);
        for (int i = i0; i <= i1; ++i) {
            for (int j = j0; j <= j1; ++j) {
                if (blocked[static_cast<std::size_t>(i) * cols + j]) continue;
                if (hit(j * cell, i * cell, (j + 1) * cell, (i + 1) * cell)) {
                    blocked[static_cast<std::size_t>(i) * cols + j] = 1;
                }
            }
        }
    };

    for (const auto& o : obstacles) {
        if (const auto* disc = std::get_if<DiscObstacle>(&o)) {
            mark_range(disc->center.x - disc->radius_px, disc->center.y - disc->radius_px,
                       disc->center.x + disc->radius_px, disc->center.y + disc->radius_px,
                       [&](double x0, double y0, double x1, double y1) {
                           return disc_intersects_box(*disc, x0, y0, x1, y1);
                       });
        } else {
            const auto& poly = std::get<PolygonObstacle>(o);
            double px0 = poly.vertices[0].x, px1 = px0;
            double py0 = poly.vertices[0].y, py1 = py0;
            for (const auto& v : poly.vertices) {
                px0 = std::min(px0, v.x);
                px1 = std::max(px1, v.x);
                py0 = std::min(py0, v.y);
                py1 = std::max(py1, v.y);
            }
            mark_range(px0, py0, px1, py1, [&](double x0, double y0, double x1, double y1) {
                return polygon_intersects_box(poly, x0, y0, x1, y1);
            });
        }
    }

    if (margin_cells > 0) {
        std::vector<std::uint8_t> dilated(blocked.size(), 0);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                if (!blocked[static_cast<std::size_t>(i) * cols + j]) continue;
                const int i0 = std::max(0, i - margin_cells);
                const int i1 = std::min(rows - 1, i + margin_cells);
                const int j0 = std::max(0, j - margin_cells);
                const int j1 = std::min(cols - 1, j + margin_cells);
                for (int di = i0; di <= i1; ++di) {
                    std::fill(dilated.begin() + static_cast<std::size_t>(di) * cols + j0,
                              dilated.begin() + static_cast<std::size_t>(di) * cols + j1 + 1,
                              std::uint8_t{1});
                }
            }
        }
        blocked = std::move(dilated);
    }

    return OccupancyGrid(spec, std::move(blocked));
}

CellIndex cell_of(const GridSpec& spec, const PixelPoint& p) {
    spec.validate();
    if (!(p.x >= 0.0 && p.x < spec.width_px && p.y >= 0.0 && p.y < spec.height_px)) {
        throw ValidationError("pixel (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                              ") outside image extent " + std::to_string(spec.width_px) + "x" +
                              std::to_string(spec.height_px));
    }
    return CellIndex{static_cast<int>(std::floor(p.y / spec.cell_size_px)),
                     static_cast<int>(std::floor(p.x / spec.cell_size_px))};
}

PixelPoint center_of(const GridSpec& spec, CellIndex c) {
    spec.validate();
    if (c.i < 0 || c.i >= spec.rows() || c.j < 0 || c.j >= spec.cols()) {
        throw ValidationError("cell (" + std::to_string(c.i) + ", " + std::to_string(c.j) +
                              ") out of range for " + std::to_string(spec.rows()) + "x" +
                              std::to_string(spec.cols()) + " grid");
    }
    return PixelPoint{(c.j + 0.5) * spec.cell_size_px, (c.i + 0.5) * spec.cell_size_px};
}

bool is_traversable(const OccupancyGrid& grid, CellIndex c) {
    return grid.in_range(c) && !grid.blocked(c);
}

} // namespace uavplan
