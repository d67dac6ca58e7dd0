#include "uavplan/geo.hpp"

#include "uavplan/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace uavplan {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

} // namespace

bool geo_equal(const GeoPoint& a, const GeoPoint& b, double tol_deg) {
    return std::abs(a.lat - b.lat) <= tol_deg && std::abs(a.lon - b.lon) <= tol_deg;
}

GeoPoint geo_from_pixel(const GeoTransform& t, const PixelPoint& p) {
    if (!t.valid()) {
        throw ValidationError("geo transform invalid: per-pixel scales must be > 0");
    }
    GeoPoint g{t.origin_lat - p.y * t.deg_per_px_y, t.origin_lon + p.x * t.deg_per_px_x};
    if (!std::isfinite(g.lat) || !std::isfinite(g.lon) ||
        g.lat < -90.0 || g.lat > 90.0 || g.lon < -180.0 || g.lon > 180.0) {
        throw ValidationError("geo transform maps pixel outside lat/lon bounds");
    }
    return g;
}

PixelPoint pixel_from_geo(const GeoTransform& t, const GeoPoint& g) {
    if (!t.valid()) {
        throw ValidationError("geo transform invalid: per-pixel scales must be > 0");
    }
    return PixelPoint{(g.lon - t.origin_lon) / t.deg_per_px_x,
                      (t.origin_lat - g.lat) / t.deg_per_px_y};
}

double haversine_m(const GeoPoint& a, const GeoPoint& b) {
    const double lat1 = a.lat * kDegToRad;
    const double lat2 = b.lat * kDegToRad;
    const double dlat = (b.lat - a.lat) * kDegToRad;
    const double dlon = (b.lon - a.lon) * kDegToRad;

    const double sin_lat = std::sin(dlat / 2.0);
    const double sin_lon = std::sin(dlon / 2.0);
    double h = sin_lat * sin_lat + std::cos(lat1) * std::cos(lat2) * sin_lon * sin_lon;
    h = std::clamp(h, 0.0, 1.0);
    return kEarthRadiusM * 2.0 * std::atan2(std::sqrt(h), std::sqrt(1.0 - h));
}

double polyline_length_m(std::span<const GeoPoint> points) {
    if (points.empty()) {
        throw ValidationError("polyline length requires at least one point");
    }
    double total = 0.0;
    for (std::size_t k = 1; k < points.size(); ++k) {
        total += haversine_m(points[k - 1], points[k]);
    }
    return total;
}

} // namespace uavplan
