#pragma once

#include <span>
#include <vector>

namespace uavplan {

/// Mean Earth radius in meters, shared by every distance computation.
inline constexpr double kEarthRadiusM = 6371008.8;

/// Image-space point. x is the column, y the row; y grows downward
/// (raster convention), both real-valued.
struct PixelPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Geographic point in degrees, lat in [-90, 90], lon in [-180, 180].
struct GeoPoint {
    double lat = 0.0;
    double lon = 0.0;
};

/// Equality up to the toolkit-wide geographic tolerance (1e-9 degrees).
bool geo_equal(const GeoPoint& a, const GeoPoint& b, double tol_deg = 1e-9);

/// North-up affine georeference of one scene image: no rotation or shear,
/// pixel (0,0) center at (origin_lat, origin_lon), positive per-pixel
/// scales. deg_per_px_y is applied with a negative sign because pixel y
/// grows southward.
struct GeoTransform {
    double origin_lat = 0.0;
    double origin_lon = 0.0;
    double deg_per_px_x = 0.0;
    double deg_per_px_y = 0.0;

    bool valid() const { return deg_per_px_x > 0.0 && deg_per_px_y > 0.0; }
};

/// Pixel -> geographic. Throws ValidationError if the transform is invalid
/// or the result falls outside lat/lon bounds.
GeoPoint geo_from_pixel(const GeoTransform& t, const PixelPoint& p);

/// Geographic -> pixel, exact inverse of geo_from_pixel.
PixelPoint pixel_from_geo(const GeoTransform& t, const GeoPoint& g);

/// Great-circle distance in meters (haversine, mean Earth radius).
double haversine_m(const GeoPoint& a, const GeoPoint& b);

/// Sum of haversine distances over consecutive points; 0 for a single
/// point. Throws ValidationError on an empty sequence.
double polyline_length_m(std::span<const GeoPoint> points);

} // namespace uavplan
