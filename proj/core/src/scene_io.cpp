#include "uavplan/scene_io.hpp"

#include "uavplan/errors.hpp"
#include "uavplan/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace uavplan {

namespace {

using nlohmann::json;

constexpr const char* kPlanHeader = "UAVVLPA PLAN 1";

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError("scene document: " + where + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* k) { return key == k; }) == allowed.end()) {
            fail(where, "unknown field '" + key + "'");
        }
    }
}

double require_number(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key)) fail(where, std::string("missing field '") + key + "'");
    if (!obj[key].is_number()) fail(where, std::string("field '") + key + "' must be a number");
    return obj[key].get<double>();
}

int require_int(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key)) fail(where, std::string("missing field '") + key + "'");
    if (!obj[key].is_number_integer()) {
        fail(where, std::string("field '") + key + "' must be an integer");
    }
    return obj[key].get<int>();
}

PixelPoint parse_point(const json& obj, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object with x and y");
    reject_unknown_keys(obj, where, {"x", "y"});
    return PixelPoint{require_number(obj, where, "x"), require_number(obj, where, "y")};
}

Obstacle parse_obstacle(const json& obj, const std::string& where, double default_radius_px) {
    if (!obj.is_object()) fail(where, "expected an obstacle object");
    if (!obj.contains("kind") || !obj["kind"].is_string()) {
        fail(where, "missing string field 'kind'");
    }
    const std::string kind = obj["kind"].get<std::string>();
    if (kind == "disc") {
        reject_unknown_keys(obj, where, {"kind", "center", "radius_px"});
        if (!obj.contains("center")) fail(where, "missing field 'center'");
        return DiscObstacle{parse_point(obj["center"], where + ".center"),
                            require_number(obj, where, "radius_px")};
    }
    if (kind == "point") {
        reject_unknown_keys(obj, where, {"kind", "center"});
        if (!obj.contains("center")) fail(where, "missing field 'center'");
        return DiscObstacle{parse_point(obj["center"], where + ".center"), default_radius_px};
    }
    if (kind == "polygon") {
        reject_unknown_keys(obj, where, {"kind", "vertices"});
        if (!obj.contains("vertices") || !obj["vertices"].is_array()) {
            fail(where, "missing array field 'vertices'");
        }
        PolygonObstacle poly;
        int idx = 0;
        for (const auto& v : obj["vertices"]) {
            poly.vertices.push_back(parse_point(v, where + ".vertices[" + std::to_string(idx) + "]"));
            ++idx;
        }
        return poly;
    }
    fail(where, "unknown obstacle kind '" + kind + "' (expected disc, polygon or point)");
}

ItemKind item_kind_from(const std::string& s, int line_no) {
    if (s == "TAKEOFF") return ItemKind::Takeoff;
    if (s == "WAYPOINT") return ItemKind::Waypoint;
    if (s == "PATHPOINT") return ItemKind::PathPoint;
    if (s == "RTL") return ItemKind::ReturnToLand;
    throw ParseError("plan file line " + std::to_string(line_no) + ": unknown item kind '" + s +
                     "'");
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

double point_segment_distance(const PixelPoint& p, const PixelPoint& a, const PixelPoint& b) {
    const double vx = b.x - a.x;
    const double vy = b.y - a.y;
    const double len_sq = vx * vx + vy * vy;
    double t = len_sq > 0.0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len_sq : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const double dx = p.x - (a.x + t * vx);
    const double dy = p.y - (a.y + t * vy);
    return std::sqrt(dx * dx + dy * dy);
}

double obstacle_clearance(const PixelPoint& p, const Obstacle& o) {
    if (const auto* disc = std::get_if<DiscObstacle>(&o)) {
        const double dx = p.x - disc->center.x;
        const double dy = p.y - disc->center.y;
        return std::sqrt(dx * dx + dy * dy) - disc->radius_px;
    }
    const auto& poly = std::get<PolygonObstacle>(o);
    if (point_in_polygon(poly, p)) return -1.0;
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = poly.vertices.size();
    for (std::size_t k = 0; k < n; ++k) {
        best = std::min(best, point_segment_distance(p, poly.vertices[k],
                                                     poly.vertices[(k + 1) % n]));
    }
    return best;
}

} // namespace

Scene load_scene(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scene document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("top level", "expected a JSON object");
    reject_unknown_keys(doc, "top level",
                        {"schema_version", "name", "transform", "grid", "home", "targets",
                         "obstacles", "params", "obstacle_default_radius_px"});

    const int version = require_int(doc, "top level", "schema_version");
    if (version != kSceneSchemaVersion) {
        fail("schema_version", "unsupported version " + std::to_string(version) + " (expected " +
                               std::to_string(kSceneSchemaVersion) + ")");
    }

    Scene scene;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) fail("name", "must be a string");
        scene.name = doc["name"].get<std::string>();
    }

    if (!doc.contains("transform")) fail("top level", "missing field 'transform'");
    const json& tr = doc["transform"];
    reject_unknown_keys(tr, "transform",
                        {"origin_lat", "origin_lon", "deg_per_px_x", "deg_per_px_y"});
    scene.transform.origin_lat = require_number(tr, "transform", "origin_lat");
    scene.transform.origin_lon = require_number(tr, "transform", "origin_lon");
    scene.transform.deg_per_px_x = require_number(tr, "transform", "deg_per_px_x");
    scene.transform.deg_per_px_y = require_number(tr, "transform", "deg_per_px_y");

    if (!doc.contains("grid")) fail("top level", "missing field 'grid'");
    const json& gr = doc["grid"];
    reject_unknown_keys(gr, "grid", {"cell_size_px", "width_px", "height_px"});
    if (gr.contains("cell_size_px")) scene.grid.cell_size_px = require_int(gr, "grid", "cell_size_px");
    scene.grid.width_px = require_int(gr, "grid", "width_px");
    scene.grid.height_px = require_int(gr, "grid", "height_px");

    if (!doc.contains("home")) fail("top level", "missing field 'home'");
    scene.home = parse_point(doc["home"], "home");

    if (doc.contains("targets")) {
        if (!doc["targets"].is_array()) fail("targets", "must be an array");
        int idx = 0;
        for (const auto& t : doc["targets"]) {
            scene.targets.push_back(parse_point(t, "targets[" + std::to_string(idx) + "]"));
            ++idx;
        }
    }

    double default_radius_px = 15.0;
    if (doc.contains("obstacle_default_radius_px")) {
        default_radius_px = require_number(doc, "top level", "obstacle_default_radius_px");
        if (!(default_radius_px > 0.0)) fail("obstacle_default_radius_px", "must be > 0");
    }

    if (doc.contains("obstacles")) {
        if (!doc["obstacles"].is_array()) fail("obstacles", "must be an array");
        int idx = 0;
        for (const auto& o : doc["obstacles"]) {
            scene.obstacles.push_back(
                parse_obstacle(o, "obstacles[" + std::to_string(idx) + "]", default_radius_px));
            ++idx;
        }
    }

    if (doc.contains("params")) {
        const json& pp = doc["params"];
        reject_unknown_keys(pp, "params",
                            {"altitude_m", "margin_cells", "snap_endpoints", "snap_radius_cells"});
        if (pp.contains("altitude_m")) scene.params.altitude_m = require_number(pp, "params", "altitude_m");
        if (pp.contains("margin_cells")) scene.params.margin_cells = require_int(pp, "params", "margin_cells");
        if (pp.contains("snap_endpoints")) {
            if (!pp["snap_endpoints"].is_boolean()) fail("params", "snap_endpoints must be a boolean");
            scene.params.snap_endpoints = pp["snap_endpoints"].get<bool>();
        }
        if (pp.contains("snap_radius_cells")) {
            scene.params.snap_radius_cells = require_int(pp, "params", "snap_radius_cells");
        }
    }

    scene.validate();
    return scene;
}

std::string save_scene(const Scene& scene) {
    json doc;
    doc["schema_version"] = kSceneSchemaVersion;
    doc["name"] = scene.name;
    doc["transform"] = {{"origin_lat", scene.transform.origin_lat},
                        {"origin_lon", scene.transform.origin_lon},
                        {"deg_per_px_x", scene.transform.deg_per_px_x},
                        {"deg_per_px_y", scene.transform.deg_per_px_y}};
    doc["grid"] = {{"cell_size_px", scene.grid.cell_size_px},
                   {"width_px", scene.grid.width_px},
                   {"height_px", scene.grid.height_px}};
    doc["home"] = {{"x", scene.home.x}, {"y", scene.home.y}};
    doc["targets"] = json::array();
    for (const auto& t : scene.targets) {
        doc["targets"].push_back({{"x", t.x}, {"y", t.y}});
    }
    doc["obstacles"] = json::array();
    for (const auto& o : scene.obstacles) {
        if (const auto* disc = std::get_if<DiscObstacle>(&o)) {
            doc["obstacles"].push_back({{"kind", "disc"},
                                        {"center", {{"x", disc->center.x}, {"y", disc->center.y}}},
                                        {"radius_px", disc->radius_px}});
        } else {
            const auto& poly = std::get<PolygonObstacle>(o);
            json verts = json::array();
            for (const auto& v : poly.vertices) verts.push_back({{"x", v.x}, {"y", v.y}});
            doc["obstacles"].push_back({{"kind", "polygon"}, {"vertices", verts}});
        }
    }
    doc["params"] = {{"altitude_m", scene.params.altitude_m},
                     {"margin_cells", scene.params.margin_cells},
                     {"snap_endpoints", scene.params.snap_endpoints},
                     {"snap_radius_cells", scene.params.snap_radius_cells}};
    return doc.dump(2) + "\n";
}

std::string save_mission(const Mission& m) {
    std::string out = std::string(kPlanHeader) + "\n";
    char line[128];
    int index = 0;
    for (const auto& item : m.items) {
        std::snprintf(line, sizeof(line), "%d %s %.7f %.7f %.1f\n", index, to_string(item.kind),
                      item.geo.lat, item.geo.lon, item.alt_m);
        out += line;
        ++index;
    }
    std::snprintf(line, sizeof(line), "LENGTH_KM %.3f\n", m.length_m / 1000.0);
    out += line;
    return out;
}

bool looks_like_plan(const std::string& text) {
    return text.rfind(kPlanHeader, 0) == 0;
}

PlanFile load_plan(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty() || lines[0] != kPlanHeader) {
        throw ParseError("plan file line 1: expected header '" + std::string(kPlanHeader) + "'");
    }
    PlanFile plan;
    bool have_footer = false;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const int line_no = static_cast<int>(k) + 1;
        if (lines[k].empty()) continue;
        std::istringstream in(lines[k]);
        std::string first;
        in >> first;
        if (first == "LENGTH_KM") {
            if (!(in >> plan.length_km)) {
                throw ParseError("plan file line " + std::to_string(line_no) +
                                 ": malformed LENGTH_KM footer");
            }
            have_footer = true;
            continue;
        }
        if (have_footer) {
            throw ParseError("plan file line " + std::to_string(line_no) +
                             ": item after LENGTH_KM footer");
        }
        std::string kind;
        double lat = 0.0, lon = 0.0, alt = 0.0;
        int index = 0;
        try {
            index = std::stoi(first);
        } catch (const std::exception&) {
            throw ParseError("plan file line " + std::to_string(line_no) +
                             ": expected an item index, got '" + first + "'");
        }
        (void)index;
        if (!(in >> kind >> lat >> lon >> alt)) {
            throw ParseError("plan file line " + std::to_string(line_no) +
                             ": expected '<index> <kind> <lat> <lon> <alt>'");
        }
        plan.items.push_back(MissionItem{item_kind_from(kind, line_no), GeoPoint{lat, lon}, alt});
    }
    if (!have_footer) {
        throw ParseError("plan file: missing LENGTH_KM footer");
    }
    return plan;
}

Trajectory load_reference(const std::string& text) {
    if (looks_like_plan(text)) {
        const PlanFile plan = load_plan(text);
        Trajectory traj;
        for (const auto& item : plan.items) traj.points.push_back(item.geo);
        if (traj.points.empty()) {
            throw ParseError("plan file contains no items");
        }
        return traj;
    }
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) throw ParseError("reference file is empty");
    if (lines[0] != "lat,lon") {
        throw ParseError("reference file line 1: expected header 'lat,lon'");
    }
    Trajectory traj;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        if (lines[k].empty()) continue;
        const int line_no = static_cast<int>(k) + 1;
        double lat = 0.0, lon = 0.0;
        char comma = 0;
        std::istringstream in(lines[k]);
        if (!(in >> lat >> comma >> lon) || comma != ',') {
            throw ParseError("reference file line " + std::to_string(line_no) +
                             ": expected '<lat>,<lon>'");
        }
        traj.points.push_back(GeoPoint{lat, lon});
    }
    if (traj.points.empty()) throw ParseError("reference file has a header but no points");
    return traj;
}

void GenParams::validate() const {
    if (width_px < 10 * cell_size_px || height_px < 10 * cell_size_px) {
        throw ValidationError("generator extent must be at least 10 cells per side");
    }
    if (cell_size_px < 1) throw ValidationError("generator cell_size_px must be >= 1");
    if (n_targets < 0 || n_obstacles < 0) {
        throw ValidationError("generator counts must be >= 0");
    }
    if (!(min_obstacle_px > 0.0) || max_obstacle_px < min_obstacle_px) {
        throw ValidationError("generator obstacle size range is invalid");
    }
    if (disc_fraction < 0.0 || disc_fraction > 1.0) {
        throw ValidationError("generator disc_fraction must be in [0, 1]");
    }
    if (min_clearance_px < 0.0) {
        throw ValidationError("generator min_clearance_px must be >= 0");
    }
}

Scene generate_scene(const GenParams& p) {
    p.validate();
    constexpr double deg_to_rad = std::numbers::pi / 180.0;
    const SplitMix64 base(p.seed);

    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        SplitMix64 rng = base.split(attempt);

        Scene scene;
        scene.name = "gen-" + std::to_string(p.seed);
        scene.grid = GridSpec{p.cell_size_px, p.width_px, p.height_px};

        // Square-meter pixels: the y scale is the metric one, the x scale
        // compensates for the longitude shrink at the scene latitude.
        const double lat0 = rng.next_double(28.0, 46.0);
        const double lon0 = rng.next_double(-120.0, -75.0);
        const double mpp = rng.next_double(0.6, 1.2);
        scene.transform.origin_lat = lat0;
        scene.transform.origin_lon = lon0;
        scene.transform.deg_per_px_y = mpp / (kEarthRadiusM * deg_to_rad);
        const double center_lat = lat0 - 0.5 * p.height_px * scene.transform.deg_per_px_y;
        scene.transform.deg_per_px_x =
            mpp / (kEarthRadiusM * deg_to_rad * std::cos(center_lat * deg_to_rad));

        for (int k = 0; k < p.n_obstacles; ++k) {
            const double size = rng.next_double(p.min_obstacle_px, p.max_obstacle_px);
            const double half = size / 2.0;
            const PixelPoint center{rng.next_double(half, p.width_px - half),
                                    rng.next_double(half, p.height_px - half)};
            if (rng.next_double() < p.disc_fraction) {
                scene.obstacles.push_back(DiscObstacle{center, half});
            } else {
                const int nv = static_cast<int>(rng.next_int(4, 7));
                PolygonObstacle poly;
                for (int v = 0; v < nv; ++v) {
                    const double angle =
                        2.0 * std::numbers::pi * (v + 0.3 * rng.next_double()) / nv;
                    const double radius = half * (0.6 + 0.4 * rng.next_double());
                    poly.vertices.push_back(PixelPoint{center.x + radius * std::cos(angle),
                                                       center.y + radius * std::sin(angle)});
                }
                scene.obstacles.push_back(std::move(poly));
            }
        }

        // Home then targets, rejection-sampled clear of every obstacle.
        const double border = 8.0;
        bool placed_all = true;
        for (int k = 0; k <= p.n_targets && placed_all; ++k) {
            bool placed = false;
            for (int tries = 0; tries < 200; ++tries) {
                const PixelPoint cand{rng.next_double(border, p.width_px - border),
                                      rng.next_double(border, p.height_px - border)};
                bool clear = true;
                for (const auto& o : scene.obstacles) {
                    if (obstacle_clearance(cand, o) < p.min_clearance_px) {
                        clear = false;
                        break;
                    }
                }
                if (!clear) continue;
                if (k == 0) {
                    scene.home = cand;
                } else {
                    scene.targets.push_back(cand);
                }
                placed = true;
                break;
            }
            placed_all = placed;
        }
        if (!placed_all) continue;

        try {
            plan_hybrid(scene); // feasibility gate
        } catch (const Error&) {
            continue;
        }
        return scene;
    }
    throw Error("scene generation failed: no feasible layout after 100 attempts (seed " +
                std::to_string(p.seed) + ")");
}

} // namespace uavplan
