#pragma once

#include "uavplan/metrics.hpp"
#include "uavplan/planner.hpp"

#include <cstdint>
#include <string>

namespace uavplan {

/// Current scene document schema. Documents with any other version are
/// rejected, as are unknown fields at every level.
inline constexpr int kSceneSchemaVersion = 1;

/// Parses and validates a scene document (JSON). Point obstacles are
/// expanded to discs of the document's obstacle_default_radius_px
/// (default 15). Throws ParseError / ValidationError with field-level
/// diagnostics.
Scene load_scene(const std::string& text);

/// Canonical scene document for the given scene; load_scene(save_scene(s))
/// is semantically identical to s.
std::string save_scene(const Scene& scene);

/// Line-oriented plan file, bit-exact:
///   UAVVLPA PLAN 1
///   <index> <kind> <lat:.7f> <lon:.7f> <alt:.1f>
///   ...
///   LENGTH_KM <length:.3f>
std::string save_mission(const Mission& m);

struct PlanFile {
    std::vector<MissionItem> items;
    double length_km = 0.0;
};

/// Parses a plan file produced by save_mission. Throws ParseError with the
/// offending line number.
PlanFile load_plan(const std::string& text);

/// True when the text starts with the plan-file header.
bool looks_like_plan(const std::string& text);

/// Reference trajectory: either a plan file (all its geo points, in file
/// order) or a bare CSV with header `lat,lon`.
Trajectory load_reference(const std::string& text);

/// Parameters of the seeded synthetic-scene generator.
struct GenParams {
    std::uint64_t seed = 0;
    int width_px = 1000;
    int height_px = 1000;
    int n_targets = 8;
    int n_obstacles = 6;
    double disc_fraction = 0.5;      // remaining obstacles are polygons
    double min_obstacle_px = 30.0;   // footprint diameter range
    double max_obstacle_px = 90.0;
    double min_clearance_px = 12.0;  // home/target distance from obstacles
    int cell_size_px = 5;

    void validate() const;
};

/// Deterministic synthetic scene (SplitMix64 streams, identical on every
/// platform). Home and targets are clear of obstacles, and the scene is
/// guaranteed hybrid-feasible; regenerates internally up to 100 times and
/// throws Error if no feasible layout is found.
Scene generate_scene(const GenParams& p);

} // namespace uavplan
