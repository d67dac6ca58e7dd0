#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "uavplan/errors.hpp"
#include "uavplan/scene_io.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>

using namespace uavplan;

namespace {

const char* kMinimalScene = R"({
  "schema_version": 1,
  "name": "minimal",
  "transform": {"origin_lat": 40.0, "origin_lon": -100.0,
                "deg_per_px_x": 1.2e-5, "deg_per_px_y": 0.9e-5},
  "grid": {"cell_size_px": 5, "width_px": 200, "height_px": 200},
  "home": {"x": 100.0, "y": 100.0}
})";

std::string scene_with(const std::string& extra_top_level) {
    std::string doc = kMinimalScene;
    doc.insert(doc.rfind('}'), "," + extra_top_level + "\n");
    return doc;
}

} // namespace

TEST_CASE("minimal scene document loads") {
    const Scene scene = load_scene(kMinimalScene);
    CHECK(scene.name == "minimal");
    CHECK(scene.targets.empty());
    CHECK(scene.obstacles.empty());
    CHECK(scene.grid.cell_size_px == 5);
    CHECK(scene.params.altitude_m == 100.0);
    CHECK_FALSE(scene.params.snap_endpoints);
}

TEST_CASE("invalid JSON and schema violations are rejected") {
    CHECK_THROWS_AS(load_scene("not json"), ParseError);
    CHECK_THROWS_WITH_AS(load_scene(scene_with(R"("bogus": 1)")),
                         doctest::Contains("unknown field 'bogus'"), ParseError);
    CHECK_THROWS_WITH_AS(load_scene(scene_with(R"("targets": [{"x": 1, "y": 2, "z": 3}])")),
                         doctest::Contains("unknown field 'z'"), ParseError);

    std::string wrong_version = kMinimalScene;
    wrong_version.replace(wrong_version.find("\"schema_version\": 1"),
                          std::string("\"schema_version\": 1").size(), "\"schema_version\": 2");
    CHECK_THROWS_WITH_AS(load_scene(wrong_version), doctest::Contains("unsupported version"),
                         ParseError);

    CHECK_THROWS_WITH_AS(load_scene(scene_with(R"("targets": [{"x": 250.0, "y": 10.0}])")),
                         doctest::Contains("target 0"), ValidationError);
    CHECK_THROWS_WITH_AS(
        load_scene(scene_with(
            R"("obstacles": [{"kind": "polygon",
                "vertices": [{"x":0,"y":0},{"x":50,"y":50},{"x":50,"y":0},{"x":0,"y":50}]}])")),
        doctest::Contains("self-intersecting"), ValidationError);
    CHECK_THROWS_WITH_AS(load_scene(scene_with(R"("obstacles": [{"kind": "blob"}])")),
                         doctest::Contains("unknown obstacle kind"), ParseError);
}

TEST_CASE("point obstacles expand to discs of the default radius") {
    const Scene scene = load_scene(
        scene_with(R"("obstacles": [{"kind": "point", "center": {"x": 50.0, "y": 60.0}}])"));
    REQUIRE(scene.obstacles.size() == 1);
    const auto& disc = std::get<DiscObstacle>(scene.obstacles[0]);
    CHECK(disc.radius_px == 15.0);
    CHECK(disc.center.x == 50.0);

    const Scene custom = load_scene(scene_with(
        R"("obstacle_default_radius_px": 7.5,
           "obstacles": [{"kind": "point", "center": {"x": 50.0, "y": 60.0}}])"));
    CHECK(std::get<DiscObstacle>(custom.obstacles[0]).radius_px == 7.5);
}

TEST_CASE("scene save/load round trip is semantically identical") {
    GenParams gp;
    gp.seed = 9;
    gp.n_targets = 5;
    gp.n_obstacles = 4;
    const Scene scene = generate_scene(gp);
    const Scene back = load_scene(save_scene(scene));

    CHECK(back.name == scene.name);
    CHECK(back.transform.origin_lat == scene.transform.origin_lat);
    CHECK(back.transform.deg_per_px_x == scene.transform.deg_per_px_x);
    CHECK(back.grid.width_px == scene.grid.width_px);
    CHECK(back.home.x == scene.home.x);
    REQUIRE(back.targets.size() == scene.targets.size());
    for (std::size_t k = 0; k < scene.targets.size(); ++k) {
        CHECK(back.targets[k].x == scene.targets[k].x);
        CHECK(back.targets[k].y == scene.targets[k].y);
    }
    REQUIRE(back.obstacles.size() == scene.obstacles.size());
    for (std::size_t k = 0; k < scene.obstacles.size(); ++k) {
        CHECK(back.obstacles[k].index() == scene.obstacles[k].index());
    }
    CHECK(back.params.altitude_m == scene.params.altitude_m);

    // a second round trip is byte-stable
    CHECK(save_scene(back) == save_scene(scene));
}

TEST_CASE("save_mission emits the exact plan format") {
    const Scene scene = test_support::make_scene(200, 200, 5, PixelPoint{100.0, 100.0}, {}, {});
    const Mission m = plan_tsp_euclid(scene);
    const std::string text = save_mission(m);

    // empty-target mission: header, TAKEOFF, RTL, footer
    REQUIRE(text.rfind("UAVVLPA PLAN 1\n", 0) == 0);
    CHECK(text.find("0 TAKEOFF ") != std::string::npos);
    CHECK(text.find("1 RTL ") != std::string::npos);
    CHECK(text.find("LENGTH_KM 0.000\n") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
}

TEST_CASE("plan file round trip preserves geo points to 1e-7 degrees") {
    GenParams gp;
    gp.seed = 10;
    gp.n_targets = 6;
    gp.n_obstacles = 5;
    const Scene scene = generate_scene(gp);
    const Mission m = plan_hybrid(scene).mission;
    const PlanFile parsed = load_plan(save_mission(m));
    REQUIRE(parsed.items.size() == m.items.size());
    for (std::size_t k = 0; k < m.items.size(); ++k) {
        CHECK(parsed.items[k].kind == m.items[k].kind);
        CHECK(std::abs(parsed.items[k].geo.lat - m.items[k].geo.lat) <= 1e-7);
        CHECK(std::abs(parsed.items[k].geo.lon - m.items[k].geo.lon) <= 1e-7);
    }
    CHECK(parsed.length_km == doctest::Approx(m.length_m / 1000.0).epsilon(1e-3));
}

TEST_CASE("plan parsing reports the offending line") {
    CHECK_THROWS_WITH_AS(load_plan("WRONG HEADER\n"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(
        load_plan("UAVVLPA PLAN 1\n0 TAKEOFF 1.0 2.0 100.0\nbroken line here\nLENGTH_KM 0.0\n"),
        doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_WITH_AS(
        load_plan("UAVVLPA PLAN 1\n0 HOVER 1.0 2.0 100.0\nLENGTH_KM 0.0\n"),
        doctest::Contains("unknown item kind"), ParseError);
    CHECK_THROWS_WITH_AS(load_plan("UAVVLPA PLAN 1\n0 TAKEOFF 1.0 2.0 100.0\n"),
                         doctest::Contains("LENGTH_KM"), ParseError);
}

TEST_CASE("load_reference") {
    SUBCASE("plan files yield their geo sequence") {
        const Scene scene =
            test_support::make_scene(200, 200, 5, PixelPoint{50.0, 50.0},
                                     {PixelPoint{150.0, 150.0}}, {});
        const Mission m = plan_tsp_euclid(scene);
        const Trajectory traj = load_reference(save_mission(m));
        REQUIRE(traj.points.size() == m.items.size());
        CHECK(std::abs(traj.points[0].lat - m.items[0].geo.lat) <= 1e-7);
    }

    SUBCASE("bare CSV") {
        const Trajectory traj = load_reference("lat,lon\n1.5,2.5\n3.5,4.5\n5.5,6.5\n");
        REQUIRE(traj.points.size() == 3);
        CHECK(traj.points[1].lat == 3.5);
        CHECK(traj.points[2].lon == 6.5);
    }

    SUBCASE("errors carry line numbers") {
        CHECK_THROWS_AS(load_reference(""), ParseError);
        CHECK_THROWS_WITH_AS(load_reference("lat,lon\n1.0,2.0\noops\n"),
                             doctest::Contains("line 3"), ParseError);
        CHECK_THROWS_WITH_AS(load_reference("lat,lon\n"), doctest::Contains("no points"),
                             ParseError);
    }
}

TEST_CASE("generator determinism and feasibility") {
    GenParams gp;
    gp.seed = 1234;

    SUBCASE("same seed produces byte-identical documents") {
        CHECK(save_scene(generate_scene(gp)) == save_scene(generate_scene(gp)));
    }

    SUBCASE("different seeds differ") {
        GenParams other = gp;
        other.seed = 1235;
        CHECK(save_scene(generate_scene(gp)) != save_scene(generate_scene(other)));
    }

    SUBCASE("no obstacles means an all-traversable grid") {
        GenParams free = gp;
        free.n_obstacles = 0;
        const Scene scene = generate_scene(free);
        const OccupancyGrid grid = build_grid(scene.grid, scene.obstacles, 0);
        CHECK(grid.blocked_count() == 0);
    }

    SUBCASE("generated scenes are hybrid-feasible with clear endpoints") {
        for (std::uint64_t seed : {3ULL, 4ULL, 5ULL}) {
            GenParams p;
            p.seed = seed;
            const Scene scene = generate_scene(p);
            const OccupancyGrid grid = build_grid(scene.grid, scene.obstacles, 0);
            CHECK(is_traversable(grid, cell_of(scene.grid, scene.home)));
            for (const auto& t : scene.targets) {
                CHECK(is_traversable(grid, cell_of(scene.grid, t)));
            }
            CHECK_NOTHROW(plan_hybrid(scene));
        }
    }

    SUBCASE("invalid parameters are rejected") {
        GenParams bad = gp;
        bad.n_targets = -1;
        CHECK_THROWS_AS(generate_scene(bad), ValidationError);
        bad = gp;
        bad.max_obstacle_px = bad.min_obstacle_px - 1.0;
        CHECK_THROWS_AS(generate_scene(bad), ValidationError);
    }
}
