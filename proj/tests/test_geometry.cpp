#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "tilebalance/catalog.hpp"
#include "tilebalance/error.hpp"
#include "tilebalance/geometry.hpp"
#include "tilebalance/periodic_map.hpp"

using namespace tilebalance;

namespace {

PeriodicTiling catalog_tiling(const std::string& name) { return build_periodic_tiling(load_template(name)); }

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const TilingError& e) {
        return e.code();
    }
    ADD_FAILURE() << "no TilingError thrown";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Geometry, SquarePatchThreeByThree) {
    const PeriodicTiling sq = catalog_tiling("square");
    const Patch p = patch(sq, {{0.5, 0.5}, 1.2});
    EXPECT_EQ(p.f1.size(), 1u);
    EXPECT_EQ(p.f2.size(), 8u);
    EXPECT_EQ(p.f3.size(), 0u);
    const PatchCensus c = patch_census(p, sq);
    EXPECT_EQ(c.vertices, 16);
    EXPECT_EQ(c.edges, 24);
    EXPECT_EQ(c.tiles, 9);
    EXPECT_EQ(c.euler(), 1);
    EXPECT_EQ(c.vertices_by_valence.at(4), 16);
}

TEST(Geometry, SquareCircumradius) {
    EXPECT_NEAR(circumradius_bound(catalog_tiling("square")), std::sqrt(0.5), 1e-12);
    const BoundsReport b = validate_geometry(catalog_tiling("square"));
    EXPECT_NEAR(b.inradius, 0.5, 1e-12);
}

TEST(Geometry, RadiusLimits) {
    const PeriodicTiling sq = catalog_tiling("square");
    EXPECT_EQ(code_of([&] { patch(sq, {{0.5, 0.5}, 0.5}); }), ErrorCode::RadiusTooSmall);
    EXPECT_EQ(code_of([&] { embed(sq, {{0.5, 0.5}, 0.5}); }), ErrorCode::RegionTooSmall);
    EXPECT_EQ(code_of([&] { embed(sq, {{0.5, 0.5}, -1.0}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { patch(sq, {{0.5, 0.5}, NAN}); }), ErrorCode::RadiusTooSmall);
}

TEST(Geometry, PointQueryFindsCoveringTiles) {
    const PeriodicTiling sq = catalog_tiling("square");
    EXPECT_EQ(embed(sq, {{0.5, 0.5}, 0.0}).size(), 1u);
    EXPECT_EQ(embed(sq, {{1.0, 1.0}, 0.0}).size(), 4u);
    const auto hits = embed(sq, {{2.5, -0.5}, 0.0});
    ASSERT_EQ(hits.size(), 1u);
    EXPECT_EQ(hits[0].shift, (Shift{2, -1}));
}

TEST(Geometry, EmbedIsSortedAndCoversDisk) {
    const PeriodicTiling t = catalog_tiling("pentagon-type-10");
    const double U = circumradius_bound(t);
    const auto tiles = embed(t, {{0.3, 0.2}, 3 * U});
    ASSERT_FALSE(tiles.empty());
    for (std::size_t i = 1; i < tiles.size(); ++i) {
        EXPECT_TRUE(std::tie(tiles[i - 1].shift, tiles[i - 1].tile) < std::tie(tiles[i].shift, tiles[i].tile));
    }
    double area = 0.0;
    for (const auto& pt : tiles) area += signed_area(pt.polygon);
    EXPECT_GT(area, M_PI * 9 * U * U);
}

TEST(Geometry, PartsAreDisjointAndClassifiedByDistance) {
    for (const std::string& name : catalog_names()) {
        SCOPED_TRACE(name);
        const PeriodicTiling t = catalog_tiling(name);
        const double U = circumradius_bound(t);
        const Vec2 m = default_center(t);
        const Patch p = patch(t, {m, 4 * U});
        std::set<std::tuple<std::size_t, std::int64_t, std::int64_t>> seen;
        for (const auto& pt : p.all_tiles()) EXPECT_TRUE(seen.insert({pt.tile, pt.shift.m, pt.shift.n}).second);
        for (const auto& pt : p.f1) {
            for (Vec2 q : pt.polygon) EXPECT_LT(distance(q, m), 4 * U);
        }
        for (const auto& pt : p.f3) {
            for (Vec2 q : pt.polygon) EXPECT_GT(distance(q, m), 4 * U);
        }
        EXPECT_EQ(patch_census(p, t).euler(), 1);
    }
}

TEST(Geometry, EveryCatalogTilingHasBoundsAndNoOverlap) {
    for (const std::string& name : catalog_names()) {
        SCOPED_TRACE(name);
        const PeriodicTiling t = catalog_tiling(name);
        const BoundsReport b = validate_geometry(t);
        EXPECT_GT(b.inradius, 0.0);
        EXPECT_GE(b.circumradius, b.inradius);
        EXPECT_NEAR(b.circumradius, circumradius_bound(t), 1e-12);
    }
}

TEST(Geometry, OversizedTileRejected) {
    TilingTemplate wide;
    wide.name = "wide";
    wide.lattice = {{1, 0}, {0, 1}};
    wide.vertices = {{0, 0}, {0.5, 0.0}};
    wide.tiles = {{{0, {0, 0}}, {1, {0, 0}}, {0, {1, 0}}, {0, {1, 1}}, {1, {0, 1}}, {0, {0, 1}}},
                  {{1, {0, 0}}, {1, {1, 0}}, {1, {1, 1}}, {1, {0, 1}}}};
    EXPECT_ANY_THROW(build_periodic_tiling(wide));
}

TEST(Geometry, PentagonType14Bounds) {
    const BoundsReport b = validate_geometry(catalog_tiling("pentagon-type-14"));
    EXPECT_TRUE(std::isfinite(b.circumradius));
    EXPECT_GT(b.inradius, 0.0);
}

TEST(Geometry, RatioSeriesApproachesLimit) {
    const PeriodicTiling t = catalog_tiling("regular-hexagon");
    const double U = circumradius_bound(t);
    const RatioSeries s = ratio_series(t, default_center(t), {5 * U, 10 * U, 20 * U});
    ASSERT_EQ(s.points.size(), 3u);
    const double limit = 2.0;
    double prev = 1e9;
    for (const auto& pt : s.points) {
        const double err = std::abs(pt.vertices_per_tile.to_double() - limit);
        EXPECT_LE(err, prev);
        EXPECT_LE(err * pt.radius, s.envelope + 1e-12);
        prev = err;
    }
    EXPECT_EQ(code_of([&] { ratio_series(t, {}, {3 * U, 2 * U}); }), ErrorCode::InvalidArgument);
}

TEST(Geometry, OracleAgreesOnSquareAndHexagon) {
    for (const char* name : {"square", "regular-hexagon"}) {
        const PeriodicTiling t = catalog_tiling(name);
        const double U = circumradius_bound(t);
        for (double k : {5.0, 10.0}) {
            SCOPED_TRACE(std::string(name) + " r=" + std::to_string(k) + "U");
            const Vec2 m = default_center(t) + Vec2{0.13, 0.07};
            EXPECT_EQ(patch_census(patch(t, {m, k * U}), t), oracle::census(t, m, k * U));
        }
    }
}

TEST(Geometry, OracleAgreesOnNonEdgeToEdgePentagon) {
    const PeriodicTiling t = catalog_tiling("pentagon-type-10");
    const double U = circumradius_bound(t);
    const Vec2 m = default_center(t);
    EXPECT_EQ(patch_census(patch(t, {m, 3 * U}), t), oracle::census(t, m, 3 * U));
}
