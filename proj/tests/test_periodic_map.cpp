#include <gtest/gtest.h>

#include <cmath>

#include "tilebalance/error.hpp"
#include "tilebalance/periodic_map.hpp"

using namespace tilebalance;

namespace {

TilingTemplate square_template() {
    TilingTemplate t;
    t.name = "square";
    t.lattice = {{1, 0}, {0, 1}};
    t.vertices = {{0, 0}};
    t.tiles = {{{0, {0, 0}}, {0, {1, 0}}, {0, {1, 1}}, {0, {0, 1}}}};
    return t;
}

TilingTemplate hexagon_template() {
    const double s = std::sqrt(3.0);
    TilingTemplate t;
    t.name = "regular-hexagon";
    t.lattice = {{s, 0}, {s / 2, 1.5}};
    // Hexagon centered at origin with pointy top; corners at angles 30 + 60k.
    t.vertices = {{s / 2, 0.5}, {0, 1}};
    // corners: (s/2,.5)=v0, (0,1)=v1, (-s/2,.5)=v0-t1, (-s/2,-.5)=v1-t2, (0,-1)=v0-t2, (s/2,-.5)=v1+t1-t2
    t.tiles = {{{0, {0, 0}}, {1, {0, 0}}, {0, {-1, 0}}, {1, {0, -1}}, {0, {0, -1}}, {1, {1, -1}}}};
    return t;
}

}  // namespace

TEST(PeriodicMap, SquareQuotient) {
    const PeriodicTiling t = build_periodic_tiling(square_template());
    const QuotientCensus c = quotient_counts(t);
    EXPECT_EQ(c.vertices, 1);
    EXPECT_EQ(c.edges, 2);
    EXPECT_EQ(c.tiles, 1);
    EXPECT_EQ(c.tiles_by_adjacents.at(4), 1);
    EXPECT_EQ(c.vertices_by_valence.at(4), 1);
    EXPECT_TRUE(is_edge_to_edge(t));
    EXPECT_EQ(adjacency_profile(t), std::vector<int>{4});
    const LimitStats s = limit_stats(t);
    EXPECT_EQ(s.t.at(4), Rational(1));
    EXPECT_EQ(s.v.at(4), Rational(1));
    EXPECT_EQ(s.edges_per_tile, Rational(2));
    EXPECT_EQ(s.w.at(4), Rational(1));
    EXPECT_EQ(s.corners, 4);
}

TEST(PeriodicMap, HexagonQuotient) {
    const PeriodicTiling t = build_periodic_tiling(hexagon_template());
    const QuotientCensus c = quotient_counts(t);
    EXPECT_EQ(c.vertices, 2);
    EXPECT_EQ(c.edges, 3);
    EXPECT_EQ(c.tiles, 1);
    EXPECT_EQ(c.tiles_by_adjacents.at(6), 1);
    EXPECT_EQ(c.vertices_by_valence.at(3), 2);
}

TEST(PeriodicMap, ClockwiseInputIsReoriented) {
    TilingTemplate tmpl = square_template();
    std::reverse(tmpl.tiles[0].begin(), tmpl.tiles[0].end());
    const PeriodicTiling t = build_periodic_tiling(tmpl);
    EXPECT_GT(signed_area(t.polygon(0)), 0.0);
}

TEST(PeriodicMap, RepresentativesMovedIntoDomain) {
    TilingTemplate tmpl = square_template();
    tmpl.vertices = {{3, -2}};
    const PeriodicTiling t = build_periodic_tiling(tmpl);
    EXPECT_DOUBLE_EQ(t.vertices()[0].x, 0.0);
    EXPECT_DOUBLE_EQ(t.vertices()[0].y, 0.0);
    EXPECT_DOUBLE_EQ(t.polygon(0)[0].x, 3.0);
}

namespace {

void expect_code(const TilingTemplate& tmpl, ErrorCode code) {
    try {
        build_periodic_tiling(tmpl);
        FAIL() << "expected " << to_string(code);
    } catch (const TilingError& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

}  // namespace

TEST(PeriodicMap, DegenerateLattice) {
    TilingTemplate tmpl = square_template();
    tmpl.lattice.t2 = tmpl.lattice.t1;
    expect_code(tmpl, ErrorCode::DegenerateLattice);
}

TEST(PeriodicMap, BadVertexReference) {
    TilingTemplate tmpl = square_template();
    tmpl.tiles[0][2].index = 99;
    expect_code(tmpl, ErrorCode::SchemaError);
}

TEST(PeriodicMap, UnmatchedEdge) {
    TilingTemplate tmpl = square_template();
    // Two squares side by side in a 2x1 domain, but the second points at the wrong row.
    tmpl.lattice = {{2, 0}, {0, 1}};
    tmpl.vertices = {{0, 0}, {1, 0}};
    tmpl.tiles = {{{0, {0, 0}}, {1, {0, 0}}, {1, {0, 1}}, {0, {0, 1}}},
                  {{1, {0, 0}}, {0, {1, 0}}, {0, {1, 1}}, {1, {0, 2}}}};
    EXPECT_THROW(build_periodic_tiling(tmpl), TilingError);
}

TEST(PeriodicMap, AreaMismatchOnOversizedLattice) {
    TilingTemplate tmpl = square_template();
    tmpl.vertices = {{0, 0}, {1, 0}};
    tmpl.lattice = {{2, 0}, {0, 1}};
    // Only one square in a 2x1 domain: edges cannot match.
    tmpl.tiles = {{{0, {0, 0}}, {1, {0, 0}}, {1, {0, 1}}, {0, {0, 1}}}};
    EXPECT_THROW(build_periodic_tiling(tmpl), TilingError);
}

TEST(PeriodicMap, FlatVertexDetectedAndCrossChecked) {
    // Running-bond bricks 2x1, offset by 1 per row: each brick has 6 boundary vertices.
    TilingTemplate tmpl;
    tmpl.name = "bricks";
    tmpl.lattice = {{2, 0}, {1, 1}};
    tmpl.vertices = {{0, 0}, {1, 0}};
    // Brick [0,2]x[0,1]; bottom has (1,0) flat, top has (1,1) = v0 + t2 flat, (2,1)= v1+t2 ... 
    tmpl.tiles = {{{0, {0, 0}}, {1, {0, 0}}, {0, {1, 0}}, {1, {0, 1}}, {0, {0, 1}}, {1, {-1, 1}}}};
    const PeriodicTiling t = build_periodic_tiling(tmpl);
    EXPECT_FALSE(is_edge_to_edge(t));
    EXPECT_EQ(t.corner_count(0), 4);
    const LimitStats s = limit_stats(t);
    EXPECT_EQ(s.t.at(6), Rational(1));
    EXPECT_EQ(s.v.at(3), Rational(2));

    tmpl.flat = std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}};
    expect_code(tmpl, ErrorCode::FlatMarkMismatch);
}

TEST(PeriodicMap, EnlargedDomainKeepsStats) {
    const PeriodicTiling t = build_periodic_tiling(hexagon_template());
    const PeriodicTiling big = build_periodic_tiling(enlarge_domain(t, 2, 3));
    EXPECT_EQ(big.tile_count(), 6u);
    EXPECT_EQ(limit_stats(big), limit_stats(t));
}
