#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "tilebalance/lattice.hpp"
#include "tilebalance/periodic_map.hpp"
#include "tilebalance/rational.hpp"
#include "tilebalance/vec2.hpp"

namespace tilebalance {

/// Closed disk D(r, M).
struct Disk {
    Vec2 center;
    double radius = 0.0;
};

/// A lattice translate of a fundamental tile, instantiated in the plane.
struct PlacedTile {
    std::size_t tile = 0;
    Shift shift;
    Polygon polygon;  // boundary including flat vertices, counterclockwise
};

/// The tile set A(r, M) = F1 u F2 u F3, each part sorted by (m, n, tile).
struct Patch {
    Disk disk;
    std::vector<PlacedTile> f1;  // inside the disk
    std::vector<PlacedTile> f2;  // meeting the boundary circle, not inside
    std::vector<PlacedTile> f3;  // enclosed by the others

    [[nodiscard]] std::vector<PlacedTile> all_tiles() const;
    [[nodiscard]] std::size_t size() const { return f1.size() + f2.size() + f3.size(); }
};

struct PatchCensus {
    std::int64_t vertices = 0;
    std::int64_t edges = 0;
    std::int64_t tiles = 0;
    std::map<int, std::int64_t> tiles_by_adjacents;   // h -> t_h(r, M), h taken in the whole tiling
    std::map<int, std::int64_t> vertices_by_valence;  // j -> v_j(r, M), valence taken in the whole tiling

    [[nodiscard]] std::int64_t euler() const { return vertices - edges + tiles; }
    friend bool operator==(const PatchCensus&, const PatchCensus&) = default;
};

struct BoundsReport {
    double inradius = 0.0;       // u
    double circumradius = 0.0;   // U
};

struct RatioPoint {
    double radius = 0.0;
    PatchCensus census;
    Rational vertices_per_tile;
    Rational edges_per_tile;
    std::map<int, Rational> t;
    std::map<int, Rational> v;
};

struct RatioSeries {
    std::vector<RatioPoint> points;
    /// Smallest C with |v(r,M)/t(r,M) - v| <= C / r over every radius in the series.
    double envelope = 0.0;
};

/// Largest minimum-enclosing-circle radius over the fundamental tiles (U).
double circumradius_bound(const PeriodicTiling& tiling);

/// Every translate of every fundamental tile meeting the closed region, sorted by (m, n, tile).
///
/// A zero radius is a point query. Throws RegionTooSmall for 0 < r < U.
std::vector<PlacedTile> embed(const PeriodicTiling& tiling, const Disk& region);

/// Throws RadiusTooSmall when r < U.
Patch patch(const PeriodicTiling& tiling, const Disk& disk);

/// Counts the planar map formed by the patch. Throws EulerViolation if v - e + t != 1.
PatchCensus patch_census(const Patch& patch, const PeriodicTiling& tiling);

/// Empirical ratios at each radius (non-decreasing), compared against limit_stats.
RatioSeries ratio_series(const PeriodicTiling& tiling, Vec2 center, const std::vector<double>& radii);

/// Largest relative deviation of the point's v/t, e/t, t_h/t and v_j/t from the limits.
/// A ratio whose limit is zero contributes its absolute value.
double max_relative_error(const RatioPoint& point, const LimitStats& limit);

/// Computes u and U and checks placed tiles in a 3x3 block of domains for overlaps.
///
/// Throws OverlapDetected or InscribedRadiusZero.
BoundsReport validate_geometry(const PeriodicTiling& tiling);

/// Radius of the smallest circle containing `points`.
double min_enclosing_radius(std::span<const Vec2> points);
/// Radius of the largest circle inside the convex polygon `corners` (counterclockwise).
double max_inscribed_radius(std::span<const Vec2> corners);
/// Default patch center: centroid of fundamental tile 0.
Vec2 default_center(const PeriodicTiling& tiling);

}  // namespace tilebalance
