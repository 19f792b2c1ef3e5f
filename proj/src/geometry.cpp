#include "tilebalance/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>

#include "tilebalance/error.hpp"

namespace tilebalance {

namespace {

using PlacedKey = std::tuple<std::size_t, std::int64_t, std::int64_t>;

bool placed_less(const PlacedTile& a, const PlacedTile& b) {
    return std::tie(a.shift, a.tile) < std::tie(b.shift, b.tile);
}

double max_distance(std::span<const Vec2> poly, Vec2 p) {
    double d = 0.0;
    for (Vec2 q : poly) d = std::max(d, distance(p, q));
    return d;
}

// Distance from p to a convex counterclockwise polygon (zero inside).
double polygon_distance(std::span<const Vec2> poly, Vec2 p) {
    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % n];
        if (cross(b - a, p - a) < 0.0) inside = false;
        best = std::min(best, point_segment_distance(p, a, b));
    }
    return inside ? 0.0 : best;
}

bool circle_contains_all(Vec2 c, double r, std::span<const Vec2> pts) {
    const double slack = 1e-12 * std::max(1.0, r);
    return std::all_of(pts.begin(), pts.end(), [&](Vec2 p) { return distance(c, p) <= r + slack; });
}

// Projection overlap of two convex polygons along the normals of `edges_of`.
double min_axis_overlap(std::span<const Vec2> edges_of, std::span<const Vec2> a, std::span<const Vec2> b) {
    double least = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0, n = edges_of.size(); i < n; ++i) {
        const Vec2 e = edges_of[(i + 1) % n] - edges_of[i];
        const double len = norm(e);
        if (len == 0.0) continue;
        const Vec2 axis{-e.y / len, e.x / len};
        double a0 = std::numeric_limits<double>::infinity(), a1 = -a0, b0 = a0, b1 = -a0;
        for (Vec2 p : a) {
            a0 = std::min(a0, dot(axis, p));
            a1 = std::max(a1, dot(axis, p));
        }
        for (Vec2 p : b) {
            b0 = std::min(b0, dot(axis, p));
            b1 = std::max(b1, dot(axis, p));
        }
        least = std::min(least, std::min(a1, b1) - std::max(a0, b0));
    }
    return least;
}

}  // namespace

std::vector<PlacedTile> Patch::all_tiles() const {
    std::vector<PlacedTile> out;
    out.reserve(size());
    out.insert(out.end(), f1.begin(), f1.end());
    out.insert(out.end(), f2.begin(), f2.end());
    out.insert(out.end(), f3.begin(), f3.end());
    std::sort(out.begin(), out.end(), placed_less);
    return out;
}

double min_enclosing_radius(std::span<const Vec2> points) {
    if (points.empty()) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec2 c = 0.5 * (points[i] + points[j]);
            const double r = 0.5 * distance(points[i], points[j]);
            if (r < best && circle_contains_all(c, r, points)) best = r;
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vec2 a = points[i], b = points[j], d = points[k];
                const double den = 2.0 * cross(b - a, d - a);
                if (std::abs(den) < 1e-15) continue;
                const double bb = dot(b - a, b - a), dd = dot(d - a, d - a);
                const Vec2 off{((d - a).y * bb - (b - a).y * dd) / den, ((b - a).x * dd - (d - a).x * bb) / den};
                const double rr = norm(off);
                if (rr < best && circle_contains_all(a + off, rr, points)) best = rr;
            }
        }
    }
    return n == 1 ? 0.0 : best;
}

double max_inscribed_radius(std::span<const Vec2> corners) {
    // The Chebyshev center of a convex polygon is equidistant from three of its side lines.
    const std::size_t n = corners.size();
    std::vector<Vec2> normals(n);
    std::vector<double> offsets(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e = corners[(i + 1) % n] - corners[i];
        const double len = norm(e);
        normals[i] = {-e.y / len, e.x / len};  // inward for counterclockwise order
        offsets[i] = dot(normals[i], corners[i]);
    }
    auto slack = [&](Vec2 p) {
        double s = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) s = std::min(s, dot(normals[i], p) - offsets[i]);
        return s;
    };
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                // n_q . p - d = o_q for q in {i, j, k}
                const double m[3][3] = {{normals[i].x, normals[i].y, -1.0},
                                        {normals[j].x, normals[j].y, -1.0},
                                        {normals[k].x, normals[k].y, -1.0}};
                const double rhs[3] = {offsets[i], offsets[j], offsets[k]};
                const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
                if (std::abs(det) < 1e-14) continue;
                auto solve_col = [&](int col) {
                    double a[3][3];
                    for (int r = 0; r < 3; ++r) {
                        for (int c = 0; c < 3; ++c) a[r][c] = c == col ? rhs[r] : m[r][c];
                    }
                    return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                            a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                            a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])) /
                           det;
                };
                const Vec2 p{solve_col(0), solve_col(1)};
                const double d = solve_col(2);
                if (d > best && slack(p) >= d - 1e-12 * std::max(1.0, d)) best = d;
            }
        }
    }
    return best;
}

double circumradius_bound(const PeriodicTiling& tiling) {
    double U = 0.0;
    for (std::size_t i = 0; i < tiling.tile_count(); ++i) {
        U = std::max(U, min_enclosing_radius(tiling.corners(i)));
    }
    return U;
}

Vec2 default_center(const PeriodicTiling& tiling) { return centroid(tiling.polygon(0)); }

std::vector<PlacedTile> embed(const PeriodicTiling& tiling, const Disk& region) {
    const double r = region.radius;
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw TilingError(ErrorCode::InvalidArgument, "region radius must be a finite non-negative length");
    }
    const double U = circumradius_bound(tiling);
    if (r > 0.0 && r < U) {
        std::ostringstream os;
        os.precision(9);
        os << std::fixed << "region radius " << r << " is below the tile circumradius bound U = " << U;
        throw TilingError(ErrorCode::RegionTooSmall, os.str());
    }
    const Lattice& lat = tiling.lattice();
    const double det = std::abs(lat.det());
    const double tol = 1e-9 * std::max(r, U);
    std::vector<PlacedTile> out;
    for (std::size_t i = 0; i < tiling.tile_count(); ++i) {
        const Polygon base = tiling.polygon(i);
        const Vec2 c = centroid(base);
        const double reach = r + max_distance(base, c) + tol;
        const Vec2 f = lat.to_basis(region.center - c);
        const double dm = reach * norm(lat.t2) / det + 1.0;
        const double dn = reach * norm(lat.t1) / det + 1.0;
        for (auto m = static_cast<std::int64_t>(std::floor(f.x - dm)); m <= static_cast<std::int64_t>(std::ceil(f.x + dm)); ++m) {
            for (auto n = static_cast<std::int64_t>(std::floor(f.y - dn)); n <= static_cast<std::int64_t>(std::ceil(f.y + dn)); ++n) {
                const Vec2 off = lat.offset({m, n});
                if (distance(c + off, region.center) > reach) continue;
                Polygon poly = base;
                for (Vec2& p : poly) p += off;
                if (polygon_distance(poly, region.center) <= r + tol) {
                    out.push_back({i, {m, n}, std::move(poly)});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), placed_less);
    return out;
}

Patch patch(const PeriodicTiling& tiling, const Disk& disk) {
    const double U = circumradius_bound(tiling);
    const double r = disk.radius;
    if (!(r >= U) || !std::isfinite(r)) {
        std::ostringstream os;
        os.precision(9);
        os << std::fixed << "patch radius " << r << " is below the tile circumradius bound U = " << U;
        throw TilingError(ErrorCode::RadiusTooSmall, os.str());
    }
    const double tol = 1e-9 * r;
    const std::vector<PlacedTile> pool = embed(tiling, {disk.center, r + 4.0 * U});

    std::map<PlacedKey, std::size_t> index;
    for (std::size_t k = 0; k < pool.size(); ++k) index[{pool[k].tile, pool[k].shift.m, pool[k].shift.n}] = k;

    Patch out;
    out.disk = disk;
    std::vector<char> in_patch(pool.size(), 0);
    std::vector<char> reached(pool.size(), 0);
    std::deque<std::size_t> queue;
    for (std::size_t k = 0; k < pool.size(); ++k) {
        const Polygon& poly = pool[k].polygon;
        const double far = max_distance(poly, disk.center);
        if (far < r - tol) {
            out.f1.push_back(pool[k]);
            in_patch[k] = 1;
        } else if (polygon_distance(poly, disk.center) <= r + tol) {
            out.f2.push_back(pool[k]);
            in_patch[k] = 1;
        } else if (far >= r + 3.0 * U) {
            reached[k] = 1;
            queue.push_back(k);
        }
    }
    // Flood the exterior over edge adjacency; whatever it cannot reach is enclosed.
    while (!queue.empty()) {
        const std::size_t k = queue.front();
        queue.pop_front();
        for (const EdgeSide& side : tiling.sides(pool[k].tile)) {
            const Shift s = pool[k].shift + side.other_shift;
            const auto it = index.find({side.other_tile, s.m, s.n});
            if (it == index.end() || in_patch[it->second] || reached[it->second]) continue;
            reached[it->second] = 1;
            queue.push_back(it->second);
        }
    }
    for (std::size_t k = 0; k < pool.size(); ++k) {
        if (!in_patch[k] && !reached[k]) out.f3.push_back(pool[k]);
    }
    return out;
}

PatchCensus patch_census(const Patch& p, const PeriodicTiling& tiling) {
    using AbsVertex = std::tuple<std::size_t, std::int64_t, std::int64_t>;
    std::set<AbsVertex> vertices;
    std::set<std::pair<AbsVertex, AbsVertex>> edges;
    PatchCensus c;
    const std::vector<int> h = adjacency_profile(tiling);
    for (const PlacedTile& t : p.all_tiles()) {
        ++c.tiles;
        ++c.tiles_by_adjacents[h[t.tile]];
        const auto bnd = tiling.boundary(t.tile);
        for (std::size_t k = 0; k < bnd.size(); ++k) {
            const VertexRef a = bnd[k];
            const VertexRef b = bnd[(k + 1) % bnd.size()];
            const AbsVertex va{a.index, a.shift.m + t.shift.m, a.shift.n + t.shift.n};
            const AbsVertex vb{b.index, b.shift.m + t.shift.m, b.shift.n + t.shift.n};
            if (vertices.insert(va).second) ++c.vertices_by_valence[tiling.valence(a.index)];
            edges.insert(std::minmax(va, vb));
        }
    }
    c.vertices = static_cast<std::int64_t>(vertices.size());
    c.edges = static_cast<std::int64_t>(edges.size());
    if (c.tiles > 0 && c.euler() != 1) {
        std::ostringstream os;
        os << "patch v - e + t = " << c.vertices << " - " << c.edges << " + " << c.tiles << " = " << c.euler();
        throw TilingError(ErrorCode::EulerViolation, os.str());
    }
    return c;
}

RatioSeries ratio_series(const PeriodicTiling& tiling, Vec2 center, const std::vector<double>& radii) {
    for (std::size_t i = 1; i < radii.size(); ++i) {
        if (radii[i] < radii[i - 1]) throw TilingError(ErrorCode::InvalidArgument, "radii must be non-decreasing");
    }
    const LimitStats limit = limit_stats(tiling);
    RatioSeries series;
    for (double r : radii) {
        RatioPoint pt;
        pt.radius = r;
        pt.census = patch_census(patch(tiling, {center, r}), tiling);
        const Rational t(pt.census.tiles);
        pt.vertices_per_tile = Rational(pt.census.vertices) / t;
        pt.edges_per_tile = Rational(pt.census.edges) / t;
        for (auto [hh, count] : pt.census.tiles_by_adjacents) pt.t[hh] = Rational(count) / t;
        for (auto [j, count] : pt.census.vertices_by_valence) pt.v[j] = Rational(count) / t;
        const double err = std::abs((pt.vertices_per_tile - limit.vertices_per_tile).to_double());
        series.envelope = std::max(series.envelope, err * r);
        series.points.push_back(std::move(pt));
    }
    return series;
}

double max_relative_error(const RatioPoint& point, const LimitStats& limit) {
    auto rel = [](const Rational& got, const Rational& want) {
        const Rational diff = (got - want).abs();
        return want.is_zero() ? diff.to_double() : (diff / want.abs()).to_double();
    };
    auto lookup = [](const std::map<int, Rational>& m, int k) {
        auto it = m.find(k);
        return it == m.end() ? Rational() : it->second;
    };
    double worst = std::max(rel(point.vertices_per_tile, limit.vertices_per_tile),
                            rel(point.edges_per_tile, limit.edges_per_tile));
    for (const auto* pair : {&point.t, &limit.t}) {
        for (const auto& [h, x] : *pair) worst = std::max(worst, rel(lookup(point.t, h), lookup(limit.t, h)));
    }
    for (const auto* pair : {&point.v, &limit.v}) {
        for (const auto& [j, x] : *pair) worst = std::max(worst, rel(lookup(point.v, j), lookup(limit.v, j)));
    }
    return worst;
}

BoundsReport validate_geometry(const PeriodicTiling& tiling) {
    BoundsReport report;
    report.inradius = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < tiling.tile_count(); ++i) {
        const Polygon corners = tiling.corners(i);
        report.circumradius = std::max(report.circumradius, min_enclosing_radius(corners));
        report.inradius = std::min(report.inradius, max_inscribed_radius(corners));
    }
    if (!(report.inradius > 1e-12 * report.circumradius)) {
        throw TilingError(ErrorCode::InscribedRadiusZero, "a tile contains no disk of positive radius");
    }
    std::vector<std::pair<Polygon, Vec2>> block;
    for (std::int64_t m = -1; m <= 1; ++m) {
        for (std::int64_t n = -1; n <= 1; ++n) {
            for (std::size_t i = 0; i < tiling.tile_count(); ++i) {
                Polygon poly = tiling.corners(i, {m, n});
                const Vec2 c = centroid(poly);
                block.emplace_back(std::move(poly), c);
            }
        }
    }
    const double tol = 1e-9 * report.circumradius;
    for (std::size_t a = 0; a < block.size(); ++a) {
        for (std::size_t b = a + 1; b < block.size(); ++b) {
            if (distance(block[a].second, block[b].second) > 4.0 * report.circumradius) continue;
            const double depth = std::min(min_axis_overlap(block[a].first, block[a].first, block[b].first),
                                          min_axis_overlap(block[b].first, block[a].first, block[b].first));
            if (depth > tol) {
                std::ostringstream os;
                os << "placed tiles " << a % tiling.tile_count() << " and " << b % tiling.tile_count()
                   << " overlap in the 3x3 block";
                throw TilingError(ErrorCode::OverlapDetected, os.str());
            }
        }
    }
    return report;
}

}  // namespace tilebalance
