#pragma once

// Brute-force patch enumerator used to cross-check the main pipeline.
// Scans a bounding box of lattice translates, classifies tiles by direct
// containment, and identifies vertices and edges by rounded coordinates.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "tilebalance/geometry.hpp"
#include "tilebalance/periodic_map.hpp"

namespace oracle {

using tilebalance::Polygon;
using tilebalance::Vec2;

using Key = std::pair<long long, long long>;

inline Key quantize(Vec2 p) {
    return {std::llround(p.x * 1e6), std::llround(p.y * 1e6)};
}

inline bool inside_convex(const Polygon& poly, Vec2 p) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (tilebalance::cross(poly[(i + 1) % poly.size()] - poly[i], p - poly[i]) < 0.0) return false;
    }
    return true;
}

inline double distance_to(const Polygon& poly, Vec2 p) {
    if (inside_convex(poly, p)) return 0.0;
    double d = 1e300;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        d = std::min(d, tilebalance::point_segment_distance(p, poly[i], poly[(i + 1) % poly.size()]));
    }
    return d;
}

inline bool segment_hits_polygon(Vec2 a, Vec2 b, const Polygon& poly) {
    // Sample the segment densely; adequate for the short rays used below.
    const int steps = 400;
    for (int s = 0; s <= steps; ++s) {
        const double f = static_cast<double>(s) / steps;
        if (inside_convex(poly, a + f * (b - a))) return true;
    }
    return false;
}

inline tilebalance::PatchCensus census(const tilebalance::PeriodicTiling& tiling, Vec2 center, double r) {
    const double U = tilebalance::circumradius_bound(tiling);
    const double half = r + 8.0 * U;
    const auto& lat = tiling.lattice();
    double lo_m = 1e300, hi_m = -1e300, lo_n = 1e300, hi_n = -1e300;
    for (double sx : {-1.0, 1.0}) {
        for (double sy : {-1.0, 1.0}) {
            const Vec2 f = lat.to_basis(center + Vec2{sx * half, sy * half});
            lo_m = std::min(lo_m, f.x);
            hi_m = std::max(hi_m, f.x);
            lo_n = std::min(lo_n, f.y);
            hi_n = std::max(hi_n, f.y);
        }
    }
    std::vector<Polygon> all;
    for (auto m = static_cast<long long>(std::floor(lo_m)) - 1; m <= static_cast<long long>(std::ceil(hi_m)) + 1; ++m) {
        for (auto n = static_cast<long long>(std::floor(lo_n)) - 1; n <= static_cast<long long>(std::ceil(hi_n)) + 1; ++n) {
            for (std::size_t i = 0; i < tiling.tile_count(); ++i) {
                Polygon poly = tiling.polygon(i, {m, n});
                if (distance_to(poly, center) <= r + 6.0 * U) all.push_back(std::move(poly));
            }
        }
    }

    std::map<Key, int> valence;
    std::map<std::pair<Key, Key>, std::vector<std::size_t>> edge_tiles;
    for (std::size_t k = 0; k < all.size(); ++k) {
        const Polygon& poly = all[k];
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Key a = quantize(poly[i]);
            const Key b = quantize(poly[(i + 1) % poly.size()]);
            ++valence[a];
            edge_tiles[std::minmax(a, b)].push_back(k);
        }
    }

    const double tol = 1e-9 * r;
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> outside;
    for (std::size_t k = 0; k < all.size(); ++k) {
        const Polygon& poly = all[k];
        double far = 0.0;
        for (Vec2 p : poly) far = std::max(far, tilebalance::distance(p, center));
        if (far < r - tol || distance_to(poly, center) <= r + tol) {
            chosen.push_back(k);
        } else if (distance_to(poly, center) < r + 2.0 * U) {
            outside.push_back(k);
        }
    }
    // A tile outside the disk is enclosed when every outward ray from its
    // centroid runs into a chosen tile.
    std::vector<std::size_t> enclosed;
    for (std::size_t k : outside) {
        const Vec2 c = tilebalance::centroid(all[k]);
        bool closed = true;
        for (int d = 0; d < 72 && closed; ++d) {
            const double a = d * M_PI / 36.0;
            const Vec2 end = c + (4.0 * U) * Vec2{std::cos(a), std::sin(a)};
            bool hit = false;
            for (std::size_t j : chosen) {
                if (tilebalance::distance(tilebalance::centroid(all[j]), c) < 6.0 * U && segment_hits_polygon(c, end, all[j])) {
                    hit = true;
                    break;
                }
            }
            closed = hit;
        }
        if (closed) enclosed.push_back(k);
    }
    chosen.insert(chosen.end(), enclosed.begin(), enclosed.end());

    tilebalance::PatchCensus out;
    std::set<Key> vertices;
    std::set<std::pair<Key, Key>> edges;
    for (std::size_t k : chosen) {
        const Polygon& poly = all[k];
        std::set<std::size_t> adj;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Key a = quantize(poly[i]);
            const Key b = quantize(poly[(i + 1) % poly.size()]);
            if (vertices.insert(a).second) ++out.vertices_by_valence[valence[a]];
            edges.insert(std::minmax(a, b));
            for (std::size_t other : edge_tiles[std::minmax(a, b)]) {
                if (other != k) adj.insert(other);
            }
        }
        ++out.tiles_by_adjacents[static_cast<int>(adj.size())];
    }
    out.tiles = static_cast<long long>(chosen.size());
    out.vertices = static_cast<long long>(vertices.size());
    out.edges = static_cast<long long>(edges.size());
    return out;
}

}  // namespace oracle
