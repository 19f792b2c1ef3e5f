#include "tilebalance/periodic_map.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <tuple>

#include "tilebalance/error.hpp"

namespace tilebalance {

namespace {

std::string describe(std::size_t tile, std::size_t pos) {
    std::ostringstream os;
    os << "tile " << tile << ", boundary position " << pos;
    return os.str();
}

std::int64_t floor_to_int(double x) { return static_cast<std::int64_t>(std::floor(x)); }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Closed-segment intersection test with a small absolute tolerance.
bool segments_touch(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double tol) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    if (((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol)) &&
        ((d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol))) {
        return true;
    }
    return point_segment_distance(c, a, b) <= tol || point_segment_distance(d, a, b) <= tol ||
           point_segment_distance(a, c, d) <= tol || point_segment_distance(b, c, d) <= tol;
}

using DirectedKey = std::tuple<std::size_t, std::size_t, std::int64_t, std::int64_t>;

DirectedKey directed_key(VertexRef from, VertexRef to) {
    const Shift d = to.shift - from.shift;
    return {from.index, to.index, d.m, d.n};
}

struct Incidence {
    std::size_t tile;
    std::size_t pos;
    Shift from_shift;  // shift of the canonical `from` vertex as seen by this tile
    bool forward;
};

}  // namespace

int PeriodicTiling::corner_count(std::size_t tile) const {
    const auto& marks = flat_.at(tile);
    return static_cast<int>(std::count(marks.begin(), marks.end(), false));
}

Polygon PeriodicTiling::polygon(std::size_t tile, Shift shift) const {
    Polygon out;
    out.reserve(tiles_.at(tile).size());
    const Vec2 off = lattice_.offset(shift);
    for (const VertexRef& r : tiles_[tile]) out.push_back(position(r) + off);
    return out;
}

Polygon PeriodicTiling::corners(std::size_t tile, Shift shift) const {
    Polygon out;
    const Vec2 off = lattice_.offset(shift);
    for (std::size_t k = 0; k < tiles_.at(tile).size(); ++k) {
        if (!flat_[tile][k]) out.push_back(position(tiles_[tile][k]) + off);
    }
    return out;
}

TilingTemplate PeriodicTiling::to_template() const {
    TilingTemplate t;
    t.name = name_;
    t.type_label = type_label_;
    t.lattice = lattice_;
    t.vertices = vertices_;
    t.tiles = tiles_;
    std::vector<std::pair<std::size_t, std::size_t>> marks;
    for (std::size_t i = 0; i < flat_.size(); ++i) {
        for (std::size_t k = 0; k < flat_[i].size(); ++k) {
            if (flat_[i][k]) marks.emplace_back(i, k);
        }
    }
    t.flat = std::move(marks);
    return t;
}

PeriodicTiling build_periodic_tiling(const TilingTemplate& tmpl) {
    PeriodicTiling out;
    out.name_ = tmpl.name;
    out.type_label_ = tmpl.type_label;
    out.lattice_ = tmpl.lattice;
    const Lattice& lat = out.lattice_;

    const double scale = norm(lat.t1) * norm(lat.t2);
    if (!(scale > 0.0) || !(std::abs(lat.det()) > kLatticeEpsilon * scale)) {
        throw TilingError(ErrorCode::DegenerateLattice, "lattice vectors are (nearly) collinear");
    }
    if (tmpl.tiles.empty()) throw TilingError(ErrorCode::SchemaError, "template has no tiles");
    if (tmpl.vertices.empty()) throw TilingError(ErrorCode::SchemaError, "template has no vertices");

    // Orbit representatives go into the half-open fundamental parallelogram.
    const std::size_t nv = tmpl.vertices.size();
    std::vector<Shift> rebase(nv);
    out.vertices_.resize(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        const Vec2 f = lat.to_basis(tmpl.vertices[v]);
        rebase[v] = {floor_to_int(f.x), floor_to_int(f.y)};
        out.vertices_[v] = tmpl.vertices[v] - lat.offset(rebase[v]);
    }

    std::vector<std::vector<bool>> marked(tmpl.tiles.size());
    for (std::size_t i = 0; i < tmpl.tiles.size(); ++i) marked[i].assign(tmpl.tiles[i].size(), false);
    if (tmpl.flat) {
        for (auto [tile, pos] : *tmpl.flat) {
            if (tile >= tmpl.tiles.size() || pos >= tmpl.tiles[tile].size()) {
                throw TilingError(ErrorCode::SchemaError, "flat mark out of range: " + describe(tile, pos));
            }
            marked[tile][pos] = true;
        }
    }

    out.tiles_.reserve(tmpl.tiles.size());
    for (std::size_t i = 0; i < tmpl.tiles.size(); ++i) {
        std::vector<VertexRef> cycle;
        for (const VertexRef& r : tmpl.tiles[i]) {
            if (r.index >= nv) {
                throw TilingError(ErrorCode::SchemaError,
                                  "tile " + std::to_string(i) + " references vertex " + std::to_string(r.index) +
                                      " of " + std::to_string(nv));
            }
            cycle.push_back({r.index, r.shift + rebase[r.index]});
        }
        if (cycle.size() < 3) {
            throw TilingError(ErrorCode::NonSimpleTile, "tile " + std::to_string(i) + " has fewer than 3 vertices");
        }
        std::vector<bool> marks = marked[i];
        Polygon poly;
        for (const VertexRef& r : cycle) poly.push_back(out.position(r));
        if (signed_area(poly) < 0.0) {
            std::reverse(cycle.begin(), cycle.end());
            std::reverse(marks.begin(), marks.end());
        }
        out.tiles_.push_back(std::move(cycle));
        marked[i] = std::move(marks);
    }

    // Per-tile shape checks: simple, convex up to flat vertices.
    out.flat_.resize(out.tiles_.size());
    std::vector<std::vector<double>> angles(out.tiles_.size());
    double area_sum = 0.0;
    for (std::size_t i = 0; i < out.tiles_.size(); ++i) {
        const auto& cycle = out.tiles_[i];
        const std::size_t n = cycle.size();
        const Polygon poly = out.polygon(i);
        const double area = signed_area(poly);
        double perimeter = 0.0;
        for (std::size_t k = 0; k < n; ++k) perimeter += distance(poly[k], poly[(k + 1) % n]);
        const double tol = 1e-12 * std::max(1.0, perimeter);
        if (!(area > tol * perimeter)) {
            throw TilingError(ErrorCode::NonSimpleTile, "tile " + std::to_string(i) + " has zero area");
        }
        std::set<VertexRef> seen(cycle.begin(), cycle.end());
        if (seen.size() != n) {
            throw TilingError(ErrorCode::NonSimpleTile, "tile " + std::to_string(i) + " repeats a vertex");
        }
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 2; b < n; ++b) {
                if (a == 0 && b == n - 1) continue;
                if (segments_touch(poly[a], poly[(a + 1) % n], poly[b], poly[(b + 1) % n], tol)) {
                    throw TilingError(ErrorCode::NonSimpleTile,
                                      "tile " + std::to_string(i) + " boundary self-intersects");
                }
            }
        }
        out.flat_[i].resize(n);
        angles[i].resize(n);
        int corner_total = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const double angle = interior_angle(poly[(k + n - 1) % n], poly[k], poly[(k + 1) % n]);
            angles[i][k] = angle;
            const bool flat = std::abs(angle - std::numbers::pi) <= kFlatAngleTolerance;
            if (!flat && angle > std::numbers::pi) {
                throw TilingError(ErrorCode::NonConvexTile, "reflex corner at " + describe(i, k));
            }
            if (tmpl.flat && flat != marked[i][k]) {
                throw TilingError(ErrorCode::FlatMarkMismatch,
                                  (flat ? "unmarked flat vertex at " : "marked flat vertex is a corner at ") +
                                      describe(i, k));
            }
            out.flat_[i][k] = flat;
            corner_total += flat ? 0 : 1;
        }
        if (corner_total < 3) {
            throw TilingError(ErrorCode::NonSimpleTile, "tile " + std::to_string(i) + " has fewer than 3 corners");
        }
        area_sum += area;
    }

    // Edge classes: each must be traversed once in each direction.
    std::map<DirectedKey, std::vector<Incidence>> classes;
    for (std::size_t i = 0; i < out.tiles_.size(); ++i) {
        const auto& cycle = out.tiles_[i];
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const VertexRef u = cycle[k];
            const VertexRef w = cycle[(k + 1) % cycle.size()];
            const DirectedKey fwd = directed_key(u, w);
            const DirectedKey rev = directed_key(w, u);
            if (fwd <= rev) {
                classes[fwd].push_back({i, k, u.shift, true});
            } else {
                classes[rev].push_back({i, k, w.shift, false});
            }
        }
    }
    out.sides_.resize(out.tiles_.size());
    for (std::size_t i = 0; i < out.tiles_.size(); ++i) out.sides_[i].resize(out.tiles_[i].size());
    for (const auto& [key, inc] : classes) {
        const auto [from, to, dm, dn] = key;
        if (inc.size() != 2 || inc[0].forward == inc[1].forward) {
            std::ostringstream os;
            os << "edge from vertex " << from << " to vertex " << to << " shifted (" << dm << "," << dn << ") has "
               << inc.size() << " incident tile slot(s)";
            if (inc.size() == 2) os << " with the same orientation";
            throw TilingError(ErrorCode::UnmatchedEdge, os.str());
        }
        const std::size_t e = out.edges_.size();
        out.edges_.push_back({{from, {0, 0}}, {to, {dm, dn}}});
        for (int s = 0; s < 2; ++s) {
            const Incidence& self = inc[s];
            const Incidence& other = inc[1 - s];
            out.sides_[self.tile][self.pos] = {e, other.tile, self.from_shift - other.from_shift};
        }
    }

    // Valence and the angle sum around each vertex orbit.
    out.valence_.assign(nv, 0);
    std::vector<double> angle_sum(nv, 0.0);
    for (std::size_t i = 0; i < out.tiles_.size(); ++i) {
        for (std::size_t k = 0; k < out.tiles_[i].size(); ++k) {
            const std::size_t v = out.tiles_[i][k].index;
            ++out.valence_[v];
            angle_sum[v] += angles[i][k];
        }
    }
    for (std::size_t v = 0; v < nv; ++v) {
        if (out.valence_[v] < 3) {
            throw TilingError(ErrorCode::LowValence, "vertex " + std::to_string(v) + " has valence " +
                                                         std::to_string(out.valence_[v]));
        }
        if (std::abs(angle_sum[v] - 2.0 * std::numbers::pi) > 1e-7) {
            throw TilingError(ErrorCode::AreaMismatch,
                              "angles around vertex " + std::to_string(v) + " do not sum to a full turn");
        }
    }

    const double det = std::abs(lat.det());
    if (std::abs(area_sum - det) > kAreaRelativeTolerance * det) {
        std::ostringstream os;
        os.precision(17);
        os << "tile areas sum to " << area_sum << " but the fundamental domain has area " << det;
        throw TilingError(ErrorCode::AreaMismatch, os.str());
    }

    const auto euler = static_cast<std::int64_t>(nv) - static_cast<std::int64_t>(out.edges_.size()) +
                       static_cast<std::int64_t>(out.tiles_.size());
    if (euler != 0) {
        throw TilingError(ErrorCode::EulerViolation, "quotient V - E + F = " + std::to_string(euler));
    }

    // Two tiles that touch must do so along a single arc of the boundary.
    for (std::size_t i = 0; i < out.tiles_.size(); ++i) {
        const auto& sides = out.sides_[i];
        const std::size_t n = sides.size();
        std::map<std::tuple<std::size_t, Shift>, int> runs;
        for (std::size_t k = 0; k < n; ++k) {
            const EdgeSide& cur = sides[k];
            const EdgeSide& prev = sides[(k + n - 1) % n];
            if (prev.other_tile != cur.other_tile || prev.other_shift != cur.other_shift) {
                ++runs[{cur.other_tile, cur.other_shift}];
            }
        }
        for (const auto& [neighbor, count] : runs) {
            if (count > 1) {
                throw TilingError(ErrorCode::DisconnectedContact,
                                  "tile " + std::to_string(i) + " meets tile " + std::to_string(std::get<0>(neighbor)) +
                                      " along more than one arc");
            }
        }
    }
    return out;
}

QuotientCensus quotient_counts(const PeriodicTiling& tiling) {
    QuotientCensus c;
    c.vertices = static_cast<std::int64_t>(tiling.vertex_count());
    c.edges = static_cast<std::int64_t>(tiling.edges().size());
    c.tiles = static_cast<std::int64_t>(tiling.tile_count());
    for (int h : adjacency_profile(tiling)) ++c.tiles_by_adjacents[h];
    for (std::size_t v = 0; v < tiling.vertex_count(); ++v) ++c.vertices_by_valence[tiling.valence(v)];
    return c;
}

std::vector<int> adjacency_profile(const PeriodicTiling& tiling) {
    std::vector<int> out(tiling.tile_count());
    for (std::size_t i = 0; i < tiling.tile_count(); ++i) {
        std::set<std::tuple<std::size_t, Shift>> distinct;
        for (const EdgeSide& s : tiling.sides(i)) distinct.insert({s.other_tile, s.other_shift});
        out[i] = static_cast<int>(distinct.size());
    }
    return out;
}

bool is_edge_to_edge(const PeriodicTiling& tiling) {
    for (std::size_t i = 0; i < tiling.tile_count(); ++i) {
        if (tiling.corner_count(i) != static_cast<int>(tiling.boundary(i).size())) return false;
    }
    return true;
}

LimitStats limit_stats(const PeriodicTiling& tiling) {
    const QuotientCensus c = quotient_counts(tiling);
    LimitStats s;
    const Rational tiles(c.tiles);
    for (auto [h, count] : c.tiles_by_adjacents) s.t[h] = Rational(count) / tiles;
    for (auto [j, count] : c.vertices_by_valence) s.v[j] = Rational(count) / tiles;
    s.vertices_per_tile = Rational(c.vertices) / tiles;
    s.edges_per_tile = Rational(c.edges) / tiles;
    for (const auto& [j, vj] : s.v) s.w[j] = vj / s.vertices_per_tile;
    s.corners = tiling.corner_count(0);
    for (std::size_t i = 1; i < tiling.tile_count(); ++i) {
        if (tiling.corner_count(i) != s.corners) {
            s.corners = 0;
            break;
        }
    }
    s.edge_to_edge = is_edge_to_edge(tiling);
    return s;
}

TilingTemplate enlarge_domain(const PeriodicTiling& tiling, int a, int b) {
    if (a < 1 || b < 1) throw TilingError(ErrorCode::InvalidArgument, "superlattice factors must be positive");
    const Lattice& lat = tiling.lattice();
    TilingTemplate t;
    t.name = tiling.name() + "@" + std::to_string(a) + "x" + std::to_string(b);
    t.type_label = tiling.type_label();
    t.lattice = {static_cast<double>(a) * lat.t1, static_cast<double>(b) * lat.t2};
    const std::size_t nv = tiling.vertex_count();
    auto id = [&](std::size_t v, std::int64_t p, std::int64_t q) {
        return (static_cast<std::size_t>(q) * static_cast<std::size_t>(a) + static_cast<std::size_t>(p)) * nv + v;
    };
    t.vertices.resize(nv * static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
    for (std::int64_t q = 0; q < b; ++q) {
        for (std::int64_t p = 0; p < a; ++p) {
            for (std::size_t v = 0; v < nv; ++v) t.vertices[id(v, p, q)] = tiling.position({v, {p, q}});
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> marks;
    for (std::int64_t q = 0; q < b; ++q) {
        for (std::int64_t p = 0; p < a; ++p) {
            for (std::size_t i = 0; i < tiling.tile_count(); ++i) {
                std::vector<VertexRef> cycle;
                const auto bnd = tiling.boundary(i);
                for (std::size_t k = 0; k < bnd.size(); ++k) {
                    const std::int64_t m = bnd[k].shift.m + p;
                    const std::int64_t n = bnd[k].shift.n + q;
                    const std::int64_t sm = floor_div(m, a);
                    const std::int64_t sn = floor_div(n, b);
                    cycle.push_back({id(bnd[k].index, m - sm * a, n - sn * b), {sm, sn}});
                    if (tiling.is_flat(i, k)) marks.emplace_back(t.tiles.size(), k);
                }
                t.tiles.push_back(std::move(cycle));
            }
        }
    }
    t.flat = std::move(marks);
    return t;
}

Rational LimitStats::average_valence() const {
    Rational sum;
    for (const auto& [j, wj] : w) sum += Rational(j) * wj;
    return sum;
}

Rational LimitStats::average_adjacents() const {
    Rational sum;
    for (const auto& [h, th] : t) sum += Rational(h) * th;
    return sum;
}

}  // namespace tilebalance
