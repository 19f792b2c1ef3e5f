#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tilebalance/lattice.hpp"
#include "tilebalance/stats.hpp"
#include "tilebalance/tiling_template.hpp"
#include "tilebalance/vec2.hpp"

namespace tilebalance {

/// Interior angles within this many radians of pi mark a flat vertex.
inline constexpr double kFlatAngleTolerance = 1e-9;
/// Relative tolerance for the tile-area sum against |det(t1, t2)|.
inline constexpr double kAreaRelativeTolerance = 1e-9;

/// One edge class of the quotient map, stored with `from.shift == {0, 0}`.
struct QuotientEdge {
    VertexRef from;
    VertexRef to;
};

/// What lies across boundary edge k of a tile (the edge from boundary[k] to boundary[k+1]).
struct EdgeSide {
    std::size_t edge = 0;        // index into PeriodicTiling::edges()
    std::size_t other_tile = 0;  // fundamental tile on the other side
    Shift other_shift;           // translate of `other_tile`, relative to this tile
};

/// A validated doubly periodic tiling stored as a planar map on the torus.
///
/// Vertex orbit representatives live in the half-open fundamental parallelogram
/// and every tile boundary is counterclockwise. Instances are immutable.
class PeriodicTiling {
public:
    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const std::string& type_label() const noexcept { return type_label_; }
    [[nodiscard]] const Lattice& lattice() const noexcept { return lattice_; }

    [[nodiscard]] std::span<const Vec2> vertices() const noexcept { return vertices_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }
    [[nodiscard]] std::size_t tile_count() const noexcept { return tiles_.size(); }
    [[nodiscard]] std::span<const QuotientEdge> edges() const noexcept { return edges_; }

    /// Boundary cycle of a tile: every tiling vertex on it, corners and flat ones.
    [[nodiscard]] std::span<const VertexRef> boundary(std::size_t tile) const { return tiles_.at(tile); }
    [[nodiscard]] bool is_flat(std::size_t tile, std::size_t pos) const { return flat_.at(tile).at(pos); }
    [[nodiscard]] std::span<const EdgeSide> sides(std::size_t tile) const { return sides_.at(tile); }
    [[nodiscard]] int valence(std::size_t vertex) const { return valence_.at(vertex); }
    [[nodiscard]] int corner_count(std::size_t tile) const;

    [[nodiscard]] Vec2 position(VertexRef ref) const {
        return vertices_[ref.index] + lattice_.offset(ref.shift);
    }
    /// Boundary polygon (flat vertices included) of the tile translated by `shift`.
    [[nodiscard]] Polygon polygon(std::size_t tile, Shift shift = {}) const;
    /// Corner polygon (flat vertices dropped) of the tile translated by `shift`.
    [[nodiscard]] Polygon corners(std::size_t tile, Shift shift = {}) const;

    /// The template this tiling was built from, in normalized form.
    [[nodiscard]] TilingTemplate to_template() const;

private:
    friend PeriodicTiling build_periodic_tiling(const TilingTemplate& tmpl);

    std::string name_;
    std::string type_label_;
    Lattice lattice_;
    std::vector<Vec2> vertices_;
    std::vector<std::vector<VertexRef>> tiles_;
    std::vector<std::vector<bool>> flat_;
    std::vector<QuotientEdge> edges_;
    std::vector<std::vector<EdgeSide>> sides_;
    std::vector<int> valence_;
};

/// Validates a template and resolves its lattice identifications.
///
/// Throws TilingError with DegenerateLattice, UnmatchedEdge, LowValence,
/// NonSimpleTile, AreaMismatch, NonConvexTile, FlatMarkMismatch,
/// DisconnectedContact, EulerViolation or SchemaError.
PeriodicTiling build_periodic_tiling(const TilingTemplate& tmpl);

QuotientCensus quotient_counts(const PeriodicTiling& tiling);
LimitStats limit_stats(const PeriodicTiling& tiling);
/// Number of distinct edge-sharing tiles, per fundamental tile.
std::vector<int> adjacency_profile(const PeriodicTiling& tiling);
bool is_edge_to_edge(const PeriodicTiling& tiling);

/// Template for the same tiling over the (a*t1, b*t2) superlattice.
TilingTemplate enlarge_domain(const PeriodicTiling& tiling, int a, int b);

}  // namespace tilebalance
