#pragma once

#include <cstdint>
#include <map>

#include "tilebalance/rational.hpp"

namespace tilebalance {

/// Integer counts per fundamental domain of the quotient map on the torus.
struct QuotientCensus {
    std::int64_t vertices = 0;
    std::int64_t edges = 0;
    std::int64_t tiles = 0;
    std::map<int, std::int64_t> tiles_by_adjacents;  // h -> T_h
    std::map<int, std::int64_t> vertices_by_valence; // j -> V_j

    friend bool operator==(const QuotientCensus&, const QuotientCensus&) = default;
};

/// Exact per-tile limits of a periodic tiling.
///
/// `t` holds t_h (fraction of tiles with h adjacents), `v` holds v_j
/// (j-valent vertices per tile), `w` holds w_j = v_j / v. Zero entries are
/// never stored.
struct LimitStats {
    std::map<int, Rational> t;
    std::map<int, Rational> v;
    Rational vertices_per_tile;
    Rational edges_per_tile;
    std::map<int, Rational> w;
    int corners = 0;  // n for a monohedral tiling by n-gons, 0 when tiles differ
    bool edge_to_edge = false;

    /// Sum over j of j * w_j.
    [[nodiscard]] Rational average_valence() const;
    /// Sum over h of h * t_h.
    [[nodiscard]] Rational average_adjacents() const;

    friend bool operator==(const LimitStats&, const LimitStats&) = default;
};

}  // namespace tilebalance
