#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tilebalance/lattice.hpp"
#include "tilebalance/stats.hpp"
#include "tilebalance/vec2.hpp"

namespace tilebalance {

/// A vertex orbit representative together with the lattice translate it sits in.
struct VertexRef {
    std::size_t index = 0;
    Shift shift;

    friend constexpr auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

/// Unvalidated description of a periodic tiling, as read from a template file.
struct TilingTemplate {
    std::string name;
    std::string type_label;
    Lattice lattice;
    std::vector<Vec2> vertices;
    std::vector<std::vector<VertexRef>> tiles;
    /// Explicit (tile, boundary position) flat marks; nullopt when the file has none.
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> flat;
    std::optional<LimitStats> expected;

    friend bool operator==(const TilingTemplate&, const TilingTemplate&) = default;
};

}  // namespace tilebalance
