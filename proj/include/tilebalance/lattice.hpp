#pragma once

#include <compare>
#include <cstdint>

#include "tilebalance/vec2.hpp"

namespace tilebalance {

/// Integer lattice coordinates (m, n), standing for m*t1 + n*t2.
struct Shift {
    std::int64_t m = 0;
    std::int64_t n = 0;

    constexpr Shift& operator+=(Shift o) { m += o.m; n += o.n; return *this; }
    constexpr Shift& operator-=(Shift o) { m -= o.m; n -= o.n; return *this; }
    friend constexpr Shift operator+(Shift a, Shift b) { return a += b; }
    friend constexpr Shift operator-(Shift a, Shift b) { return a -= b; }
    constexpr Shift operator-() const { return {-m, -n}; }
    friend constexpr auto operator<=>(const Shift&, const Shift&) = default;
};

/// Translation lattice spanned by t1 and t2.
struct Lattice {
    Vec2 t1{1.0, 0.0};
    Vec2 t2{0.0, 1.0};

    friend bool operator==(const Lattice&, const Lattice&) = default;

    [[nodiscard]] double det() const { return cross(t1, t2); }
    [[nodiscard]] Vec2 offset(Shift s) const {
        return static_cast<double>(s.m) * t1 + static_cast<double>(s.n) * t2;
    }
    /// Coordinates of `p` in the (t1, t2) basis.
    [[nodiscard]] Vec2 to_basis(Vec2 p) const {
        const double d = det();
        return {cross(p, t2) / d, cross(t1, p) / d};
    }
};

/// Relative threshold on |det| / (|t1| |t2|) below which a lattice is degenerate.
inline constexpr double kLatticeEpsilon = 1e-9;

}  // namespace tilebalance
