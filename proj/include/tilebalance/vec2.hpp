#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace tilebalance {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return a += b; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return a -= b; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend constexpr Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

using Polygon = std::vector<Vec2>;

/// Signed shoelace area; positive for counterclockwise vertex order.
inline double signed_area(std::span<const Vec2> poly) {
    double twice = 0.0;
    for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
        twice += cross(poly[i], poly[(i + 1) % n]);
    }
    return 0.5 * twice;
}

inline Vec2 centroid(std::span<const Vec2> poly) {
    double a2 = 0.0;
    Vec2 c;
    for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
        const Vec2 p = poly[i];
        const Vec2 q = poly[(i + 1) % n];
        const double w = cross(p, q);
        a2 += w;
        c += w * (p + q);
    }
    return (1.0 / (3.0 * a2)) * c;
}

/// Interior angle in radians at `cur` for a counterclockwise walk prev -> cur -> next,
/// in (0, 2*pi). Values above pi mean a reflex corner.
inline double interior_angle(Vec2 prev, Vec2 cur, Vec2 next) {
    const Vec2 in = cur - prev;
    const Vec2 out = next - cur;
    const double turn = std::atan2(cross(in, out), dot(in, out));
    return M_PI - turn;
}

/// Distance from `p` to the closed segment [a, b].
inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    double s = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    s = s < 0.0 ? 0.0 : (s > 1.0 ? 1.0 : s);
    return distance(p, a + s * ab);
}

}  // namespace tilebalance
