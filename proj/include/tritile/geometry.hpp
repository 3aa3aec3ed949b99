#pragma once

// Exact planar geometry over Q(sqrt(D)): points, orientation, areas,
// congruence by squared side lengths, and a complete interior-intersection
// test for triangles (separating axis over the six edge normals, which is
// exhaustive for convex polygons).

#include "tritile/quadval.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace tritile {

struct Point2 {
    QuadVal x, y;
};

inline bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(const QuadVal& s, const Point2& p) { return {s * p.x, s * p.y}; }

using Triangle = std::array<Point2, 3>;

inline QuadVal cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }
inline QuadVal dot(const Point2& u, const Point2& v) { return u.x * v.x + u.y * v.y; }

// sign of the signed area of (a, b, c): +1 counterclockwise, 0 collinear
inline int orient(const Point2& a, const Point2& b, const Point2& c) {
    return quad_sign(cross(b - a, c - a));
}

inline QuadVal squared_dist(const Point2& a, const Point2& b) {
    const Point2 d = b - a;
    return d.x * d.x + d.y * d.y;
}

// twice the (unsigned) area
inline QuadVal doubled_area(const Triangle& t) {
    return quad_abs(cross(t[1] - t[0], t[2] - t[0]));
}

// squared side lengths sorted ascending: the congruence invariant
inline std::array<QuadVal, 3> squared_sides_sorted(const Triangle& t) {
    std::array<QuadVal, 3> s{squared_dist(t[0], t[1]), squared_dist(t[1], t[2]),
                             squared_dist(t[2], t[0])};
    std::sort(s.begin(), s.end(), quad_less);
    return s;
}

// congruence (reflections allowed) is exactly equality of side multisets
inline bool congruent(const Triangle& a, const Triangle& b) {
    return squared_sides_sorted(a) == squared_sides_sorted(b);
}

inline bool point_in_closed_triangle(const Point2& p, const Triangle& t) {
    const int o = orient(t[0], t[1], t[2]);
    if (o == 0) throw std::domain_error("point_in_closed_triangle: degenerate triangle");
    for (int i = 0; i < 3; ++i) {
        if (orient(t[i], t[(i + 1) % 3], p) * o < 0) return false;
    }
    return true;
}

namespace detail {

// projection interval of a triangle onto axis u
inline std::pair<QuadVal, QuadVal> project(const Triangle& t, const Point2& u) {
    QuadVal lo = dot(t[0], u), hi = lo;
    for (int i = 1; i < 3; ++i) {
        QuadVal v = dot(t[i], u);
        if (quad_less(v, lo)) lo = v;
        if (quad_less(hi, v)) hi = v;
    }
    return {lo, hi};
}

inline bool separated_on(const Triangle& a, const Triangle& b, const Point2& axis) {
    const auto [alo, ahi] = project(a, axis);
    const auto [blo, bhi] = project(b, axis);
    // closed comparison: touching along the axis still separates interiors
    return quad_cmp(ahi, blo) <= 0 || quad_cmp(bhi, alo) <= 0;
}

}  // namespace detail

// Do the OPEN interiors intersect? Complete for triangles: if the interiors
// are disjoint, some edge normal of one triangle separates them (Minkowski
// difference of two triangles has edges parallel to the inputs' edges).
inline bool interiors_intersect(const Triangle& a, const Triangle& b) {
    for (const Triangle* t : {&a, &b}) {
        for (int i = 0; i < 3; ++i) {
            const Point2 e = (*t)[(i + 1) % 3] - (*t)[i];
            const Point2 normal{QuadVal(0) - e.y, e.x};
            if (detail::separated_on(a, b, normal)) return false;
        }
    }
    return true;
}

struct BBox {
    QuadVal xlo, xhi, ylo, yhi;
};

inline BBox bounding_box(const Triangle& t) {
    BBox b{t[0].x, t[0].x, t[0].y, t[0].y};
    for (int i = 1; i < 3; ++i) {
        if (quad_less(t[i].x, b.xlo)) b.xlo = t[i].x;
        if (quad_less(b.xhi, t[i].x)) b.xhi = t[i].x;
        if (quad_less(t[i].y, b.ylo)) b.ylo = t[i].y;
        if (quad_less(b.yhi, t[i].y)) b.yhi = t[i].y;
    }
    return b;
}

// closed-box disjointness (or mere touching): interiors cannot intersect
inline bool boxes_separated(const BBox& a, const BBox& b) {
    return quad_cmp(a.xhi, b.xlo) <= 0 || quad_cmp(b.xhi, a.xlo) <= 0 ||
           quad_cmp(a.yhi, b.ylo) <= 0 || quad_cmp(b.yhi, a.ylo) <= 0;
}

}  // namespace tritile
