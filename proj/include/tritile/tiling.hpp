#pragma once
// Tiling data model and the exact verifier.
//
// A Tiling declares a shared discriminant D, the squared side lengths of the
// tile shape, an outer triangle, and the placed tiles.  verify_tiling checks,
// all in exact arithmetic over Q(sqrt(D)):
//   structure    - the declared data is well formed,
//   congruence   - every placed tile is congruent (SSS, reflections allowed)
//                  to the declared tile shape,
//   area         - the tile areas sum exactly to the outer area,
//   containment  - every tile vertex lies inside or on the outer triangle
//                  (triangles are convex, so vertex containment implies the
//                  whole tile is contained),
//   overlap      - no two tile interiors intersect.
// Together these certify a tiling: disjoint congruent tiles inside the outer
// triangle whose total area equals the outer area must cover it.
// Failures are reported (first counterexample), never thrown.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "tritile/geometry.hpp"
#include "tritile/quadval.hpp"
#include "tritile/rational.hpp"

namespace tritile {

struct Tiling {
    Int disc = 1;                      // shared squarefree discriminant D
    std::array<QuadVal, 3> tile_sq{};  // squared tile side lengths, ascending
    Triangle outer{};
    std::vector<Triangle> tiles;

    std::size_t n_tiles() const { return tiles.size(); }
};

struct CheckResult {
    bool pass = false;
    std::string detail;  // empty when passing; first counterexample otherwise
};

struct VerifyReport {
    bool valid = false;
    std::size_t n_tiles = 0;
    bool is_square_count = false;
    CheckResult structure;
    CheckResult congruence;
    CheckResult area;
    CheckResult containment;
    CheckResult overlap;

    explicit operator bool() const { return valid; }

    std::string first_failure() const {
        for (const CheckResult* c :
             {&structure, &congruence, &area, &containment, &overlap}) {
            if (!c->pass) return c->detail;
        }
        return {};
    }
};

namespace detail {

// 16 * (area of a triangle with squared sides qa, qb, qc)^2, by Heron's
// formula; positive exactly when the three lengths form a proper triangle.
inline QuadVal shape_heron16(const std::array<QuadVal, 3>& q) {
    const QuadVal two(2);
    return two * (q[0] * q[1] + q[0] * q[2] + q[1] * q[2]) -
           (q[0] * q[0] + q[1] * q[1] + q[2] * q[2]);
}

inline bool disc_compatible(const QuadVal& v, const Int& disc) {
    return v.disc == 1 || v.disc == disc;
}

inline std::string tiling_structure_error(const Tiling& t) {
    if (t.tiles.empty()) return "tiling has no tiles";
    if (t.disc < 1 || squarefree_part(t.disc).first != t.disc)
        return "declared discriminant is not a squarefree positive integer";
    for (const QuadVal& q : t.tile_sq) {
        if (!disc_compatible(q, t.disc))
            return "tile side length discriminant differs from the tiling "
                   "discriminant";
    }
    for (const Point2& p : t.outer) {
        if (!disc_compatible(p.x, t.disc) || !disc_compatible(p.y, t.disc))
            return "outer coordinate discriminant differs from the tiling "
                   "discriminant";
    }
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        for (const Point2& p : t.tiles[i]) {
            if (!disc_compatible(p.x, t.disc) || !disc_compatible(p.y, t.disc))
                return "tile " + std::to_string(i) +
                       " coordinate discriminant differs from the tiling "
                       "discriminant";
        }
    }
    if (quad_sign(t.tile_sq[0]) <= 0) return "tile side lengths must be positive";
    if (quad_less(t.tile_sq[1], t.tile_sq[0]) ||
        quad_less(t.tile_sq[2], t.tile_sq[1]))
        return "tile side lengths are not sorted ascending";
    if (quad_sign(shape_heron16(t.tile_sq)) <= 0)
        return "declared tile shape is degenerate";
    if (orient(t.outer[0], t.outer[1], t.outer[2]) == 0)
        return "outer triangle is degenerate";
    return {};
}

}  // namespace detail

inline VerifyReport verify_tiling(const Tiling& t) {
    VerifyReport rep;
    rep.n_tiles = t.tiles.size();
    rep.is_square_count = is_perfect_square(Int(rep.n_tiles)).has_value();

    const std::string structure_error = detail::tiling_structure_error(t);
    rep.structure.pass = structure_error.empty();
    rep.structure.detail = structure_error;
    if (!rep.structure.pass) {
        const std::string skipped = "not evaluated: structure check failed";
        for (CheckResult* c :
             {&rep.congruence, &rep.area, &rep.containment, &rep.overlap}) {
            c->pass = false;
            c->detail = skipped;
        }
        return rep;
    }

    rep.congruence.pass = true;
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        const Triangle& tri = t.tiles[i];
        if (orient(tri[0], tri[1], tri[2]) == 0) {
            rep.congruence.pass = false;
            rep.congruence.detail = "tile " + std::to_string(i) + " is degenerate";
            break;
        }
        if (!(squared_sides_sorted(tri) == t.tile_sq)) {
            rep.congruence.pass = false;
            rep.congruence.detail = "tile " + std::to_string(i) +
                                    " is not congruent to the declared tile shape";
            break;
        }
    }

    QuadVal total(0);
    for (const Triangle& tri : t.tiles) total = total + doubled_area(tri);
    rep.area.pass = (total == doubled_area(t.outer));
    if (!rep.area.pass) rep.area.detail = "tile areas do not sum to the outer area";

    rep.containment.pass = true;
    for (std::size_t i = 0; i < t.tiles.size() && rep.containment.pass; ++i) {
        for (int v = 0; v < 3; ++v) {
            if (!point_in_closed_triangle(t.tiles[i][v], t.outer)) {
                rep.containment.pass = false;
                rep.containment.detail = "tile " + std::to_string(i) + " vertex " +
                                         std::to_string(v) +
                                         " lies outside the outer triangle";
                break;
            }
        }
    }

    rep.overlap.pass = true;
    std::vector<BBox> boxes;
    boxes.reserve(t.tiles.size());
    for (const Triangle& tri : t.tiles) boxes.push_back(bounding_box(tri));
    for (std::size_t i = 0; i < t.tiles.size() && rep.overlap.pass; ++i) {
        for (std::size_t j = i + 1; j < t.tiles.size(); ++j) {
            if (boxes_separated(boxes[i], boxes[j])) continue;
            if (interiors_intersect(t.tiles[i], t.tiles[j])) {
                rep.overlap.pass = false;
                rep.overlap.detail = "tiles " + std::to_string(i) + " and " +
                                     std::to_string(j) +
                                     " have intersecting interiors";
                break;
            }
        }
    }

    rep.valid = rep.structure.pass && rep.congruence.pass && rep.area.pass &&
                rep.containment.pass && rep.overlap.pass;
    return rep;
}

}  // namespace tritile
