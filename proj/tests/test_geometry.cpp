#include <catch2/catch_amalgamated.hpp>

#include "tritile/geometry.hpp"
#include "tritile/tiling.hpp"

#include <algorithm>
#include <vector>

using namespace tritile;

namespace {

Point2 pt(long long x, long long y) { return {QuadVal(Rational(x)), QuadVal(Rational(y))}; }

Point2 ptr(const Rational& x, const Rational& y) { return {QuadVal(x), QuadVal(y)}; }

// a + b*sqrt(3)
QuadVal s3(const Rational& a, const Rational& b) { return QuadVal(a, b, 3); }

Rational rr(long long p, long long q) { return make_rational(Int(p), Int(q)); }

// the two halves of the isosceles triangle (0,0),(2,0),(1,1)
Tiling bisect_unit_tiling() {
    Tiling t;
    t.disc = 1;
    t.tile_sq = {QuadVal(1), QuadVal(1), QuadVal(2)};
    t.outer = {pt(0, 0), pt(2, 0), pt(1, 1)};
    t.tiles = {Triangle{pt(0, 0), pt(1, 0), pt(1, 1)},
               Triangle{pt(2, 0), pt(1, 0), pt(1, 1)}};
    return t;
}

// hand-rolled 4-tile subdivision of the right triangle (0,0),(4,0),(0,3)
Tiling quadratic4_tiling() {
    Tiling t;
    t.disc = 1;
    t.tile_sq = {QuadVal(rr(9, 4)), QuadVal(4), QuadVal(rr(25, 4))};
    t.outer = {pt(0, 0), pt(4, 0), pt(0, 3)};
    const auto v = [](long long i, long long j) {
        return ptr(Rational(2 * i), make_rational(Int(3 * j), Int(2)));
    };
    t.tiles = {Triangle{v(0, 0), v(1, 0), v(0, 1)},
               Triangle{v(1, 0), v(2, 0), v(1, 1)},
               Triangle{v(0, 1), v(1, 1), v(0, 2)},
               Triangle{v(1, 0), v(1, 1), v(0, 1)}};
    return t;
}

// equilateral of side 2 split by its altitude into two 30-60-90 halves
Tiling equilateral_halves_tiling() {
    Tiling t;
    t.disc = 3;
    t.tile_sq = {QuadVal(1), QuadVal(3), QuadVal(4)};
    const Point2 apex{QuadVal(1), s3(0, 1)};
    t.outer = {pt(0, 0), pt(2, 0), apex};
    t.tiles = {Triangle{pt(0, 0), pt(1, 0), apex},
               Triangle{pt(2, 0), pt(1, 0), apex}};
    return t;
}

}  // namespace

TEST_CASE("orientation and cross products, frozen") {
    CHECK(orient(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orient(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
    CHECK(orient(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
    CHECK(orient(pt(5, 5), pt(5, 5), pt(7, 1)) == 0);

    CHECK(cross(pt(3, 0) - pt(0, 0), pt(0, 4) - pt(0, 0)) == QuadVal(12));
    CHECK(dot(pt(3, 4) - pt(0, 0), pt(4, -3) - pt(0, 0)) == QuadVal(0));

    // equilateral with apex (1, sqrt(3)) is counterclockwise
    const Point2 apex{QuadVal(1), s3(0, 1)};
    CHECK(orient(pt(0, 0), pt(2, 0), apex) == 1);
    CHECK(doubled_area(Triangle{pt(0, 0), pt(2, 0), apex}) == s3(0, 2));
}

TEST_CASE("squared distances and side multisets, frozen") {
    CHECK(squared_dist(pt(0, 0), pt(3, 4)) == QuadVal(25));
    // (sqrt(3))^2 + 1 collapses to the rational 4
    const QuadVal d = squared_dist(pt(0, 0), Point2{s3(0, 1), QuadVal(1)});
    CHECK(d == QuadVal(4));
    CHECK(d.disc == 1);

    const Triangle t345{pt(0, 0), pt(3, 0), pt(0, 4)};
    const auto s = squared_sides_sorted(t345);
    CHECK(s[0] == QuadVal(9));
    CHECK(s[1] == QuadVal(16));
    CHECK(s[2] == QuadVal(25));

    const Triangle equi{pt(0, 0), pt(2, 0), Point2{QuadVal(1), s3(0, 1)}};
    const auto e = squared_sides_sorted(equi);
    CHECK(e[0] == QuadVal(4));
    CHECK(e[1] == QuadVal(4));
    CHECK(e[2] == QuadVal(4));
}

TEST_CASE("congruence is SSS with reflections allowed") {
    const Triangle a{pt(0, 0), pt(3, 0), pt(0, 4)};
    const Triangle shifted{pt(10, 1), pt(13, 1), pt(10, 5)};
    const Triangle mirrored{pt(0, 0), pt(-3, 0), pt(0, 4)};
    const Triangle rotated{pt(0, 0), pt(0, 3), pt(-4, 0)};
    const Triangle other{pt(0, 0), pt(3, 0), pt(0, 5)};

    CHECK(congruent(a, shifted));
    CHECK(congruent(a, mirrored));
    CHECK(congruent(a, rotated));
    CHECK_FALSE(congruent(a, other));

    // relabelling vertices does not matter
    const Triangle relabeled{pt(0, 4), pt(0, 0), pt(3, 0)};
    CHECK(congruent(a, relabeled));
}

TEST_CASE("point in closed triangle") {
    const Triangle t{pt(0, 0), pt(4, 0), pt(0, 4)};
    CHECK(point_in_closed_triangle(pt(1, 1), t));
    CHECK(point_in_closed_triangle(pt(0, 0), t));   // vertex
    CHECK(point_in_closed_triangle(pt(2, 0), t));   // edge interior
    CHECK(point_in_closed_triangle(pt(2, 2), t));   // hypotenuse
    CHECK_FALSE(point_in_closed_triangle(pt(3, 3), t));
    CHECK_FALSE(point_in_closed_triangle(pt(-1, 0), t));
    CHECK_FALSE(point_in_closed_triangle(ptr(rr(1, 2), rr(-1, 1000)), t));

    // clockwise triangle works the same
    const Triangle cw{pt(0, 0), pt(0, 4), pt(4, 0)};
    CHECK(point_in_closed_triangle(pt(1, 1), cw));
    CHECK_FALSE(point_in_closed_triangle(pt(3, 3), cw));

    const Triangle degen{pt(0, 0), pt(1, 1), pt(2, 2)};
    CHECK_THROWS_AS(point_in_closed_triangle(pt(0, 1), degen), std::domain_error);

    // surd coordinates: centroid of the equilateral is inside
    const Triangle equi{pt(0, 0), pt(2, 0), Point2{QuadVal(1), s3(0, 1)}};
    CHECK(point_in_closed_triangle(Point2{QuadVal(1), s3(0, rr(1, 3))}, equi));
    CHECK_FALSE(point_in_closed_triangle(Point2{QuadVal(1), s3(0, rr(3, 2))}, equi));
}

TEST_CASE("interior intersection: touching is not overlapping") {
    const Triangle a{pt(0, 0), pt(2, 0), pt(0, 2)};
    const Triangle b{pt(2, 0), pt(2, 2), pt(0, 2)};  // shares the hypotenuse
    const Triangle c{pt(2, 0), pt(4, 0), pt(2, 2)};  // shares one vertex with a
    const Triangle inside{ptr(rr(1, 4), rr(1, 4)), ptr(rr(3, 4), rr(1, 4)),
                          ptr(rr(1, 4), rr(3, 4))};
    const Triangle far{pt(10, 10), pt(12, 10), pt(10, 12)};
    const Triangle below{pt(0, 0), pt(2, 0), pt(1, -1)};  // partial shared edge
    const Triangle shifted{ptr(rr(1, 10), 0), ptr(rr(21, 10), 0), ptr(rr(1, 10), 2)};

    CHECK_FALSE(interiors_intersect(a, b));
    CHECK_FALSE(interiors_intersect(a, c));
    CHECK_FALSE(interiors_intersect(a, far));
    CHECK_FALSE(interiors_intersect(a, below));
    CHECK(interiors_intersect(a, a));
    CHECK(interiors_intersect(a, inside));
    CHECK(interiors_intersect(a, shifted));

    // symmetry
    for (const Triangle* u : {&b, &c, &inside, &far, &below, &shifted}) {
        CHECK(interiors_intersect(a, *u) == interiors_intersect(*u, a));
    }

    // crossing triangles with no vertex inside the other
    const Triangle star1{pt(0, 0), pt(6, 0), pt(3, 9)};
    const Triangle star2{pt(0, 6), pt(6, 6), pt(3, -3)};
    CHECK(interiors_intersect(star1, star2));
}

TEST_CASE("interior intersection over Q(sqrt(3))") {
    // two tiles of the 30-30-120 shape sharing only the vertex (sqrt(3), 0)
    const Triangle left{pt(0, 0), Point2{s3(0, 1), QuadVal(0)},
                        Point2{s3(0, rr(1, 2)), QuadVal(rr(1, 2))}};
    const Triangle right{Point2{s3(0, 1), QuadVal(0)}, Point2{s3(0, 2), QuadVal(0)},
                         Point2{s3(0, rr(3, 2)), QuadVal(rr(1, 2))}};
    CHECK_FALSE(interiors_intersect(left, right));

    // sliding the right tile slightly left makes the interiors overlap
    const Point2 shift{QuadVal(rr(-1, 10)), QuadVal(0)};
    const Triangle overlapping{right[0] + shift, right[1] + shift, right[2] + shift};
    CHECK(interiors_intersect(left, overlapping));
}

TEST_CASE("bounding boxes") {
    const Triangle a{pt(0, 0), pt(2, 0), pt(0, 2)};
    const BBox ba = bounding_box(a);
    CHECK(ba.xlo == QuadVal(0));
    CHECK(ba.xhi == QuadVal(2));
    CHECK(ba.ylo == QuadVal(0));
    CHECK(ba.yhi == QuadVal(2));

    const Triangle touch{pt(2, 0), pt(4, 0), pt(2, 2)};
    const Triangle far{pt(5, 5), pt(6, 5), pt(5, 6)};
    const Triangle lap{pt(1, 1), pt(3, 1), pt(1, 3)};
    CHECK(boxes_separated(ba, bounding_box(touch)));
    CHECK(boxes_separated(ba, bounding_box(far)));
    CHECK_FALSE(boxes_separated(ba, bounding_box(lap)));
}

TEST_CASE("verifier accepts hand-built tilings") {
    for (const Tiling& t : {bisect_unit_tiling(), quadratic4_tiling(),
                            equilateral_halves_tiling()}) {
        const VerifyReport rep = verify_tiling(t);
        INFO(rep.first_failure());
        CHECK(rep.valid);
        CHECK(static_cast<bool>(rep));
        CHECK(rep.structure.pass);
        CHECK(rep.congruence.pass);
        CHECK(rep.area.pass);
        CHECK(rep.containment.pass);
        CHECK(rep.overlap.pass);
        CHECK(rep.first_failure().empty());
        CHECK(rep.n_tiles == t.tiles.size());
    }
    CHECK_FALSE(verify_tiling(bisect_unit_tiling()).is_square_count);
    CHECK(verify_tiling(quadratic4_tiling()).is_square_count);
}

TEST_CASE("verifier invariances") {
    const Tiling base = quadratic4_tiling();

    SECTION("translation by a rational vector") {
        Tiling t = base;
        const Point2 d = ptr(rr(7, 3), rr(-2, 1));
        for (Point2& p : t.outer) p = p + d;
        for (Triangle& tri : t.tiles)
            for (Point2& p : tri) p = p + d;
        CHECK(verify_tiling(t).valid);
    }
    SECTION("reflection across the y-axis") {
        Tiling t = base;
        const auto flip = [](Point2& p) { p.x = QuadVal(0) - p.x; };
        for (Point2& p : t.outer) flip(p);
        for (Triangle& tri : t.tiles)
            for (Point2& p : tri) flip(p);
        CHECK(verify_tiling(t).valid);
    }
    SECTION("tile list permutation and vertex relabelling") {
        Tiling t = base;
        std::reverse(t.tiles.begin(), t.tiles.end());
        std::rotate(t.tiles[0].begin(), t.tiles[0].begin() + 1, t.tiles[0].end());
        std::swap(t.tiles[1][0], t.tiles[1][2]);  // orientation flip
        CHECK(verify_tiling(t).valid);
    }
    SECTION("clockwise outer triangle") {
        Tiling t = base;
        std::swap(t.outer[1], t.outer[2]);
        CHECK(verify_tiling(t).valid);
    }
}

TEST_CASE("verifier mutations produce the right failures") {
    const Tiling base = quadratic4_tiling();

    SECTION("moved vertex breaks congruence") {
        Tiling t = base;
        t.tiles[2][1].x = t.tiles[2][1].x + QuadVal(rr(1, 1000));
        const VerifyReport rep = verify_tiling(t);
        CHECK_FALSE(rep.valid);
        CHECK_FALSE(rep.congruence.pass);
        CHECK(rep.congruence.detail ==
              "tile 2 is not congruent to the declared tile shape");
    }
    SECTION("deleted tile breaks the area sum") {
        Tiling t = base;
        t.tiles.pop_back();
        const VerifyReport rep = verify_tiling(t);
        CHECK_FALSE(rep.valid);
        CHECK(rep.congruence.pass);
        CHECK(rep.containment.pass);
        CHECK(rep.overlap.pass);
        CHECK_FALSE(rep.area.pass);
        CHECK(rep.area.detail == "tile areas do not sum to the outer area");
        CHECK(rep.n_tiles == 3);
    }
    SECTION("duplicated tile breaks disjointness") {
        Tiling t = base;
        t.tiles.push_back(t.tiles[0]);
        const VerifyReport rep = verify_tiling(t);
        CHECK_FALSE(rep.valid);
        CHECK_FALSE(rep.overlap.pass);
        CHECK(rep.overlap.detail == "tiles 0 and 4 have intersecting interiors");
        CHECK_FALSE(rep.area.pass);
    }
    SECTION("tile translated outside breaks containment, not area") {
        Tiling t = base;
        const Point2 d = pt(100, 0);
        for (Point2& p : t.tiles[1]) p = p + d;
        const VerifyReport rep = verify_tiling(t);
        CHECK_FALSE(rep.valid);
        CHECK(rep.area.pass);  // translation preserves area
        CHECK_FALSE(rep.containment.pass);
        CHECK(rep.containment.detail ==
              "tile 1 vertex 0 lies outside the outer triangle");
    }
    SECTION("degenerate placed tile is reported by the congruence check") {
        Tiling t = base;
        t.tiles[3] = Triangle{pt(0, 0), pt(1, 0), pt(2, 0)};
        const VerifyReport rep = verify_tiling(t);
        CHECK_FALSE(rep.valid);
        CHECK(rep.congruence.detail == "tile 3 is degenerate");
    }
    SECTION("wrong declared shape fails on the first tile") {
        Tiling t = base;
        t.tile_sq = {QuadVal(1), QuadVal(1), QuadVal(1)};
        const VerifyReport rep = verify_tiling(t);
        CHECK_FALSE(rep.valid);
        CHECK(rep.congruence.detail ==
              "tile 0 is not congruent to the declared tile shape");
    }
}

TEST_CASE("verifier structural rejections") {
    const Tiling base = quadratic4_tiling();

    SECTION("no tiles") {
        Tiling t = base;
        t.tiles.clear();
        const VerifyReport rep = verify_tiling(t);
        CHECK_FALSE(rep.valid);
        CHECK(rep.structure.detail == "tiling has no tiles");
        CHECK(rep.congruence.detail == "not evaluated: structure check failed");
        CHECK(rep.first_failure() == "tiling has no tiles");
    }
    SECTION("non-squarefree discriminant") {
        Tiling t = base;
        t.disc = 12;
        CHECK(verify_tiling(t).structure.detail ==
              "declared discriminant is not a squarefree positive integer");
    }
    SECTION("mixed coordinate discriminants") {
        Tiling t = equilateral_halves_tiling();
        t.tiles[0][0].x = QuadVal(Rational(0), Rational(1), Int(5));
        const VerifyReport rep = verify_tiling(t);
        CHECK_FALSE(rep.valid);
        CHECK(rep.structure.detail ==
              "tile 0 coordinate discriminant differs from the tiling discriminant");
    }
    SECTION("unsorted tile side lengths") {
        Tiling t = base;
        std::swap(t.tile_sq[0], t.tile_sq[2]);
        CHECK(verify_tiling(t).structure.detail ==
              "tile side lengths are not sorted ascending");
    }
    SECTION("nonpositive tile side") {
        Tiling t = base;
        t.tile_sq[0] = QuadVal(0);
        CHECK(verify_tiling(t).structure.detail ==
              "tile side lengths must be positive");
    }
    SECTION("degenerate declared shape") {
        Tiling t = base;
        t.tile_sq = {QuadVal(1), QuadVal(1), QuadVal(4)};  // lengths 1, 1, 2
        CHECK(verify_tiling(t).structure.detail ==
              "declared tile shape is degenerate");
    }
    SECTION("degenerate outer triangle") {
        Tiling t = base;
        t.outer = {pt(0, 0), pt(2, 2), pt(4, 4)};
        CHECK(verify_tiling(t).structure.detail == "outer triangle is degenerate");
    }
}
