#pragma once
// Exact tiling constructors and tile-count certificates.
//
// Constructors emit Tiling values with canonical placements (one vertex at
// the origin, one side on the positive x-axis) and exact coordinates:
//   quadratic_tiling    - the n^2-cell subdivision of any triangle,
//   bisect_isosceles    - an isosceles triangle halved by its apex altitude,
//   hexagonal_tiling    - the equilateral triangle cut into 3(k+1)^2
//                         congruent isosceles 30-30-120 tiles (k rows of
//                         hexagons, each split into six tiles, plus k+1
//                         border tiles per side), coordinates in Q(sqrt(3)),
//   tri_306090_tiling   - the 30-60-90 triangle cut into 3k^2 copies of
//                         itself (3-cell self-similar base, refined k-fold),
//   biquadratic_tiling  - a right triangle with legs M:K cut into M^2 + K^2
//                         tiles similar to itself by the altitude from the
//                         right angle,
//   glue_append_similar - paste a quadratically subdivided similar triangle
//                         onto one outer side so the union is again a
//                         triangle (exact straight-angle test at the seam).
//
// Count certificates cover the five witness families of the classifier
// (conditions 4 through 8).  Cases 4, 6, and 7 carry the exact tile count;
// cases 5 and 8 carry the count's square-class representative, which is all
// that squareness depends on.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tritile/classifier.hpp"
#include "tritile/geometry.hpp"
#include "tritile/nonsquare.hpp"
#include "tritile/quadval.hpp"
#include "tritile/rational.hpp"
#include "tritile/tiling.hpp"

namespace tritile {
namespace detail {

// shared squarefree discriminant of a triangle's coordinates (1 if rational)
inline Int derive_disc(const Triangle& t) {
    Int disc = 1;
    for (const Point2& p : t) {
        for (const QuadVal* v : {&p.x, &p.y}) {
            if (v->disc == 1) continue;
            if (disc == 1) {
                disc = v->disc;
            } else if (disc != v->disc) {
                throw std::domain_error("mixed coordinate discriminants");
            }
        }
    }
    return disc;
}

// The n^2 cells of the subdivision of tri by lines parallel to its sides:
// lattice v(i,j) = tri0 + (i/n)(tri1-tri0) + (j/n)(tri2-tri0), upward cell
// (v(i,j), v(i+1,j), v(i,j+1)) and downward cell (v(i+1,j), v(i+1,j+1),
// v(i,j+1)); row-major order, upward before the downward cell to its right.
inline std::vector<Triangle> quadratic_cells(const Triangle& tri, int n) {
    std::vector<std::vector<Point2>> v(static_cast<std::size_t>(n) + 1);
    const Point2 d1 = tri[1] - tri[0], d2 = tri[2] - tri[0];
    for (int i = 0; i <= n; ++i) {
        v[i].reserve(static_cast<std::size_t>(n) + 1 - i);
        for (int j = 0; j <= n - i; ++j) {
            const QuadVal fi(make_rational(Int(i), Int(n)));
            const QuadVal fj(make_rational(Int(j), Int(n)));
            v[i].push_back(tri[0] + fi * d1 + fj * d2);
        }
    }
    std::vector<Triangle> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i + j < n; ++i) {
            cells.push_back(Triangle{v[i][j], v[i + 1][j], v[i][j + 1]});
            if (i + j < n - 1)
                cells.push_back(Triangle{v[i + 1][j], v[i + 1][j + 1], v[i][j + 1]});
        }
    }
    return cells;
}

}  // namespace detail

inline Tiling quadratic_tiling(const Triangle& outer, int n) {
    if (n < 1) throw std::domain_error("quadratic_tiling: n must be a positive integer");
    if (orient(outer[0], outer[1], outer[2]) == 0)
        throw std::domain_error("quadratic_tiling: degenerate outer triangle");
    Tiling t;
    t.disc = detail::derive_disc(outer);
    t.tile_sq = squared_sides_sorted(outer);
    const QuadVal inv_nsq(make_rational(Int(1), Int(n) * n));
    for (QuadVal& q : t.tile_sq) q = q * inv_nsq;
    t.outer = outer;
    t.tiles = detail::quadratic_cells(outer, n);
    return t;
}

// Isosceles triangle with the given base and apex height, halved by the
// altitude from the apex.  The height is height * sqrt(disc), so rational
// heights use disc = 1 and e.g. the equilateral of side 2 is (2, 1, 3).
inline Tiling bisect_isosceles(const Rational& base, const Rational& height,
                               const Int& disc = 1) {
    if (base <= 0 || height <= 0)
        throw std::domain_error("bisect_isosceles: base and height must be positive");
    if (disc < 1 || squarefree_part(disc).first != disc)
        throw std::domain_error(
            "bisect_isosceles: discriminant must be a squarefree positive integer");
    const Rational w = base / 2;
    const QuadVal apex_y = disc == 1 ? QuadVal(height) : QuadVal(Rational(0), height, disc);
    const Point2 left{QuadVal(0), QuadVal(0)};
    const Point2 right{QuadVal(base), QuadVal(0)};
    const Point2 foot{QuadVal(w), QuadVal(0)};
    const Point2 apex{QuadVal(w), apex_y};
    Tiling t;
    t.disc = disc;
    const Rational hsq = height * height * Rational(disc);
    std::array<Rational, 3> s{w * w, hsq, w * w + hsq};
    std::sort(s.begin(), s.end());
    t.tile_sq = {QuadVal(s[0]), QuadVal(s[1]), QuadVal(s[2])};
    t.outer = {left, right, apex};
    t.tiles = {Triangle{left, foot, apex}, Triangle{right, foot, apex}};
    return t;
}

inline Tiling hexagonal_tiling(int k) {
    if (k < 1) throw std::domain_error("hexagonal_tiling: k must be a positive integer");
    const Int D = 3;
    const Rational half(1, 2);
    const auto surd3 = [&](const Rational& c) { return QuadVal(Rational(0), c, D); };
    // x coordinates are xs * sqrt(3), y coordinates rational
    const auto pt = [&](const Rational& xs, const Rational& y) {
        return Point2{surd3(xs), QuadVal(y)};
    };
    const int kp1 = k + 1;

    Tiling t;
    t.disc = D;
    t.tile_sq = {QuadVal(1), QuadVal(1), QuadVal(3)};
    // equilateral with side (k+1)*sqrt(3); its height 3(k+1)/2 is rational
    t.outer = {pt(0, 0), pt(kp1, 0), pt(Rational(kp1) / 2, Rational(3 * kp1) / 2)};

    // 120-degree rotation about the centroid
    const Point2 c = pt(Rational(kp1) / 2, Rational(kp1) / 2);
    const QuadVal mhalf(Rational(-1, 2));
    const QuadVal r3half = surd3(half);
    const auto rot = [&](const Point2& p) {
        const QuadVal dx = p.x - c.x, dy = p.y - c.y;
        return Point2{c.x + mhalf * dx - r3half * dy, c.y + r3half * dx + mhalf * dy};
    };

    // k+1 border tiles along the bottom side: base sqrt(3), apex height 1/2
    std::vector<Triangle> bottom;
    bottom.push_back(Triangle{pt(0, 0), pt(1, 0), pt(half, half)});
    for (int j = 1; j <= k - 1; ++j)
        bottom.push_back(Triangle{pt(j, 0), pt(j + 1, 0), pt(Rational(2 * j + 1) / 2, half)});
    bottom.push_back(
        Triangle{pt(kp1, 0), pt(k, 0), pt(Rational(2 * kp1 - 1) / 2, half)});

    for (const Triangle& tri : bottom) t.tiles.push_back(tri);
    for (const Triangle& tri : bottom)
        t.tiles.push_back(Triangle{rot(tri[0]), rot(tri[1]), rot(tri[2])});
    for (const Triangle& tri : bottom)
        t.tiles.push_back(
            Triangle{rot(rot(tri[0])), rot(rot(tri[1])), rot(rot(tri[2]))});

    // 1 + 2 + ... + k hexagons of six tiles each, in bowling-pin rows;
    // pointy-top unit hexagons, three ears plus three central tiles
    for (int r = 0; r < k; ++r) {
        for (int j = 1; j <= k - r; ++j) {
            const Point2 hc = pt(Rational(2 * j + r) / 2, 1 + Rational(3 * r) / 2);
            const std::array<Point2, 6> V{
                Point2{hc.x, hc.y - QuadVal(1)},
                Point2{hc.x + r3half, hc.y - QuadVal(half)},
                Point2{hc.x + r3half, hc.y + QuadVal(half)},
                Point2{hc.x, hc.y + QuadVal(1)},
                Point2{hc.x - r3half, hc.y + QuadVal(half)},
                Point2{hc.x - r3half, hc.y - QuadVal(half)},
            };
            t.tiles.push_back(Triangle{V[5], V[0], V[1]});
            t.tiles.push_back(Triangle{V[1], V[2], V[3]});
            t.tiles.push_back(Triangle{V[3], V[4], V[5]});
            t.tiles.push_back(Triangle{hc, V[1], V[3]});
            t.tiles.push_back(Triangle{hc, V[3], V[5]});
            t.tiles.push_back(Triangle{hc, V[5], V[1]});
        }
    }
    return t;
}

inline Tiling tri_306090_tiling(int k) {
    if (k < 1) throw std::domain_error("tri_306090_tiling: k must be a positive integer");
    const Int D = 3;
    const auto surd3 = [&](const Rational& c) { return QuadVal(Rational(0), c, D); };
    const Point2 o{QuadVal(0), QuadVal(0)};
    const Point2 kx{QuadVal(Rational(k)), QuadVal(0)};
    const Point2 ex{QuadVal(Rational(3 * k)), QuadVal(0)};
    const Point2 ey{QuadVal(0), surd3(Rational(k))};
    const Point2 mid{QuadVal(Rational(3 * k) / 2), surd3(Rational(k) / 2)};
    Tiling t;
    t.disc = D;
    t.tile_sq = {QuadVal(1), QuadVal(3), QuadVal(4)};
    t.outer = {o, ex, ey};
    // self-similar 3-cell base, each cell congruent with sides (k, k*sqrt(3), 2k)
    for (const Triangle& b : {Triangle{o, kx, ey}, Triangle{kx, ex, mid},
                              Triangle{kx, mid, ey}}) {
        auto cells = detail::quadratic_cells(b, k);
        t.tiles.insert(t.tiles.end(), cells.begin(), cells.end());
    }
    return t;
}

// Right triangle with legs M*N and K*N (N = M^2 + K^2), split by the altitude
// from the right angle at the origin; the two similar halves are subdivided
// into M^2 and K^2 cells.  Every cell has squared sides {M^2 N, K^2 N, N^2},
// so the coordinates stay rational even though the side lengths do not.
inline Tiling biquadratic_tiling(int M, int K) {
    if (M < 1 || K < 1)
        throw std::domain_error("biquadratic_tiling: M and K must be positive integers");
    const Int Mi(M), Ki(K);
    const Int N = Mi * Mi + Ki * Ki;
    const auto ipt = [](const Int& x, const Int& y) {
        return Point2{QuadVal(Rational(x)), QuadVal(Rational(y))};
    };
    const Point2 C = ipt(0, 0);
    const Point2 A = ipt(Mi * N, 0);
    const Point2 B = ipt(0, Ki * N);
    const Point2 H = ipt(Mi * Ki * Ki, Mi * Mi * Ki);  // foot of the altitude
    Tiling t;
    t.disc = 1;
    std::array<Rational, 3> s{Rational(Mi * Mi * N), Rational(Ki * Ki * N),
                              Rational(N * N)};
    std::sort(s.begin(), s.end());
    t.tile_sq = {QuadVal(s[0]), QuadVal(s[1]), QuadVal(s[2])};
    t.outer = {C, A, B};
    for (const auto& [half, n] : {std::pair<Triangle, int>{Triangle{A, H, C}, M},
                                  std::pair<Triangle, int>{Triangle{B, H, C}, K}}) {
        auto cells = detail::quadratic_cells(half, n);
        t.tiles.insert(t.tiles.end(), cells.begin(), cells.end());
    }
    return t;
}

// Append, along outer side (outer_side, outer_side+1), a triangle similar to
// the tile with the matched tile side tile_side, subdivided so its cells are
// congruent to the tile.  swap_legs exchanges which remaining tile side meets
// the first endpoint of the chosen outer side.  The union must again be a
// triangle: exactly one seam endpoint's angles must sum to a straight angle.
// Only the base's outer triangle, tile shape, and discriminant are consulted;
// callers are responsible for starting from a verified tiling.
inline Tiling glue_append_similar(const Tiling& base, int outer_side, int tile_side,
                                  bool swap_legs = false) {
    if (outer_side < 0 || outer_side > 2 || tile_side < 0 || tile_side > 2)
        throw std::domain_error("glue_append_similar: side indices must be 0, 1, or 2");
    const Point2& P = base.outer[outer_side];
    const Point2& Q = base.outer[(outer_side + 1) % 3];
    const Point2& V = base.outer[(outer_side + 2) % 3];
    const int ov = orient(P, Q, V);
    if (ov == 0) throw std::domain_error("glue_append_similar: degenerate outer triangle");

    const QuadVal qe = base.tile_sq[tile_side];
    const int r1 = tile_side == 0 ? 1 : 0;
    const int r2 = tile_side == 2 ? 1 : 2;
    const QuadVal qf = swap_legs ? base.tile_sq[r2] : base.tile_sq[r1];  // meets P
    const QuadVal qg = swap_legs ? base.tile_sq[r1] : base.tile_sq[r2];  // meets Q
    if (quad_sign(qe) <= 0 || quad_sign(qf) <= 0 || quad_sign(qg) <= 0)
        throw std::domain_error("glue_append_similar: tile sides must be positive");

    const QuadVal len_sq = squared_dist(P, Q);
    const QuadVal scale_sq = len_sq / qe;
    std::optional<Int> m;
    if (scale_sq.is_rational() && rat_den(scale_sq.rat) == 1)
        m = is_perfect_square(rat_num(scale_sq.rat));
    if (!m || *m < 1)
        throw std::domain_error(
            "glue_append_similar: the outer side is not a positive integer multiple of "
            "the chosen tile side");
    if (*m > 10000)
        throw std::domain_error("glue_append_similar: appended subdivision too large");

    // W = P + u*(Q-P) + v*perp(Q-P); |PW|^2 = scale^2*qf and |QW|^2 = scale^2*qg
    const QuadVal u = (qe + qf - qg) / (QuadVal(2) * qe);
    const QuadVal v_sq = qf / qe - u * u;
    if (quad_sign(v_sq) <= 0)
        throw std::domain_error(
            "glue_append_similar: the chosen tile sides do not form a triangle");
    const auto v_root = sqrt_in_field(v_sq, base.disc);
    if (!v_root)
        throw std::domain_error(
            "glue_append_similar: the glued apex does not lie in the tiling's "
            "coordinate field");
    const QuadVal v_signed = ov > 0 ? -*v_root : *v_root;  // opposite side from V

    const Point2 d = Q - P;
    const Point2 perp{QuadVal(0) - d.y, d.x};
    const Point2 W = P + u * d + v_signed * perp;

    const bool straight_p = orient(V, P, W) == 0;
    const bool straight_q = orient(V, Q, W) == 0;
    if (straight_p == straight_q)
        throw std::domain_error(
            straight_p
                ? "glue_append_similar: both seam endpoints straighten; the union "
                  "degenerates"
                : "glue_append_similar: no seam endpoint straightens; the union is "
                  "not a triangle");

    const Triangle appended{P, Q, W};
    const Triangle new_outer = straight_p ? Triangle{V, W, Q} : Triangle{V, P, W};
    if (!(doubled_area(new_outer) ==
          doubled_area(base.outer) + doubled_area(appended)))
        throw std::domain_error("glue_append_similar: the union region is not convex");

    Tiling t;
    t.disc = base.disc;
    t.tile_sq = base.tile_sq;
    t.outer = new_outer;
    t.tiles = base.tiles;
    auto cells = detail::quadratic_cells(appended, m->convert_to<int>());
    t.tiles.insert(t.tiles.end(), cells.begin(), cells.end());
    return t;
}

// Bookkeeping form of the glue step: a base tiling of n tiles whose outer
// side has length side_len, extended with tile side tile_side_len, gains
// (side_len / tile_side_len)^2 tiles.
inline Int glue_count_formula(const Int& n_base, const Int& side_len,
                              const Int& tile_side_len) {
    if (n_base < 1 || side_len < 1 || tile_side_len < 1)
        throw std::domain_error("glue_count_formula: arguments must be positive");
    if (side_len % tile_side_len != 0)
        throw std::domain_error(
            "glue_count_formula: the tile side must divide the outer side");
    const Int q = side_len / tile_side_len;
    return n_base + q * q;
}

// ---------------------------------------------------------------------------
// Tile-count certificates for the classifier's witness families.

struct CountCertificate {
    int case_id = 0;               // classifier condition, 4..8
    std::vector<Rational> params;  // input parameters, in call order
    Rational n_expression;         // tile count (4, 6, 7) or square-class rep (5, 8)
    bool is_square_possible = false;
    std::string note;              // divisibility flags / square-class caveat
};

inline const char* kSquareClassNote =
    "square-class representative: the tile count equals this value times the "
    "square of a rational";

// Count m^2 * b * (a+b) for the Eisenstein pair (a, b); never a square, since
// b*(b+a) cannot be a square alongside a^2 + ab + b^2.
inline CountCertificate count_case4(const Int& a, const Int& b, const Int& m) {
    if (a < 1 || b < 1 || boost::multiprecision::gcd(a, b) != 1)
        throw std::domain_error("count_case4: a and b must be coprime positive integers");
    if (m < 1) throw std::domain_error("count_case4: m must be a positive integer");
    const Int norm = a * a + a * b + b * b;
    if (!is_perfect_square(norm))
        throw std::domain_error("count_case4: a^2 + ab + b^2 = " + norm.str() +
                                " is not a perfect square");
    const CoprimePairSquares flags = coprime_pair_squares(b, a);
    CountCertificate cert;
    cert.case_id = 4;
    cert.params = {Rational(a), Rational(b), Rational(m)};
    cert.n_expression = Rational(m * m * b * (a + b));
    cert.is_square_possible = flags.product_is_square;
    return cert;
}

inline CountCertificate count_case5(const Rational& t) {
    if (!(t > 0 && t < Rational(1, 3)))
        throw std::domain_error("count_case5: t must lie in (0, 1/3)");
    CountCertificate cert;
    cert.case_id = 5;
    cert.params = {t};
    cert.n_expression = eval_nonsquare_ratio(t);
    cert.is_square_possible = rat_is_square(cert.n_expression).has_value();
    cert.note = kSquareClassNote;
    return cert;
}

// Count M^2 (2-s^2)(3-s^2) / ((1-s)^2 (2+s)^2); the square class is that of
// (2-s^2)(3-s^2), which is never a rational square.
inline CountCertificate count_case6(const Int& M, const Rational& s) {
    if (M < 1) throw std::domain_error("count_case6: M must be a positive integer");
    if (!(s > 0 && s < 1)) throw std::domain_error("count_case6: s must lie in (0, 1)");
    const Rational num = (2 - s * s) * (3 - s * s);
    const Rational den = (1 - s) * (1 - s) * (2 + s) * (2 + s);
    CountCertificate cert;
    cert.case_id = 6;
    cert.params = {Rational(M), s};
    cert.n_expression = Rational(M) * Rational(M) * num / den;
    cert.is_square_possible = rat_is_square(eval_nonsquare_quartic(s)).has_value();
    return cert;
}

struct TriquadraticResult {
    CountCertificate cert;
    TileShape tile;
};

// Count N = 2K^2 - M^2 with integral tile (M, K - M^2/K, K); requires K | M^2
// and M < K.  Inputs where M does not divide K are accepted but flagged, and
// square N is reported honestly via is_square_possible.
inline TriquadraticResult triquadratic_params(const Int& M, const Int& K) {
    if (M < 1 || K < 1)
        throw std::domain_error("triquadratic_params: M and K must be positive integers");
    if (!(M < K)) throw std::domain_error("triquadratic_params: M must be smaller than K");
    if ((M * M) % K != 0)
        throw std::domain_error("triquadratic_params: K must divide M^2");
    const Int b = K - (M * M) / K;
    const Int N = 2 * K * K - M * M;
    if (M * M != K * K - b * K)
        throw std::logic_error("triquadratic_params: tile relation violated");
    TriquadraticResult out;
    out.cert.case_id = 7;
    out.cert.params = {Rational(M), Rational(K)};
    out.cert.n_expression = Rational(N);
    out.cert.is_square_possible = is_perfect_square(N).has_value();
    if (K % M != 0) out.cert.note = "M does not divide K (only K | M^2 holds)";
    out.tile = TileShape{TileKind::GROUP1, std::array<Int, 3>{M, b, K}};
    return out;
}

inline CountCertificate count_case8(const Rational& t) {
    if (!(t > 0 && t < Rational(1, 3)))
        throw std::domain_error("count_case8: t must lie in (0, 1/3)");
    CountCertificate cert;
    cert.case_id = 8;
    cert.params = {t};
    cert.n_expression = eval_nonsquare_shifted(t);
    cert.is_square_possible = rat_is_square(cert.n_expression).has_value();
    cert.note = kSquareClassNote;
    return cert;
}

}  // namespace tritile
