#pragma once

// Decision engine: which of the eight tiling conditions a triangle satisfies,
// with exact witnesses, and the derived tile shape for each. A triangle
// admits a tiling into congruent non-square-count pieces iff at least one
// condition holds:
//   (1) isosceles;
//   (2) right with rational legs ratio M/K (lowest terms), M^2 + K^2 not a
//       perfect square;
//   (3) angles exactly (pi/6, pi/2, pi/3);
//   (4) one angle pi/3 and sqrt(3) tan(A/2) rational (A the smaller of the
//       other two);
//   (5) B = 2A and sqrt(3) tan(A/2) rational;
//   (6) B = 2A and 2 sin(A/2) rational;
//   (7) C = A/2 + B and 2 sin(A/4) = M/K rational, 2K^2 - M^2 not a perfect
//       square;
//   (8) C = 2A + B/2 and sqrt(3) tan(A/2) rational.
// Triangles whose angles are all rational multiples of pi can only qualify
// through (1)-(3); the engine enforces that gate exactly.

#include "tritile/angles.hpp"
#include "tritile/rational.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tritile {

enum class FamilyTag { C60, B2A_TAN, B2A_SIN, HALF_SUM, TWO_PLUS_HALF };

inline std::string family_tag_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::C60: return "C60";
        case FamilyTag::B2A_TAN: return "B2A_TAN";
        case FamilyTag::B2A_SIN: return "B2A_SIN";
        case FamilyTag::HALF_SUM: return "HALF_SUM";
        case FamilyTag::TWO_PLUS_HALF: return "TWO_PLUS_HALF";
    }
    throw std::logic_error("family_tag_name: unknown tag");
}

inline std::optional<FamilyTag> family_tag_from_name(std::string_view name) {
    for (FamilyTag tag : {FamilyTag::C60, FamilyTag::B2A_TAN, FamilyTag::B2A_SIN,
                          FamilyTag::HALF_SUM, FamilyTag::TWO_PLUS_HALF})
        if (name == family_tag_name(tag)) return tag;
    return std::nullopt;
}

struct SidesSpec { Rational a, b, c; };
struct AnglesPiSpec { Rational pa, pb, pc; };           // angles (pa, pb, pc) * pi
struct LegsSpec { Int m, k; };                          // right triangle, legs m and k
struct FamilySpec { FamilyTag tag; std::vector<Rational> params; };
using TriangleSpec = std::variant<SidesSpec, AnglesPiSpec, LegsSpec, FamilySpec>;

enum class TileKind {
    GROUP2,        // angles (alpha, beta, 2pi/3), rational sides
    GROUP1,        // angles (2alpha, beta, alpha + beta), rational sides
    RIGHT,         // right tile similar to half/all of the input triangle
    COMMENSURATE,  // the 30-60-90 tile
};

struct TileShape {
    TileKind kind;
    std::optional<std::array<Int, 3>> sides;  // primitive triple when rational
};

inline bool operator==(const TileShape& a, const TileShape& b) {
    return a.kind == b.kind && a.sides == b.sides;
}

struct Verdict {
    std::set<int> conditions;
    std::map<int, std::vector<Rational>> witnesses;  // 2:(M,K) 4,5,8:(t) 6:(s) 7:(M,K,N)
    std::map<int, TileShape> tile_shapes;
    std::vector<std::string> diagnostics;
    bool admits_nonsquare = false;
};

// Tile shape from a satisfied condition's witness (conditions 4..8 only).
// 4, 5, 8: tile (alpha, beta, 2pi/3) with sides from t = p/q in (0, 1/3):
//          (4pq, (q - 3p)(q + p), q^2 + 3p^2) made primitive.
// 6, 7:    tile with a/c = s, b/c = 1 - s^2 from s = m/k in (0, 1):
//          (mk, k^2 - m^2, k^2) made primitive.
inline TileShape tile_shape_for(int condition, const std::vector<Rational>& witness) {
    auto primitive = [](Int a, Int b, Int c) {
        using boost::multiprecision::gcd;
        const Int g = gcd(gcd(a, b), c);
        return std::array<Int, 3>{a / g, b / g, c / g};
    };
    if (condition == 4 || condition == 5 || condition == 8) {
        if (witness.size() != 1) throw std::domain_error("tile_shape_for: expected witness (t)");
        const Rational& t = witness[0];
        if (t <= 0 || 3 * t >= 1) throw std::domain_error("tile_shape_for: t outside (0, 1/3)");
        const Int p = rat_num(t), q = rat_den(t);
        auto sides = primitive(4 * p * q, (q - 3 * p) * (q + p), q * q + 3 * p * p);
        const auto& [a, b, c] = sides;
        if (c * c != a * a + b * b + a * b)
            throw std::logic_error("tile_shape_for: 120-degree relation violated");
        return TileShape{TileKind::GROUP2, sides};
    }
    if (condition == 6 || condition == 7) {
        if (witness.empty()) throw std::domain_error("tile_shape_for: expected witness (s)");
        Rational s = witness[0];
        if (condition == 7) {
            if (witness.size() < 2) throw std::domain_error("tile_shape_for: expected (M, K)");
            s = witness[0] / witness[1];
        }
        if (s <= 0 || s >= 1) throw std::domain_error("tile_shape_for: s outside (0, 1)");
        const Int m = rat_num(s), k = rat_den(s);
        auto sides = primitive(m * k, k * k - m * m, k * k);
        const auto& [a, b, c] = sides;
        if (a * a != c * c - b * c) throw std::logic_error("tile_shape_for: double-angle relation violated");
        return TileShape{TileKind::GROUP1, sides};
    }
    throw std::domain_error("tile_shape_for: condition must be in {4..8}");
}

namespace detail {

inline void add_condition(Verdict& v, int id, std::vector<Rational> witness,
                          std::optional<TileShape> shape) {
    v.conditions.insert(id);
    v.witnesses[id] = std::move(witness);
    if (shape) v.tile_shapes[id] = *shape;
}

inline std::string fmt_int(const Int& n) { return n.str(); }

// Conditions decidable from exact angle data. `incommensurable` gates (4)-(8);
// `scale_mk` optionally fixes the reported (M, K) scale for condition 7.
inline void run_angle_engine(const AngleData& ad, bool incommensurable,
                             const std::optional<std::pair<Int, Int>>& scale_mk, Verdict& v) {
    // (1) isosceles: two equal cosines
    if (ad.cos_a == ad.cos_b || ad.cos_b == ad.cos_c || ad.cos_a == ad.cos_c)
        add_condition(v, 1, {}, TileShape{TileKind::RIGHT, std::nullopt});

    // (2) right angle; legs ratio sin J / sin K is rational here
    for (int i = 0; i < 3; ++i) {
        if (ad.cosine(i) != 0) continue;
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        Rational ratio = ad.sin_product(std::min(i, j), std::max(i, j)) /
                         ad.sin_product(std::min(i, k), std::max(i, k));
        if (ratio > 1) ratio = 1 / ratio;  // canonical M <= K
        const Int M = rat_num(ratio), K = rat_den(ratio);
        const Int N = M * M + K * K;
        if (is_perfect_square(N)) {
            v.diagnostics.push_back("condition 2 fails: M^2 + K^2 = " + fmt_int(N) +
                                    " is a perfect square (legs " + fmt_int(M) + "/" + fmt_int(K) +
                                    ")");
        } else {
            add_condition(v, 2, {Rational(M), Rational(K)},
                          TileShape{TileKind::RIGHT, std::nullopt});
        }
        break;
    }

    if (!incommensurable) {
        v.diagnostics.push_back(
            "commensurable angles: only conditions 1-3 can certify a non-square tiling");
        return;
    }

    // (4) one angle is pi/3; test the smaller of the other two
    for (int i = 0; i < 3; ++i) {
        if (ad.cosine(i) != Rational(1, 2)) continue;
        for (int j = 0; j < 3; ++j) {
            if (j == i || ad.cosine(j) <= Rational(1, 2)) continue;
            if (auto t = test_sqrt3_tan_half(ad.cosine(j)))
                add_condition(v, 4, {*t}, tile_shape_for(4, {*t}));
            break;
        }
        break;
    }

    // (5)/(6) doubling relation: cos Y = 2 cos^2 X - 1 means Y = 2X exactly
    for (int x = 0; x < 3; ++x) {
        bool found = false;
        for (int y = 0; y < 3; ++y) {
            if (y == x) continue;
            if (ad.cosine(y) != 2 * ad.cosine(x) * ad.cosine(x) - 1) continue;
            if (auto t = test_sqrt3_tan_half(ad.cosine(x)))
                add_condition(v, 5, {*t}, tile_shape_for(5, {*t}));
            if (auto s = test_sin_half(ad.cosine(x)))
                add_condition(v, 6, {*s}, tile_shape_for(6, {*s}));
            found = true;
            break;
        }
        if (found) break;
    }

    // (7) C = A/2 + B, i.e. C > B and cos(2(C - B)) = cos A
    for (int a = 0; a < 3 && !v.conditions.count(7); ++a) {
        for (int b = 0; b < 3; ++b) {
            if (b == a) continue;
            const int c = 3 - a - b;
            if (ad.cosine(c) >= ad.cosine(b)) continue;  // need C > B
            const Rational cos_cb =
                ad.cosine(b) * ad.cosine(c) + ad.sin_product(std::min(b, c), std::max(b, c));
            if (2 * cos_cb * cos_cb - 1 != ad.cosine(a)) continue;
            if (auto mk = test_two_sin_quarter(ad.cosine(a))) {
                Int M = mk->first, K = mk->second;
                if (scale_mk) {
                    if (M * scale_mk->second != K * scale_mk->first)
                        throw std::logic_error("run_angle_engine: witness scale mismatch");
                    M = scale_mk->first;  // same ratio, caller's scale
                    K = scale_mk->second;
                }
                const Int N = 2 * K * K - M * M;
                if (is_perfect_square(N)) {
                    v.diagnostics.push_back("condition 7 fails: 2K^2 - M^2 = " + fmt_int(N) +
                                            " is a perfect square for (M, K) = (" + fmt_int(M) +
                                            ", " + fmt_int(K) + ") (square-count-only case)");
                } else {
                    add_condition(v, 7, {Rational(M), Rational(K), Rational(N)},
                                  tile_shape_for(7, {Rational(M), Rational(K)}));
                }
            }
            break;
        }
    }

    // (8) C = 2A + B/2, i.e. A acute, C > 2A and cos(2(C - 2A)) = cos B
    for (int a = 0; a < 3 && !v.conditions.count(8); ++a) {
        if (ad.cosine(a) <= 0) continue;
        const Rational cos_2a = 2 * ad.cosine(a) * ad.cosine(a) - 1;
        for (int b = 0; b < 3; ++b) {
            if (b == a) continue;
            const int c = 3 - a - b;
            if (ad.cosine(c) >= cos_2a) continue;  // need C > 2A
            const Rational cos_c2a =
                ad.cosine(c) * cos_2a +
                2 * ad.cosine(a) * ad.sin_product(std::min(a, c), std::max(a, c));
            if (2 * cos_c2a * cos_c2a - 1 != ad.cosine(b)) continue;
            if (auto t = test_sqrt3_tan_half(ad.cosine(a)))
                add_condition(v, 8, {*t}, tile_shape_for(8, {*t}));
            break;
        }
    }
}

inline Verdict classify_sides(const SidesSpec& s) {
    Verdict v;
    const AngleData ad = angle_data_from_sides(s.a, s.b, s.c);  // validates
    const bool equilateral = s.a == s.b && s.b == s.c;
    // rational sides with all angles commensurable happens only for the
    // equilateral triangle, so that is the entire gate here
    run_angle_engine(ad, !equilateral, std::nullopt, v);
    v.admits_nonsquare = !v.conditions.empty();
    return v;
}

inline Verdict classify_angles_pi(const AnglesPiSpec& s) {
    for (const Rational* p : {&s.pa, &s.pb, &s.pc})
        if (*p <= 0 || *p >= 1)
            throw std::domain_error("AnglesPi: each fraction must lie in (0, 1)");
    if (s.pa + s.pb + s.pc != 1) throw std::domain_error("AnglesPi: fractions must sum to 1");

    Verdict v;
    if (s.pa == s.pb || s.pb == s.pc || s.pa == s.pc)
        detail::add_condition(v, 1, {}, TileShape{TileKind::RIGHT, std::nullopt});

    // right angle: legs ratio tan of a pi-rational angle is rational only
    // when it is 1, i.e. the (1/4, 1/4, 1/2) triangle
    std::array<Rational, 3> f{s.pa, s.pb, s.pc};
    std::sort(f.begin(), f.end());
    const bool right = f[0] == Rational(1, 2) || f[1] == Rational(1, 2) || f[2] == Rational(1, 2);
    if (right) {
        if (f[0] == f[1] && f[2] == Rational(1, 2)) {
            add_condition(v, 2, {Rational(1), Rational(1)},
                          TileShape{TileKind::RIGHT, std::nullopt});
        } else {
            v.diagnostics.push_back(
                "right angle present but the legs ratio is irrational; condition 2 does not "
                "apply");
        }
    }
    if (f[0] == Rational(1, 6) && f[1] == Rational(1, 3) && f[2] == Rational(1, 2))
        add_condition(v, 3, {}, TileShape{TileKind::COMMENSURATE, std::nullopt});

    v.diagnostics.push_back(
        "commensurable angles: only conditions 1-3 can certify a non-square tiling");
    v.admits_nonsquare = !v.conditions.empty();
    return v;
}

inline Verdict classify_legs(const LegsSpec& s) {
    if (s.m < 1 || s.k < 1) throw std::domain_error("Legs: both legs must be positive integers");
    using boost::multiprecision::gcd;
    const Int g = gcd(s.m, s.k);
    Int M = s.m / g, K = s.k / g;
    if (M > K) std::swap(M, K);

    Verdict v;
    if (M == K) detail::add_condition(v, 1, {}, TileShape{TileKind::RIGHT, std::nullopt});
    const Int N = M * M + K * K;
    if (is_perfect_square(N)) {
        v.diagnostics.push_back("condition 2 fails: M^2 + K^2 = " + fmt_int(N) +
                                " is a perfect square (legs " + fmt_int(M) + "/" + fmt_int(K) +
                                ")");
    } else {
        add_condition(v, 2, {Rational(M), Rational(K)}, TileShape{TileKind::RIGHT, std::nullopt});
    }
    // conditions 3-8 require an angle with irrational tangent against a
    // rational legs ratio, which cannot happen (rational-tangent angles that
    // are also pi-rational have tangent 0 or 1), so they are never emitted
    v.admits_nonsquare = !v.conditions.empty();
    return v;
}

inline Verdict classify_family(const FamilySpec& s) {
    const std::size_t want = s.tag == FamilyTag::HALF_SUM ? 2 : 1;
    if (s.params.size() != want)
        throw std::domain_error("Family: expected " + std::to_string(want) + " parameter(s)");

    AngleData ad = [&] {
        switch (s.tag) {
            case FamilyTag::C60: return angle_data_c60(s.params[0]);
            case FamilyTag::B2A_TAN: return angle_data_double_angle_tan(s.params[0]);
            case FamilyTag::B2A_SIN: return angle_data_double_angle_sin(s.params[0]);
            case FamilyTag::TWO_PLUS_HALF: return angle_data_two_plus_half(s.params[0]);
            case FamilyTag::HALF_SUM: {
                if (rat_den(s.params[0]) != 1 || rat_den(s.params[1]) != 1)
                    throw std::domain_error("Family HALF_SUM: parameters must be integers");
                return angle_data_half_sum(rat_num(s.params[0]), rat_num(s.params[1]));
            }
        }
        throw std::logic_error("classify_family: unknown tag");
    }();

    std::optional<std::pair<Int, Int>> scale;
    if (s.tag == FamilyTag::HALF_SUM) scale = std::make_pair(rat_num(s.params[0]), rat_num(s.params[1]));

    Verdict v;
    run_angle_engine(ad, true, scale, v);
    v.admits_nonsquare = !v.conditions.empty();
    return v;
}

}  // namespace detail

inline Verdict classify(const TriangleSpec& spec) {
    return std::visit(
        [](const auto& s) -> Verdict {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SidesSpec>) return detail::classify_sides(s);
            else if constexpr (std::is_same_v<T, AnglesPiSpec>) return detail::classify_angles_pi(s);
            else if constexpr (std::is_same_v<T, LegsSpec>) return detail::classify_legs(s);
            else return detail::classify_family(s);
        },
        spec);
}

}  // namespace tritile
