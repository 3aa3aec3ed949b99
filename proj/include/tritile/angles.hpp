#pragma once

// Exact trigonometric data for a triangle: the three cosines together with
// the three pairwise sine products, all rational. Every decidable angle
// relation used by the classifier (equality, doubling, half-sum shifts,
// presence of pi/3 or pi/2) reduces to polynomial identities in these six
// rationals, so the classification below never leaves Q.
//
// Rationality facts used here:
//   - rational side lengths give rational cosines (law of cosines) and
//     rational pairwise sine products (law of sines + Heron);
//   - each parametric family below is chosen so that the same six values
//     are rational functions of its parameter.

#include "tritile/quadval.hpp"
#include "tritile/rational.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace tritile {

struct AngleData {
    // cosines of angles A, B, C and the products sin X * sin Y
    Rational cos_a, cos_b, cos_c;
    Rational sp_ab, sp_ac, sp_bc;

    // validated factory; the six identities below are necessary and
    // sufficient for the data to come from a genuine triangle
    static AngleData checked(Rational ca, Rational cb, Rational cc, Rational ab, Rational ac,
                             Rational bc) {
        auto open_interval = [](const Rational& v) { return v > -1 && v < 1; };
        if (!open_interval(ca) || !open_interval(cb) || !open_interval(cc))
            throw std::domain_error("AngleData: cosine out of (-1, 1)");
        if (ab <= 0 || ac <= 0 || bc <= 0)
            throw std::domain_error("AngleData: sine products must be positive");
        // sin^2 consistency: sp_AB * sp_AC / sp_BC = sin^2 A, cyclically
        if (ab * ac != (1 - ca * ca) * bc || ab * bc != (1 - cb * cb) * ac ||
            ac * bc != (1 - cc * cc) * ab)
            throw std::domain_error("AngleData: sine products inconsistent with cosines");
        // angle sum: cos C = -cos(A + B) = sin A sin B - cos A cos B
        if (cc != ab - ca * cb)
            throw std::domain_error("AngleData: angles do not sum to pi");
        return AngleData{std::move(ca), std::move(cb), std::move(cc),
                         std::move(ab), std::move(ac), std::move(bc)};
    }

    Rational cosine(int i) const { return i == 0 ? cos_a : i == 1 ? cos_b : cos_c; }
    // product sin(i) * sin(j) for distinct i, j in {0,1,2}
    Rational sin_product(int i, int j) const {
        const int k = i + j;  // 1 -> AB, 2 -> AC, 3 -> BC
        return k == 1 ? sp_ab : k == 2 ? sp_ac : sp_bc;
    }
};

// triangle with rational sides a, b, c (angle A opposite side a, etc.)
inline AngleData angle_data_from_sides(const Rational& a, const Rational& b, const Rational& c) {
    const HeronArea area = heron_area_sq(a, b, c);  // validates the triangle
    const Rational ca = (b * b + c * c - a * a) / (2 * b * c);
    const Rational cb = (a * a + c * c - b * b) / (2 * a * c);
    const Rational cc = (a * a + b * b - c * c) / (2 * a * b);
    // sin X sin Y = 4 * Area^2 / (x * y * z^2) with z the third side
    const Rational f = 4 * area.area_sq;
    return AngleData::checked(ca, cb, cc, f / (a * b * c * c), f / (a * c * b * b),
                              f / (b * c * a * a));
}

namespace detail {

inline void require_open_third(const Rational& t, const char* what) {
    if (t <= 0 || 3 * t >= 1)
        throw std::domain_error(std::string(what) +
                                ": parameter outside (0, 1/3); boundary values are "
                                "degenerate/commensurable");
}

}  // namespace detail

// angles (A, 2pi/3 - A, pi/3) with sqrt(3) tan(A/2) = 3t, t in (0, 1/3)
inline AngleData angle_data_c60(const Rational& t) {
    detail::require_open_third(t, "angle_data_c60");
    const Rational d = 1 + 3 * t * t;
    const Rational c = (1 - 3 * t * t) / d;  // cos A
    const Rational w = 1 - c * c;            // sin^2 A
    const Rational r3s = 6 * t / d;          // sqrt(3) sin A
    return AngleData::checked(c, (r3s - c) / 2, Rational(1, 2), (r3s * c + w) / 2, r3s / 2,
                              (3 * c + r3s) / 4);
}

// angles (A, 2A, pi - 3A) given cos A rational in (1/2, 1)
inline AngleData angle_data_double_angle(const Rational& c) {
    if (c <= Rational(1, 2) || c >= 1)
        throw std::domain_error(
            "angle_data_double_angle: cos A outside (1/2, 1); boundary values are "
            "degenerate/commensurable");
    const Rational w = 1 - c * c;  // sin^2 A
    return AngleData::checked(c, 2 * c * c - 1, -(4 * c * c * c - 3 * c), 2 * w * c, w * (3 - 4 * w),
                              2 * c * w * (3 - 4 * w));
}

// same family parametrized by sqrt(3) tan(A/2) = 3t, t in (0, 1/3)
inline AngleData angle_data_double_angle_tan(const Rational& t) {
    detail::require_open_third(t, "angle_data_double_angle_tan");
    return angle_data_double_angle((1 - 3 * t * t) / (1 + 3 * t * t));
}

// same family parametrized by s = 2 sin(A/2), s in (0, 1)
inline AngleData angle_data_double_angle_sin(const Rational& s) {
    if (s <= 0 || s >= 1)
        throw std::domain_error(
            "angle_data_double_angle_sin: parameter outside (0, 1); boundary values are "
            "degenerate/commensurable");
    return angle_data_double_angle(1 - s * s / 2);
}

// angles (A, pi/2 - 3A/4, pi/2 - A/4), so C = A/2 + B, with 2 sin(A/4) = M/K
inline AngleData angle_data_half_sum(const Int& M, const Int& K) {
    if (M < 1 || K < 1 || M >= K)
        throw std::domain_error(
            "angle_data_half_sum: need integers 0 < M < K; boundary values are "
            "degenerate/commensurable");
    const Rational s = make_rational(M, K);     // 2 sin(A/4)
    const Rational h = 1 - s * s / 2;           // cos(A/2)
    const Rational ca = 2 * h * h - 1;          // cos A
    const Rational g = (h + ca) / 2;            // cos(A/4) cos(3A/4)
    return AngleData::checked(ca, s * (3 - s * s) / 2, s / 2, s * h * 2 * g, s * h * (1 + h), g);
}

// angles (A, 2pi/3 - 2A, pi/3 + A), so C = 2A + B/2, sqrt(3) tan(A/2) = 3t
inline AngleData angle_data_two_plus_half(const Rational& t) {
    detail::require_open_third(t, "angle_data_two_plus_half");
    const Rational d = 1 + 3 * t * t;
    const Rational c = (1 - 3 * t * t) / d;  // cos A
    const Rational w = 1 - c * c;            // sin^2 A
    const Rational r3s = 6 * t / d;          // sqrt(3) sin A
    const Rational c2 = 2 * c * c - 1;       // cos 2A
    return AngleData::checked(c, r3s * c - c2 / 2, (c - r3s) / 2, r3s * c2 / 2 + w * c,
                              (r3s * c + w) / 2,
                              (3 * c * c2 + r3s * c2 + 2 * r3s * c * c + 2 * w * c) / 4);
}

// --- witness extraction -----------------------------------------------------
// Each test takes a rational cosine of an angle X in (0, pi) and decides
// whether the named quantity is rational, returning it when it is.

// sqrt(3) tan(X/2) = q rational? returns t = q/3 (the family parameter)
inline std::optional<Rational> test_sqrt3_tan_half(const Rational& cos_x) {
    if (cos_x <= -1 || cos_x >= 1) throw std::domain_error("test_sqrt3_tan_half: cosine range");
    // q^2 = 3 (1 - cos X) / (1 + cos X)
    if (auto q = rat_is_square(3 * (1 - cos_x) / (1 + cos_x))) return *q / 3;
    return std::nullopt;
}

// 2 sin(X/2) = s rational? returns s
inline std::optional<Rational> test_sin_half(const Rational& cos_x) {
    if (cos_x <= -1 || cos_x >= 1) throw std::domain_error("test_sin_half: cosine range");
    return rat_is_square(2 * (1 - cos_x));  // s^2 = 4 sin^2(X/2) = 2(1 - cos X)
}

// 2 sin(X/4) = M/K rational (requires cos(X/2) rational first)?
// returns (M, K) in lowest terms
inline std::optional<std::pair<Int, Int>> test_two_sin_quarter(const Rational& cos_x) {
    if (cos_x <= -1 || cos_x >= 1) throw std::domain_error("test_two_sin_quarter: cosine range");
    const auto half = rat_is_square((1 + cos_x) / 2);  // cos(X/2), positive since X/2 < pi/2
    if (!half) return std::nullopt;
    const auto quarter = rat_is_square((1 - *half) / 2);  // sin(X/4)
    if (!quarter) return std::nullopt;
    const Rational s = 2 * *quarter;
    return std::make_pair(rat_num(s), rat_den(s));
}

}  // namespace tritile
