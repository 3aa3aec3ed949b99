#pragma once

// Elements of a real quadratic field: rat + surd*sqrt(disc), disc squarefree.
//
// Canonical form: surd == 0 implies disc == 1. disc values 0 and 1 collapse
// to the rational part (sqrt(0) = 0, sqrt(1) = 1). Values from different
// fields never mix: combining nonzero surds over distinct discs is an error,
// while rationals (disc 1) combine with anything. Signs are decided exactly,
// with no floating point anywhere.

#include "tritile/rational.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace tritile {

struct QuadVal {
    Rational rat;
    Rational surd;
    Int disc = 1;

    QuadVal() = default;
    QuadVal(const Rational& r) : rat(r) {}  // NOLINT: implicit by design
    QuadVal(int r) : rat(r) {}              // NOLINT
    QuadVal(const Rational& r, const Rational& s, const Int& d) : rat(r), surd(s), disc(d) {
        if (disc < 0) throw std::domain_error("quadval: negative discriminant");
        if (disc == 0) { surd = 0; disc = 1; }
        if (disc == 1) { rat += surd; surd = 0; }
        if (surd == 0) { disc = 1; return; }
        auto [s_free, f] = squarefree_part(disc);
        if (f != 1) throw std::domain_error("quadval: discriminant must be squarefree");
    }

    bool is_rational() const { return surd == 0; }
    bool is_zero() const { return rat == 0 && surd == 0; }
};

inline bool operator==(const QuadVal& a, const QuadVal& b) {
    return a.rat == b.rat && a.surd == b.surd && (a.surd == 0 || a.disc == b.disc);
}
inline bool operator!=(const QuadVal& a, const QuadVal& b) { return !(a == b); }

namespace detail {
inline Int common_disc(const QuadVal& a, const QuadVal& b) {
    if (a.surd == 0) return b.disc;
    if (b.surd == 0) return a.disc;
    if (a.disc != b.disc) throw std::domain_error("quadval: mixed discriminants");
    return a.disc;
}
inline QuadVal canonical(Rational rat, Rational surd, Int disc) {
    if (surd == 0) return QuadVal(rat);
    QuadVal v;  // inputs already canonical: skip the squarefree re-check
    v.rat = std::move(rat);
    v.surd = std::move(surd);
    v.disc = std::move(disc);
    return v;
}
}  // namespace detail

inline QuadVal operator-(const QuadVal& a) { return detail::canonical(-a.rat, -a.surd, a.disc); }

inline QuadVal operator+(const QuadVal& a, const QuadVal& b) {
    Int d = detail::common_disc(a, b);
    return detail::canonical(a.rat + b.rat, a.surd + b.surd, d);
}
inline QuadVal operator-(const QuadVal& a, const QuadVal& b) { return a + (-b); }

inline QuadVal operator*(const QuadVal& a, const QuadVal& b) {
    Int d = detail::common_disc(a, b);
    return detail::canonical(a.rat * b.rat + a.surd * b.surd * Rational(d),
                             a.rat * b.surd + a.surd * b.rat, d);
}

// 1/v via the conjugate: norm rat^2 - surd^2*disc vanishes only at zero.
inline QuadVal quad_inverse(const QuadVal& v) {
    if (v.is_zero()) throw std::domain_error("quadval: division by zero");
    Rational norm = v.rat * v.rat - v.surd * v.surd * Rational(v.disc);
    if (norm == 0) throw std::domain_error("quadval: non-squarefree norm collapse");
    return detail::canonical(v.rat / norm, -v.surd / norm, v.disc);
}
inline QuadVal operator/(const QuadVal& a, const QuadVal& b) { return a * quad_inverse(b); }

inline QuadVal& operator+=(QuadVal& a, const QuadVal& b) { return a = a + b; }
inline QuadVal& operator-=(QuadVal& a, const QuadVal& b) { return a = a - b; }
inline QuadVal& operator*=(QuadVal& a, const QuadVal& b) { return a = a * b; }

// Exact sign of rat + surd*sqrt(disc). When the two terms oppose, compare
// rat^2 against surd^2*disc; they cannot tie for squarefree disc >= 2.
inline int quad_sign(const QuadVal& v) {
    auto sgn = [](const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); };
    const int sr = sgn(v.rat), ss = sgn(v.surd);
    if (ss == 0) return sr;
    if (sr == 0) return ss;
    if (sr == ss) return sr;
    const Rational lhs = v.rat * v.rat, rhs = v.surd * v.surd * Rational(v.disc);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sr : ss;
}

inline int quad_cmp(const QuadVal& a, const QuadVal& b) { return quad_sign(a - b); }
inline bool quad_less(const QuadVal& a, const QuadVal& b) { return quad_cmp(a, b) < 0; }
inline QuadVal quad_abs(const QuadVal& v) { return quad_sign(v) < 0 ? -v : v; }

inline double quad_to_double(const QuadVal& v) {
    double out = v.rat.convert_to<double>();
    if (v.surd != 0) {
        double root = std::sqrt(v.disc.convert_to<double>());
        out += v.surd.convert_to<double>() * root;
    }
    return out;
}

// sqrt of q inside Q(sqrt(field_disc)), if it exists there. Principal root.
inline std::optional<QuadVal> sqrt_in_field(const QuadVal& q, const Int& field_disc) {
    if (q.is_zero()) return QuadVal(Rational(0));
    if (quad_sign(q) < 0) return std::nullopt;
    if (q.is_rational()) {
        if (auto r = rat_is_square(q.rat)) return QuadVal(*r);
        // q = s*f^2 over Q: sqrt = (f)*sqrt(s), admissible only when s == field_disc
        const Int prod = rat_num(q.rat) * rat_den(q.rat);
        auto [s, f] = squarefree_part(prod);
        if (s != field_disc) return std::nullopt;
        return QuadVal(Rational(0), Rational(f, rat_den(q.rat)), s);
    }
    if (q.disc != field_disc) return std::nullopt;
    // (x + y*sqrt(D))^2 = u + v*sqrt(D): x^2 and y^2*D are roots of
    // z^2 - u z + D v^2/4, so u^2 - D v^2 must be a rational square.
    const Rational u = q.rat, v = q.surd;
    const Rational delta = u * u - Rational(field_disc) * v * v;
    auto w = rat_is_square(delta);
    if (!w) return std::nullopt;
    for (const Rational& z : {Rational((u + *w) / 2), Rational((u - *w) / 2)}) {
        auto x = rat_is_square(z);
        if (!x || *x == 0) continue;
        const Rational y = v / (2 * *x);
        if (*x * *x + y * y * Rational(field_disc) == u) {
            QuadVal root = detail::canonical(*x, y, field_disc);
            if (quad_sign(root) > 0) return root;
            return -root;
        }
    }
    return std::nullopt;
}

// Squared area of the triangle with side lengths a, b, c (Heron), plus the
// squarefree disc with area = coef*sqrt(disc). Degenerate input is an error.
struct HeronArea {
    Rational area_sq;
    Int disc;
    Rational coef;
};

inline HeronArea heron_area_sq(const Rational& a, const Rational& b, const Rational& c) {
    if (a <= 0 || b <= 0 || c <= 0) throw std::domain_error("heron: sides must be positive");
    const Rational p1 = a + b + c, p2 = -a + b + c, p3 = a - b + c, p4 = a + b - c;
    if (p2 <= 0 || p3 <= 0 || p4 <= 0) throw std::domain_error("heron: degenerate triangle");
    const Rational area_sq = p1 * p2 * p3 * p4 / 16;
    auto [disc, f] = squarefree_part(rat_num(area_sq) * rat_den(area_sq));
    return {area_sq, disc, Rational(f, rat_den(area_sq))};
}

}  // namespace tritile
