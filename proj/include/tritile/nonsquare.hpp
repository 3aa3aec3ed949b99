#pragma once

// Rational quantities that are provably never squares of rationals on their
// stated domains. Each evaluator returns the exact value; squareness of a
// particular evaluation can be checked with rat_is_square. The covering
// guarantees are:
//   - coprime_pair_squares: for coprime a, b >= 1, a^2 + ab + b^2 and
//     a(a + b) are never both squares.
//   - eval_nonsquare_quartic t -> (t^2 - 2)(t^2 - 3): never a nonzero
//     square for rational t (and never zero, since 2 and 3 are not squares).
//   - eval_nonsquare_ratio t -> (2/3)(3t^2 - 1)/((3t + 1)(t - 1)):
//     never a square for rational 0 <= t < 1.
//   - eval_nonsquare_shifted t -> (3t^2 - 6t - 1)/((t - 1)(3t + 1)):
//     never a square for rational 0 < t < 1/3. The sign-flipped "+1"
//     numerator variant is provided for comparison; it CAN be a square
//     (e.g. t = 1/5 gives 1/16) and is not used by the classifier.

#include "tritile/rational.hpp"

#include <stdexcept>
#include <utility>

namespace tritile {

struct CoprimePairSquares {
    bool norm_is_square;     // a^2 + ab + b^2
    bool product_is_square;  // a(a + b)
};

inline CoprimePairSquares coprime_pair_squares(const Int& a, const Int& b) {
    if (a < 1 || b < 1) throw std::domain_error("coprime_pair_squares: arguments must be >= 1");
    if (boost::multiprecision::gcd(a, b) != 1)
        throw std::domain_error("coprime_pair_squares: arguments must be coprime");
    CoprimePairSquares r{is_perfect_square(a * a + a * b + b * b).has_value(),
                         is_perfect_square(a * (a + b)).has_value()};
    if (r.norm_is_square && r.product_is_square)
        throw std::logic_error("coprime_pair_squares: both squares; invariant violated");
    return r;
}

inline Rational eval_nonsquare_quartic(const Rational& t) {
    return (t * t - 2) * (t * t - 3);
}

inline Rational eval_nonsquare_ratio(const Rational& t) {
    if (t == 1 || 3 * t == -1)
        throw std::domain_error("eval_nonsquare_ratio: pole at t = 1 or t = -1/3");
    return Rational(2, 3) * (3 * t * t - 1) / ((3 * t + 1) * (t - 1));
}

inline Rational eval_nonsquare_shifted(const Rational& t, bool plus_one_variant = false) {
    if (t == 1 || 3 * t == -1)
        throw std::domain_error("eval_nonsquare_shifted: pole at t = 1 or t = -1/3");
    const Rational num = 3 * t * t - 6 * t + (plus_one_variant ? Rational(1) : Rational(-1));
    return num / ((t - 1) * (3 * t + 1));
}

}  // namespace tritile
