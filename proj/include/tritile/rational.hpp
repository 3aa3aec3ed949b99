#pragma once

// Exact rational scalars and integer square/squarefree helpers.
//
// Rational is boost::multiprecision::cpp_rational: arbitrary precision,
// always canonical (lowest terms, positive denominator). All predicates
// here are exact; nothing rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace tritile {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) return Rational(-num, -den);
    return Rational(num, den);
}

// "p/q" or "p"; q = 1 is omitted. Inverse of format_rational.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] { return std::invalid_argument("rational: cannot parse '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(text)));
        const std::string num(text.substr(0, slash));
        const std::string den(text.substr(slash + 1));
        if (num.empty() || den.empty()) throw bad();
        Int n{num}, d{den};
        if (d == 0) throw std::invalid_argument("rational: zero denominator in '" + std::string(text) + "'");
        if (d < 0) { d = -d; n = -n; }
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

inline std::string format_rational(const Rational& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

// Floor square root certificate: r with r*r == n, if one exists.
inline std::optional<Int> is_perfect_square(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

// sqrt(q) as an exact rational, if q is a square in Q. Nonnegative root.
inline std::optional<Rational> rat_is_square(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto rn = is_perfect_square(rat_num(q));
    if (!rn) return std::nullopt;
    auto rd = is_perfect_square(rat_den(q));
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

// n = s * f^2 with s squarefree. Trial division by 2, 3, 6k+-1; the
// cofactor surviving the bound has no prime factor <= kSquarefreeBound,
// so below kSquarefreeBound^3 it is prime, a prime square, or a product
// of two distinct primes. Larger cofactors cannot be certified: refuse.
inline constexpr std::int64_t kSquarefreeBound = 1'000'000;

inline std::pair<Int, Int> squarefree_part(Int n) {
    if (n <= 0) throw std::domain_error("squarefree_part: input must be positive");
    Int s = 1, f = 1;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e % 2 == 1) s *= p;
        for (; e >= 2; e -= 2) f *= p;
    };
    strip(2);
    strip(3);
    for (Int d = 5; d * d <= n && d <= kSquarefreeBound; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) {
        if (auto r = is_perfect_square(n)) {
            f *= *r;
        } else if (n < Int(kSquarefreeBound) * kSquarefreeBound * kSquarefreeBound) {
            s *= n;  // prime or product of two distinct primes
        } else {
            throw std::domain_error("squarefree_part: cofactor too large to certify squarefree");
        }
    }
    return {s, f};
}

}  // namespace tritile
