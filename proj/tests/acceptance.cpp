// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  argv[1] is the directory of shipped .tiling.json fixtures.
//
//   1. torsion golden lists        exact torsion subgroups of the four curves
//   2. tile-count reproduction     frozen certificate values
//   3. constructor validity sweep  every constructed tiling verifies, plus fixtures
//   4. glue arithmetic             n + (L/e)^2 bookkeeping
//   5. non-squareness suites       pair sweep, random evaluators, quartic round-trip
//   6. bounded search evidence     no affine points beyond torsion up to height 10^3
//   7. classifier truth table      frozen verdicts and diagnostics
//   8. exact kernel vs oracle      quad_sign against 200+ bit floats, field axioms

#include "tritile/classifier.hpp"
#include "tritile/constructors.hpp"
#include "tritile/elliptic.hpp"
#include "tritile/io.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace tritile;

namespace {

using Fails = std::vector<std::string>;

void check(Fails& fails, bool ok, const std::string& what) {
    if (!ok) fails.push_back(what);
}

std::string point_str(const ECPoint& p) {
    if (p.infinity) return "inf";
    return "(" + format_rational(p.x) + ", " + format_rational(p.y) + ")";
}

bool same_point_set(const std::vector<ECPoint>& got, const std::vector<ECPoint>& want) {
    if (got.size() != want.size()) return false;
    for (const ECPoint& p : want)
        if (std::find(got.begin(), got.end(), p) == got.end()) return false;
    return true;
}

ECPoint aff(long long x, long long y) { return ECPoint::affine(Rational(x), Rational(y)); }

const EllipticCurve kCurveA{2, -3, 0};    // (0, 0), (1, 0), (-3, 0), ...  Z/2 x Z/4
const EllipticCurve kCurveB{6, -3, 0};    // cyclic of order 6, generator (-3, 6)
const EllipticCurve kCurveC{10, 1, 0};    // only 2-torsion
const EllipticCurve kCurveD{18, -27, 0};  // only 2-torsion

// ------------------------------------------------------------- criterion 1

Fails criterion_torsion() {
    Fails fails;

    const std::vector<ECPoint> want_a = {ECPoint::at_infinity(), aff(0, 0), aff(1, 0),
                                         aff(-3, 0),             aff(-1, 2), aff(-1, -2),
                                         aff(3, 6),              aff(3, -6)};
    const TorsionReport rep_a = torsion_points(kCurveA);
    check(fails, rep_a.points.size() == 8, "curve A: expected 8 torsion elements");
    check(fails, same_point_set(rep_a.points, want_a), "curve A: torsion list mismatch");
    check(fails, rep_a.structure == "Z/2 x Z/4",
          "curve A: structure " + rep_a.structure + " != Z/2 x Z/4");

    const std::vector<ECPoint> want_b = {ECPoint::at_infinity(), aff(0, 0), aff(1, 2),
                                         aff(1, -2),             aff(-3, 6), aff(-3, -6)};
    const TorsionReport rep_b = torsion_points(kCurveB);
    check(fails, same_point_set(rep_b.points, want_b), "curve B: torsion list mismatch");
    check(fails, rep_b.structure == "Z/6",
          "curve B: structure " + rep_b.structure + " != Z/6");
    check(fails, rep_b.generator && *rep_b.generator == aff(-3, 6),
          "curve B: generator is not (-3, 6)");

    // order of (-3, 6) certified by repeated addition; its multiples plus
    // infinity must reproduce the whole subgroup
    const ECPoint g = aff(-3, 6);
    std::vector<ECPoint> multiples{ECPoint::at_infinity()};
    ECPoint acc = g;
    int order = 0;
    for (int k = 1; k <= 12; ++k) {
        if (acc.infinity) {
            order = k;
            break;
        }
        multiples.push_back(acc);
        acc = ec_add(kCurveB, acc, g);
    }
    check(fails, order == 6, "curve B: repeated addition gives order != 6");
    check(fails, same_point_set(multiples, want_b),
          "curve B: multiples of (-3, 6) do not span the torsion subgroup");

    for (const auto& [curve, name] :
         {std::pair{kCurveC, "curve C"}, std::pair{kCurveD, "curve D"}}) {
        const TorsionReport rep = torsion_points(curve);
        const std::vector<ECPoint> want = {ECPoint::at_infinity(), aff(0, 0)};
        check(fails, same_point_set(rep.points, want),
              std::string(name) + ": torsion is not {(0,0), inf}");
        check(fails, rep.structure == "Z/2",
              std::string(name) + ": structure " + rep.structure + " != Z/2");
    }
    return fails;
}

// ------------------------------------------------------------- criterion 2

Fails criterion_counts() {
    Fails fails;

    const CountCertificate c6 = count_case6(5, Rational(1, 2));
    check(fails, c6.n_expression == 77, "count_case6(5, 1/2) != 77");
    check(fails, !c6.is_square_possible, "count_case6(5, 1/2) flagged square-possible");

    const TriquadraticResult t24 = triquadratic_params(2, 4);
    check(fails, t24.cert.n_expression == 28, "triquadratic(2,4): N != 28");
    check(fails,
          t24.tile.sides && (*t24.tile.sides == std::array<Int, 3>{2, 3, 4}),
          "triquadratic(2,4): tile sides != (2, 3, 4)");

    const TriquadraticResult t525 = triquadratic_params(5, 25);
    check(fails, t525.cert.n_expression == 1225, "triquadratic(5,25): N != 1225");
    check(fails, t525.cert.is_square_possible, "triquadratic(5,25): 1225 not flagged square");
    const auto root = is_perfect_square(Int(1225));
    check(fails, root && *root == 35, "is_perfect_square(1225) != 35");

    const TriquadraticResult t39 = triquadratic_params(3, 9);
    check(fails, t39.cert.n_expression == 153, "triquadratic(3,9): N != 153");
    return fails;
}

// ------------------------------------------------------------- criterion 3

Point2 pt(long long x, long long y) { return {QuadVal(Rational(x)), QuadVal(Rational(y))}; }

Fails criterion_constructors(const std::string& fixtures_dir) {
    Fails fails;
    const auto expect_valid = [&](const Tiling& t, std::size_t n, const std::string& what) {
        const VerifyReport rep = verify_tiling(t);
        if (!rep.valid)
            fails.push_back(what + ": verification failed (" + rep.first_failure() + ")");
        else if (t.n_tiles() != n)
            fails.push_back(what + ": " + std::to_string(t.n_tiles()) + " tiles, expected " +
                            std::to_string(n));
    };

    const Triangle right{pt(0, 0), pt(4, 0), pt(0, 3)};
    for (int n = 1; n <= 12; ++n)
        expect_valid(quadratic_tiling(right, n), static_cast<std::size_t>(n) * n,
                     "quadratic n=" + std::to_string(n));

    for (int k = 1; k <= 5; ++k)
        expect_valid(hexagonal_tiling(k), 3u * (k + 1) * (k + 1),
                     "hexagonal k=" + std::to_string(k));

    for (int M = 1; M <= 7; ++M)
        for (int K = 1; K <= 7; ++K)
            expect_valid(biquadratic_tiling(M, K), static_cast<std::size_t>(M) * M + K * K,
                         "biquadratic (" + std::to_string(M) + ", " + std::to_string(K) + ")");
    check(fails, biquadratic_tiling(3, 2).n_tiles() == 13, "biquadratic (3,2) != 13 tiles");
    check(fails, biquadratic_tiling(7, 5).n_tiles() == 74, "biquadratic (7,5) != 74 tiles");

    for (int k = 1; k <= 5; ++k)
        expect_valid(tri_306090_tiling(k), 3u * k * k, "tri306090 k=" + std::to_string(k));
    check(fails, tri_306090_tiling(1).n_tiles() == 3, "tri306090 k=1 != 3 tiles");

    std::mt19937_64 rng(633);
    std::uniform_int_distribution<long long> num(1, 40), den(1, 12);
    const Int discs[] = {1, 2, 3, 5, 6, 7};
    for (int i = 0; i < 20; ++i) {
        const Rational base(num(rng), den(rng)), height(num(rng), den(rng));
        const Int disc = discs[i % 6];
        expect_valid(bisect_isosceles(base, height, disc), 2,
                     "bisect sample " + std::to_string(i));
    }

    expect_valid(glue_append_similar(quadratic_tiling(right, 2), 2, 0, true), 8,
                 "glue mirror instance");

    // every fixture shipped with the repo must parse and verify
    namespace fs = std::filesystem;
    std::size_t fixture_count = 0;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(fixtures_dir, ec)) {
        const std::string name = entry.path().filename().string();
        if (name.size() < 12 || name.substr(name.size() - 12) != ".tiling.json") continue;
        ++fixture_count;
        std::ifstream in(entry.path());
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            const Tiling t = parse_tiling(buf.str());
            const VerifyReport rep = verify_tiling(t);
            if (!rep.valid)
                fails.push_back("fixture " + name + ": invalid (" + rep.first_failure() + ")");
        } catch (const std::exception& e) {
            fails.push_back("fixture " + name + ": " + e.what());
        }
    }
    check(fails, !ec, "cannot read fixtures directory " + fixtures_dir);
    check(fails, fixture_count >= 4, "expected at least 4 shipped fixtures");
    return fails;
}

// ------------------------------------------------------------- criterion 4

Fails criterion_glue_arithmetic() {
    Fails fails;
    check(fails, glue_count_formula(1215, 135, 5) == 1944,
          "glue count 1215 + (135/5)^2 != 1944");
    check(fails, glue_count_formula(1215, 135, 3) == 3240,
          "glue count 1215 + (135/3)^2 != 3240");
    return fails;
}

// ------------------------------------------------------------- criterion 5

Fails criterion_nonsquare() {
    Fails fails;

    // coprime pairs a, b <= 200: whenever a^2 + ab + b^2 is a perfect square,
    // a(a + b) must not be (the library throws if both ever were)
    int norm_square_pairs = 0;
    try {
        for (Int a = 1; a <= 200; ++a)
            for (Int b = 1; b <= 200; ++b) {
                if (boost::multiprecision::gcd(a, b) != 1) continue;
                const CoprimePairSquares r = coprime_pair_squares(a, b);
                if (!r.norm_is_square) continue;
                ++norm_square_pairs;
                if (r.product_is_square) {
                    fails.push_back("pair sweep: a(a+b) square at (" + a.str() + ", " +
                                    b.str() + ")");
                    break;
                }
            }
    } catch (const std::exception& e) {
        fails.push_back(std::string("pair sweep: ") + e.what());
    }
    check(fails, norm_square_pairs > 0, "pair sweep: no pair with square norm found");

    // randomized evaluator sweeps: 10^3 samples each, values never squares
    std::mt19937_64 rng(5733);
    std::uniform_int_distribution<long long> any_num(-400, 400), pos_den(1, 60),
        big_den(4, 400);
    int bad_quartic = 0, bad_ratio = 0, bad_shifted = 0;
    for (int i = 0; i < 1000; ++i) {
        const Rational t(any_num(rng), pos_den(rng));
        if (rat_is_square(eval_nonsquare_quartic(t))) ++bad_quartic;
    }
    for (int i = 0; i < 1000; ++i) {
        const long long q = big_den(rng);
        const Rational t(std::uniform_int_distribution<long long>(0, q - 1)(rng), q);
        if (rat_is_square(eval_nonsquare_ratio(t))) ++bad_ratio;
    }
    for (int i = 0; i < 1000; ++i) {
        const long long q = big_den(rng);
        const long long pmax = (q - 1) / 3;
        const Rational t(std::uniform_int_distribution<long long>(1, std::max(1LL, pmax))(rng),
                         q);
        if (3 * t >= 1) continue;
        if (rat_is_square(eval_nonsquare_shifted(t))) ++bad_shifted;
    }
    check(fails, bad_quartic == 0, "quartic evaluator produced a square");
    check(fails, bad_ratio == 0, "ratio evaluator produced a square");
    check(fails, bad_shifted == 0, "shifted evaluator produced a square");
    // contrast: the sign-flipped numerator variant genuinely can be a square,
    // so the sweep above is not vacuous
    const auto contrast = rat_is_square(eval_nonsquare_shifted(Rational(1, 5), true));
    check(fails, contrast && *contrast == Rational(1, 4),
          "plus-one variant at t = 1/5 should equal (1/4)^2");

    // quartic <-> cubic round-trip on every torsion point with x != 0
    const std::pair<EllipticCurve, QuarticCurve> models[] = {
        {kCurveA, QuarticCurve{-1, 1}},
        {kCurveB, QuarticCurve{-3, 3}},
        {kCurveC, QuarticCurve{-5, 6}},
        {kCurveD, QuarticCurve{-9, 27}},
    };
    for (const auto& [curve, quartic] : models) {
        const EllipticCurve w = quartic_to_weierstrass(quartic);
        if (w.a2 != curve.a2 || w.a1 != curve.a1 || w.a0 != curve.a0) {
            fails.push_back("quartic model does not map to " + curve_to_string(curve));
            continue;
        }
        for (const ECPoint& p : torsion_points(curve).points) {
            if (p.infinity || p.x == 0) continue;
            try {
                const QuarticPoint qp = quartic_point_unmap(quartic, p);
                if (!quartic_on_curve(quartic, qp))
                    fails.push_back("unmapped point off quartic at " + point_str(p));
                else if (!(quartic_point_map(quartic, qp) == p))
                    fails.push_back("round-trip mismatch at " + point_str(p));
            } catch (const std::exception& e) {
                fails.push_back("round-trip threw at " + point_str(p) + ": " + e.what());
            }
        }
    }
    return fails;
}

// ------------------------------------------------------------- criterion 6

Fails criterion_search() {
    Fails fails;
    for (const auto& [curve, name] :
         {std::pair{kCurveA, "curve A"}, std::pair{kCurveB, "curve B"},
          std::pair{kCurveC, "curve C"}, std::pair{kCurveD, "curve D"}}) {
        const std::vector<ECPoint> torsion = torsion_points(curve).points;
        for (const ECPoint& p : rational_point_search(curve, 1000)) {
            if (std::find(torsion.begin(), torsion.end(), p) == torsion.end()) {
                fails.push_back(std::string(name) + ": point beyond torsion at " +
                                point_str(p));
                break;
            }
        }
        // evidence sanity: the search does recover all affine torsion points
        const auto found = rational_point_search(curve, 1000);
        for (const ECPoint& p : torsion) {
            if (p.infinity) continue;
            if (std::find(found.begin(), found.end(), p) == found.end())
                fails.push_back(std::string(name) + ": search missed torsion point " +
                                point_str(p));
        }
    }
    return fails;
}

// ------------------------------------------------------------- criterion 7

Fails criterion_classifier() {
    Fails fails;
    const auto conds = [](const Verdict& v) { return v.conditions; };

    const Verdict v306090 = classify(AnglesPiSpec{Rational(1, 6), Rational(1, 2), Rational(1, 3)});
    check(fails, conds(v306090) == std::set<int>{3} && v306090.admits_nonsquare,
          "AnglesPi(1/6, 1/2, 1/3) != {3}");

    const Verdict veq = classify(AnglesPiSpec{Rational(1, 3), Rational(1, 3), Rational(1, 3)});
    check(fails, conds(veq) == std::set<int>{1}, "equilateral != {1}");

    const Verdict v345 = classify(SidesSpec{3, 4, 5});
    check(fails, conds(v345).empty() && !v345.admits_nonsquare, "Sides(3,4,5) != {}");

    const Verdict vlegs = classify(LegsSpec{1, 2});
    check(fails, conds(vlegs) == std::set<int>{2}, "legs 1:2 right triangle != {2}");
    if (auto it = vlegs.witnesses.find(2); it != vlegs.witnesses.end()) {
        check(fails, it->second == std::vector<Rational>{1, 2},
              "legs 1:2: witness != (1, 2)");
    } else {
        fails.push_back("legs 1:2: no witness recorded");
    }
    check(fails, !is_perfect_square(Int(5)), "5 reported as a perfect square");

    const Verdict v24 = classify(FamilySpec{FamilyTag::HALF_SUM, {2, 4}});
    check(fails, conds(v24) == std::set<int>{7}, "HALF_SUM(2,4) != {7}");
    if (auto it = v24.witnesses.find(7); it != v24.witnesses.end()) {
        check(fails, it->second.size() == 3 && it->second[2] == 28,
              "HALF_SUM(2,4): witness N != 28");
    } else {
        fails.push_back("HALF_SUM(2,4): no witness recorded");
    }
    check(fails, !is_perfect_square(Int(28)), "28 reported as a perfect square");

    const Verdict v525 = classify(FamilySpec{FamilyTag::HALF_SUM, {5, 25}});
    check(fails, !conds(v525).count(7), "HALF_SUM(5,25) wrongly satisfies condition 7");
    const bool diag = std::any_of(
        v525.diagnostics.begin(), v525.diagnostics.end(), [](const std::string& d) {
            return d.find("2K^2 - M^2") != std::string::npos &&
                   d.find("perfect square") != std::string::npos;
        });
    check(fails, diag, "HALF_SUM(5,25): missing square-count diagnostic");

    const Verdict vc60 = classify(FamilySpec{FamilyTag::C60, {Rational(1, 5)}});
    check(fails, conds(vc60) == std::set<int>{4}, "C60(1/5) != {4}");
    if (auto it = vc60.tile_shapes.find(4); it != vc60.tile_shapes.end()) {
        const TileShape& shape = it->second;
        check(fails, shape.kind == TileKind::GROUP2, "C60(1/5): tile kind is not group-2");
        if (shape.sides) {
            const auto& s = *shape.sides;
            check(fails, s == std::array<Int, 3>{5, 3, 7}, "C60(1/5): tile != (5, 3, 7)");
            check(fails, s[0] * s[0] + s[1] * s[1] + s[0] * s[1] == s[2] * s[2],
                  "C60(1/5): 25 + 9 + 15 != 49");
        } else {
            fails.push_back("C60(1/5): tile has no integer sides");
        }
    } else {
        fails.push_back("C60(1/5): no tile shape derived");
    }
    return fails;
}

// ------------------------------------------------------------- criterion 8

using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<80>>;

int quad_sign_numeric(const QuadVal& v) {
    const BigFloat x = static_cast<BigFloat>(v.rat) +
                       static_cast<BigFloat>(v.surd) * sqrt(BigFloat(v.disc));
    return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

QuadVal random_quad(std::mt19937_64& rng, const Int& disc) {
    std::uniform_int_distribution<long long> num(-50, 50), den(1, 20);
    return QuadVal(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), disc);
}

Fails criterion_kernel() {
    Fails fails;
    std::mt19937_64 rng(20260819);
    int mismatches = 0;
    for (const Int disc : {Int(2), Int(3), Int(5), Int(15)})
        for (int i = 0; i < 2500; ++i) {
            const QuadVal v = random_quad(rng, disc);
            if (quad_sign(v) != quad_sign_numeric(v)) ++mismatches;
        }
    check(fails, mismatches == 0,
          std::to_string(mismatches) + " sign disagreements with the numeric oracle");

    int axiom_bad = 0;
    for (const Int disc : {Int(3), Int(5)})
        for (int i = 0; i < 1000; ++i) {
            const QuadVal a = random_quad(rng, disc), b = random_quad(rng, disc),
                          c = random_quad(rng, disc);
            if (!((a + b) + c == a + (b + c))) ++axiom_bad;
            if (!(a + b == b + a)) ++axiom_bad;
            if (!((a * b) * c == a * (b * c))) ++axiom_bad;
            if (!(a * b == b * a)) ++axiom_bad;
            if (!(a * (b + c) == a * b + a * c)) ++axiom_bad;
            if (!(a - a == QuadVal(Rational(0)))) ++axiom_bad;
            if (!a.is_zero() && !(a * quad_inverse(a) == QuadVal(Rational(1)))) ++axiom_bad;
            if (!a.is_zero() && !b.is_zero() && !((a / b) * b == a)) ++axiom_bad;
        }
    check(fails, axiom_bad == 0, std::to_string(axiom_bad) + " field-axiom violations");
    return fails;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string fixtures_dir = argc > 1 ? argv[1] : "fixtures";

    struct Entry {
        int id;
        const char* title;
        Fails fails;
    };
    std::vector<Entry> entries;
    entries.push_back({1, "torsion golden lists", criterion_torsion()});
    entries.push_back({2, "tile-count reproduction", criterion_counts()});
    entries.push_back({3, "constructor validity sweep", criterion_constructors(fixtures_dir)});
    entries.push_back({4, "glue arithmetic", criterion_glue_arithmetic()});
    entries.push_back({5, "non-squareness suites", criterion_nonsquare()});
    entries.push_back({6, "bounded search evidence", criterion_search()});
    entries.push_back({7, "classifier truth table", criterion_classifier()});
    entries.push_back({8, "exact kernel vs numeric oracle", criterion_kernel()});

    int failed = 0;
    for (const Entry& e : entries) {
        if (e.fails.empty()) {
            std::cout << "criterion " << e.id << " (" << e.title << "): PASS\n";
        } else {
            ++failed;
            std::cout << "criterion " << e.id << " (" << e.title << "): FAIL\n";
            for (const std::string& f : e.fails) std::cout << "    - " << f << "\n";
        }
    }
    if (failed) std::cout << failed << " of 8 criteria failed\n";
    return failed == 0 ? 0 : 1;
}
