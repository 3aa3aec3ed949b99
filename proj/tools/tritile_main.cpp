// tritile — exact-arithmetic triangle tilings from the command line.
//
// Subcommands: classify, construct, verify, render, count, curve.
// Exit codes:  0 success / tiling valid, 1 tiling invalid, 2 usage or
//              input error, 3 internal contract violation.
// Reports are JSON on stdout; --quiet reduces output to one verdict line.

#include <CLI11.hpp>
#include <json.hpp>

#include "tritile/classifier.hpp"
#include "tritile/constructors.hpp"
#include "tritile/elliptic.hpp"
#include "tritile/io.hpp"
#include "tritile/svg.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;
using namespace tritile;

// ---------------------------------------------------------------- helpers

[[noreturn]] void usage_error(const std::string& msg) {
    throw std::domain_error(msg);
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) parts.push_back(item);
    if (!text.empty() && text.back() == ',') parts.emplace_back();
    return parts;
}

Rational rat_arg(const std::string& flag, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::exception& e) {
        usage_error(flag + ": " + e.what());
    }
}

Int int_arg(const std::string& flag, const std::string& text) {
    try {
        std::size_t pos = 0;
        const Int value(text);
        (void)pos;
        return value;
    } catch (const std::exception&) {
        usage_error(flag + ": '" + text + "' is not an integer");
    }
}

std::vector<Rational> rat_list(const std::string& flag, const std::string& text,
                               std::size_t lo, std::size_t hi) {
    const auto parts = split_commas(text);
    if (parts.size() < lo || parts.size() > hi)
        usage_error(flag + ": expected " + std::to_string(lo) +
                    (lo == hi ? "" : ".." + std::to_string(hi)) +
                    " comma-separated values");
    std::vector<Rational> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(rat_arg(flag, p));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) usage_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) usage_error("cannot write '" + path + "'");
    out << text;
    if (!out) usage_error("write to '" + path + "' failed");
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

// ------------------------------------------------------ report fragments

Json quadval_json(const QuadVal& v, const Int& disc) {
    Json j = Json::array();
    for (const auto& part : detail::value_to_json(v, disc)) j.push_back(part);
    return j;
}

Json tile_shape_json(const TileShape& shape) {
    Json j;
    switch (shape.kind) {
        case TileKind::GROUP2: j["kind"] = "group2"; break;
        case TileKind::GROUP1: j["kind"] = "group1"; break;
        case TileKind::RIGHT: j["kind"] = "right"; break;
        case TileKind::COMMENSURATE: j["kind"] = "commensurate"; break;
    }
    if (shape.sides) {
        Json sides = Json::array();
        for (const Int& s : *shape.sides) sides.push_back(s.str());
        j["sides"] = sides;
    }
    return j;
}

Json verdict_json(const Json& input, const Verdict& v) {
    Json j;
    j["input"] = input;
    Json conds = Json::array();
    for (int id : v.conditions) {
        Json c;
        c["id"] = id;
        Json witness = Json::array();
        if (auto it = v.witnesses.find(id); it != v.witnesses.end())
            for (const Rational& w : it->second) witness.push_back(format_rational(w));
        c["witness"] = witness;
        if (auto it = v.tile_shapes.find(id); it != v.tile_shapes.end())
            c["tile_shape"] = tile_shape_json(it->second);
        conds.push_back(c);
    }
    j["conditions"] = conds;
    if (!v.diagnostics.empty()) j["diagnostics"] = v.diagnostics;
    j["admits_nonsquare"] = v.admits_nonsquare;
    return j;
}

Json check_json(const CheckResult& c) {
    Json j;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    return j;
}

Json verify_json(const std::string& file, const VerifyReport& r) {
    Json j;
    j["file"] = file;
    j["valid"] = r.valid;
    j["n_tiles"] = r.n_tiles;
    j["is_square_count"] = r.is_square_count;
    Json checks;
    checks["structure"] = check_json(r.structure);
    checks["congruence"] = check_json(r.congruence);
    checks["area"] = check_json(r.area);
    checks["containment"] = check_json(r.containment);
    checks["overlap"] = check_json(r.overlap);
    j["checks"] = checks;
    return j;
}

Json count_json(const CountCertificate& cert) {
    Json j;
    j["case"] = cert.case_id;
    Json params = Json::array();
    for (const Rational& p : cert.params) params.push_back(format_rational(p));
    j["params"] = params;
    j["n"] = format_rational(cert.n_expression);
    j["is_square_possible"] = cert.is_square_possible;
    j["note"] = cert.note;
    return j;
}

std::string point_str(const ECPoint& p) {
    if (p.infinity) return "inf";
    return "(" + format_rational(p.x) + ", " + format_rational(p.y) + ")";
}

Json curve_json(const EllipticCurve& c) {
    Json j;
    j["a2"] = c.a2.str();
    j["a1"] = c.a1.str();
    j["a0"] = c.a0.str();
    return j;
}

// ---------------------------------------------------------- input parsing

EllipticCurve curve_from_coeffs(const std::string& coeffs) {
    const auto parts = split_commas(coeffs);
    if (parts.size() != 3) usage_error("--coeffs: expected a2,a1,a0");
    return EllipticCurve{int_arg("--coeffs", parts[0]), int_arg("--coeffs", parts[1]),
                         int_arg("--coeffs", parts[2])};
}

// Rational side lengths (a, b, c) placed with side c on the x-axis: the
// apex height satisfies h^2 = b^2 - x^2 in Q, so h lives in a quadratic
// field determined by the squarefree part of that value.
Triangle triangle_from_sides(const Rational& a, const Rational& b, const Rational& c) {
    if (a <= 0 || b <= 0 || c <= 0) usage_error("--sides: side lengths must be positive");
    (void)heron_area_sq(a, b, c);  // throws on a degenerate or impossible triple
    const Rational x = (b * b + c * c - a * a) / (2 * c);
    const Rational h_sq = b * b - x * x;
    const Int pq = rat_num(h_sq) * rat_den(h_sq);
    const auto [sf, f] = squarefree_part(pq);
    const Rational h_coef = make_rational(f, rat_den(h_sq));
    const Point2 origin{QuadVal(Rational(0)), QuadVal(Rational(0))};
    const Point2 base{QuadVal(c), QuadVal(Rational(0))};
    const Point2 apex{QuadVal(x), QuadVal(Rational(0), h_coef, sf)};
    return Triangle{origin, base, apex};
}

// ---------------------------------------------------------------- classify

int run_classify(const std::string& angles, const std::string& sides,
                 const std::string& legs, const std::string& family,
                 const std::string& params, bool quiet) {
    const int given = (!angles.empty()) + (!sides.empty()) + (!legs.empty()) +
                      (!family.empty());
    if (given != 1)
        usage_error("classify: give exactly one of --angles-pi, --sides, --legs, --family");
    if (!params.empty() && family.empty())
        usage_error("--params: only valid together with --family");

    TriangleSpec spec = SidesSpec{1, 1, 1};
    Json input;
    if (!angles.empty()) {
        const auto v = rat_list("--angles-pi", angles, 3, 3);
        spec = AnglesPiSpec{v[0], v[1], v[2]};
        input["kind"] = "angles-pi";
        input["values"] = Json::array({format_rational(v[0]), format_rational(v[1]),
                                       format_rational(v[2])});
    } else if (!sides.empty()) {
        const auto v = rat_list("--sides", sides, 3, 3);
        spec = SidesSpec{v[0], v[1], v[2]};
        input["kind"] = "sides";
        input["values"] = Json::array({format_rational(v[0]), format_rational(v[1]),
                                       format_rational(v[2])});
    } else if (!legs.empty()) {
        const auto parts = split_commas(legs);
        if (parts.size() != 2) usage_error("--legs: expected M,K");
        spec = LegsSpec{int_arg("--legs", parts[0]), int_arg("--legs", parts[1])};
        input["kind"] = "legs";
        input["values"] = Json::array({parts[0], parts[1]});
    } else {
        const auto tag = family_tag_from_name(family);
        if (!tag)
            usage_error("--family: unknown tag '" + family +
                        "' (expected C60, B2A_TAN, B2A_SIN, HALF_SUM, or TWO_PLUS_HALF)");
        if (params.empty()) usage_error("--family requires --params");
        const auto v = rat_list("--params", params, 1, 2);
        spec = FamilySpec{*tag, v};
        input["kind"] = "family";
        input["tag"] = family;
        Json pj = Json::array();
        for (const Rational& p : v) pj.push_back(format_rational(p));
        input["params"] = pj;
    }

    const Verdict verdict = classify(spec);
    if (quiet)
        std::cout << "admits_nonsquare=" << (verdict.admits_nonsquare ? "true" : "false")
                  << "\n";
    else
        emit(verdict_json(input, verdict));
    return 0;
}

// --------------------------------------------------------------- construct

int run_construct(const std::string& kind, const std::string& sides, int n, int k,
                  int M, int K, const std::string& params, const std::string& input_file,
                  const std::string& out, bool skip_verify, bool quiet) {
    Tiling t;
    if (kind == "quadratic") {
        if (sides.empty() || n == 0)
            usage_error("construct quadratic: requires --sides a,b,c and --n");
        const auto v = rat_list("--sides", sides, 3, 3);
        t = quadratic_tiling(triangle_from_sides(v[0], v[1], v[2]), n);
    } else if (kind == "bisect") {
        if (params.empty()) usage_error("construct bisect: requires --params base,height[,D]");
        const auto parts = split_commas(params);
        if (parts.size() < 2 || parts.size() > 3)
            usage_error("--params: expected base,height[,D]");
        const Int disc = parts.size() == 3 ? int_arg("--params", parts[2]) : Int(1);
        t = bisect_isosceles(rat_arg("--params", parts[0]), rat_arg("--params", parts[1]),
                             disc);
    } else if (kind == "hexagonal") {
        if (k == 0) usage_error("construct hexagonal: requires --k");
        t = hexagonal_tiling(k);
    } else if (kind == "tri306090") {
        if (k == 0) usage_error("construct tri306090: requires --k");
        t = tri_306090_tiling(k);
    } else if (kind == "biquadratic") {
        if (M == 0 || K == 0) usage_error("construct biquadratic: requires --M and --K");
        t = biquadratic_tiling(M, K);
    } else if (kind == "glue") {
        if (input_file.empty())
            usage_error("construct glue: requires an input tiling file argument");
        if (params.empty())
            usage_error("construct glue: requires --params outer_side,tile_side[,swap]");
        const auto parts = split_commas(params);
        if (parts.size() < 2 || parts.size() > 3)
            usage_error("--params: expected outer_side,tile_side[,swap]");
        const Tiling base = parse_tiling(read_file(input_file));
        const int outer_side = static_cast<int>(int_arg("--params", parts[0]));
        const int tile_side = static_cast<int>(int_arg("--params", parts[1]));
        const bool swap = parts.size() == 3 && parts[2] != "0";
        t = glue_append_similar(base, outer_side, tile_side, swap);
    } else {
        usage_error("--kind: expected quadratic, bisect, hexagonal, tri306090, "
                    "biquadratic, or glue");
    }

    std::string verified = "skipped";
    if (!skip_verify) {
        const VerifyReport report = verify_tiling(t);
        if (!report.valid)
            throw std::logic_error("constructed tiling failed verification: " +
                                   report.first_failure());
        verified = "passed";
    }

    const std::string text = serialize_tiling(t);
    if (!out.empty()) write_file(out, text);

    if (quiet) {
        std::cout << "ok n=" << t.n_tiles() << "\n";
    } else if (out.empty()) {
        std::cout << text;  // the document itself is the output
    } else {
        Json j;
        j["kind"] = kind;
        j["n_tiles"] = t.n_tiles();
        j["D"] = t.disc.str();
        Json sq = Json::array();
        for (const QuadVal& q : t.tile_sq) sq.push_back(quadval_json(q, t.disc));
        j["tile_sq"] = sq;
        j["verification"] = verified;
        j["output"] = out;
        emit(j);
    }
    return 0;
}

// ------------------------------------------------------------------ verify

int run_verify(const std::string& file, bool quiet) {
    const Tiling t = parse_tiling(read_file(file));
    const VerifyReport report = verify_tiling(t);
    if (quiet)
        std::cout << (report.valid ? "valid" : "invalid") << "\n";
    else
        emit(verify_json(file, report));
    return report.valid ? 0 : 1;
}

// ------------------------------------------------------------------ render

int run_render(const std::string& file, const std::string& out, int width,
               bool skip_verify, bool quiet) {
    const Tiling t = parse_tiling(read_file(file));
    if (!skip_verify) {
        const VerifyReport report = verify_tiling(t);
        if (!report.valid) {
            if (quiet)
                std::cout << "invalid\n";
            else
                emit(verify_json(file, report));
            return 1;
        }
    }
    SvgOptions opts;
    if (width > 0) opts.width_px = width;
    const std::string svg = render_svg(t, opts);
    if (!out.empty()) write_file(out, svg);

    if (quiet) {
        std::cout << "ok polygons=" << t.n_tiles() << "\n";
    } else if (out.empty()) {
        std::cout << svg;
    } else {
        Json j;
        j["file"] = file;
        j["polygons"] = t.n_tiles();
        j["width"] = opts.width_px;
        j["output"] = out;
        emit(j);
    }
    return 0;
}

// ------------------------------------------------------------------- count

int run_count(int case_id, const std::string& params, const std::string& t_flag,
              const std::string& s_flag, const std::string& m_flag, int M, int K,
              bool quiet) {
    CountCertificate cert;
    switch (case_id) {
        case 4: {
            if (params.empty()) usage_error("count --case 4: requires --params a,b,m");
            auto parts = split_commas(params);
            std::string m_text = m_flag;
            if (parts.size() == 2 && !m_text.empty()) parts.push_back(m_text);
            if (parts.size() != 3) usage_error("--params: expected a,b,m");
            cert = count_case4(int_arg("--params", parts[0]), int_arg("--params", parts[1]),
                               int_arg("--params", parts[2]));
            break;
        }
        case 5:
        case 8: {
            if (t_flag.empty())
                usage_error("count --case " + std::to_string(case_id) + ": requires --t");
            const Rational t = rat_arg("--t", t_flag);
            cert = case_id == 5 ? count_case5(t) : count_case8(t);
            break;
        }
        case 6: {
            if (M == 0 || s_flag.empty()) usage_error("count --case 6: requires --M and --s");
            cert = count_case6(M, rat_arg("--s", s_flag));
            break;
        }
        case 7: {
            if (M == 0 || K == 0) usage_error("count --case 7: requires --M and --K");
            cert = triquadratic_params(M, K).cert;
            break;
        }
        default:
            usage_error("--case: expected 4, 5, 6, 7, or 8");
    }
    if (quiet)
        std::cout << "n=" << format_rational(cert.n_expression) << " square_possible="
                  << (cert.is_square_possible ? "true" : "false") << "\n";
    else
        emit(count_json(cert));
    return 0;
}

// ------------------------------------------------------------------- curve

int run_curve_torsion(const std::string& coeffs, bool quiet) {
    const EllipticCurve c = curve_from_coeffs(coeffs);
    const TorsionReport report = torsion_points(c);
    if (quiet) {
        std::cout << "structure=" << report.structure << "\n";
        return 0;
    }
    Json j;
    j["curve"] = curve_json(c);
    Json pts = Json::array();
    for (const ECPoint& p : report.points) pts.push_back(point_str(p));
    j["points"] = pts;
    j["structure"] = report.structure;
    if (report.generator) j["generator"] = point_str(*report.generator);
    emit(j);
    return 0;
}

int run_curve_search(const std::string& coeffs, long long height, bool quiet) {
    const EllipticCurve c = curve_from_coeffs(coeffs);
    const auto points = rational_point_search(c, height);
    if (quiet) {
        std::cout << "points=" << points.size() << "\n";
        return 0;
    }
    Json j;
    j["curve"] = curve_json(c);
    j["evidence_height"] = height;
    Json pts = Json::array();
    for (const ECPoint& p : points) pts.push_back(point_str(p));
    j["points"] = pts;
    j["count"] = points.size();
    emit(j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic triangle tilings: classify, construct, verify, render."};
    app.require_subcommand(1);
    app.fallthrough();  // allow --quiet after the subcommand name
    bool quiet = false;
    app.add_flag("--quiet", quiet, "print only the one-line verdict");

    // classify
    auto* classify_cmd =
        app.add_subcommand("classify", "decide which tiling conditions a triangle satisfies");
    std::string cls_angles, cls_sides, cls_legs, cls_family, cls_params;
    classify_cmd->add_option("--angles-pi", cls_angles, "angles as fractions of pi: pA,pB,pC");
    classify_cmd->add_option("--sides", cls_sides, "rational side lengths: a,b,c");
    classify_cmd->add_option("--legs", cls_legs, "right triangle with integer legs: M,K");
    classify_cmd->add_option("--family", cls_family,
                             "parametric family tag: C60, B2A_TAN, B2A_SIN, HALF_SUM, "
                             "TWO_PLUS_HALF");
    classify_cmd->add_option("--params", cls_params, "family parameters: p1[,p2]");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "build a tiling with exact coordinates");
    std::string con_kind, con_sides, con_params, con_input, con_out;
    int con_n = 0, con_k = 0, con_M = 0, con_K = 0;
    bool con_skip = false;
    construct_cmd->add_option("--kind", con_kind,
                              "quadratic | bisect | hexagonal | tri306090 | biquadratic | glue")
        ->required();
    construct_cmd->add_option("--sides", con_sides, "outer triangle side lengths (quadratic)");
    construct_cmd->add_option("--n", con_n, "subdivision count (quadratic)");
    construct_cmd->add_option("--k", con_k, "size parameter (hexagonal, tri306090)");
    construct_cmd->add_option("--M", con_M, "first parameter (biquadratic)");
    construct_cmd->add_option("--K", con_K, "second parameter (biquadratic)");
    construct_cmd->add_option("--params", con_params,
                              "bisect: base,height[,D]; glue: outer_side,tile_side[,swap]");
    construct_cmd->add_option("input", con_input, "base tiling file (glue)");
    construct_cmd->add_option("-o,--output", con_out, "output .tiling.json path");
    construct_cmd->add_flag("--skip-verify", con_skip, "skip the post-construction verification");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a tiling file bit-exactly");
    std::string ver_file;
    verify_cmd->add_option("file", ver_file, "tiling file (.tiling.json)")->required();

    // render
    auto* render_cmd = app.add_subcommand("render", "render a tiling file to SVG");
    std::string ren_file, ren_out;
    int ren_width = 0;
    bool ren_skip = false;
    render_cmd->add_option("file", ren_file, "tiling file (.tiling.json)")->required();
    render_cmd->add_option("-o,--output", ren_out, "output .svg path");
    render_cmd->add_option("--width", ren_width, "viewport width in pixels");
    render_cmd->add_flag("--skip-verify", ren_skip, "render without verifying first");

    // count
    auto* count_cmd = app.add_subcommand("count", "tile-count certificate for a family instance");
    int cnt_case = 0, cnt_M = 0, cnt_K = 0;
    std::string cnt_params, cnt_t, cnt_s, cnt_m;
    count_cmd->add_option("--case", cnt_case, "condition number: 4..8")->required();
    count_cmd->add_option("--params", cnt_params, "case 4: a,b,m");
    count_cmd->add_option("--t", cnt_t, "cases 5 and 8: rational t in (0, 1/3)");
    count_cmd->add_option("--s", cnt_s, "case 6: rational s in (0, 1)");
    count_cmd->add_option("--m", cnt_m, "case 4: scale m (alternative to third --params entry)");
    count_cmd->add_option("--M", cnt_M, "cases 6 and 7: integer M");
    count_cmd->add_option("--K", cnt_K, "case 7: integer K");

    // curve
    auto* curve_cmd = app.add_subcommand("curve", "elliptic-curve torsion and point search");
    curve_cmd->require_subcommand(1);
    auto* torsion_cmd = curve_cmd->add_subcommand("torsion", "exact rational torsion subgroup");
    std::string tor_coeffs;
    torsion_cmd->add_option("--coeffs", tor_coeffs, "curve y^2 = x^3 + a2 x^2 + a1 x + a0")
        ->required();
    auto* search_cmd = curve_cmd->add_subcommand("search", "bounded-height rational point search");
    std::string sea_coeffs;
    long long sea_height = 1000;
    search_cmd->add_option("--coeffs", sea_coeffs, "curve y^2 = x^3 + a2 x^2 + a1 x + a0")
        ->required();
    search_cmd->add_option("--height", sea_height, "numerator/denominator bound (default 1000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*classify_cmd)
            return run_classify(cls_angles, cls_sides, cls_legs, cls_family, cls_params, quiet);
        if (*construct_cmd)
            return run_construct(con_kind, con_sides, con_n, con_k, con_M, con_K, con_params,
                                 con_input, con_out, con_skip, quiet);
        if (*verify_cmd) return run_verify(ver_file, quiet);
        if (*render_cmd) return run_render(ren_file, ren_out, ren_width, ren_skip, quiet);
        if (*count_cmd)
            return run_count(cnt_case, cnt_params, cnt_t, cnt_s, cnt_m, cnt_M, cnt_K, quiet);
        if (*torsion_cmd) return run_curve_torsion(tor_coeffs, quiet);
        if (*search_cmd) return run_curve_search(sea_coeffs, sea_height, quiet);
        usage_error("no subcommand given");
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
