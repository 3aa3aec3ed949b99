#pragma once
// Deterministic SVG rendering of tilings.
//
// Coordinates are decimal approximations (configurable significant digits) of
// the exact values; the picture is a convenience, the JSON file stays
// authoritative.  The output contains one <polygon class="tile"> per tile
// plus a single <polygon class="outline"> for the outer triangle, with the
// y-axis flipped so the tiling appears in the usual orientation.

#include <cstdio>
#include <string>
#include <vector>

#include "tritile/quadval.hpp"
#include "tritile/tiling.hpp"

namespace tritile {

struct SvgOptions {
    int width_px = 800;
    int precision = 9;  // significant decimal digits
};

namespace detail {

inline std::string svg_num(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

}  // namespace detail

inline std::string render_svg(const Tiling& t, const SvgOptions& opts = {}) {
    const int width = opts.width_px > 10 ? opts.width_px : 800;
    const int precision =
        opts.precision >= 1 && opts.precision <= 17 ? opts.precision : 9;

    double xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    bool first = true;
    const auto grow = [&](const Point2& p) {
        const double x = quad_to_double(p.x), y = quad_to_double(p.y);
        if (first) {
            xlo = xhi = x;
            ylo = yhi = y;
            first = false;
            return;
        }
        if (x < xlo) xlo = x;
        if (x > xhi) xhi = x;
        if (y < ylo) ylo = y;
        if (y > yhi) yhi = y;
    };
    for (const Point2& p : t.outer) grow(p);
    for (const Triangle& tri : t.tiles)
        for (const Point2& p : tri) grow(p);

    const double margin = width * 0.04;
    const double spanx = xhi - xlo > 0 ? xhi - xlo : 1.0;
    const double spany = yhi - ylo > 0 ? yhi - ylo : 1.0;
    const double scale = (width - 2 * margin) / spanx;
    const double height = spany * scale + 2 * margin;

    const auto map_point = [&](const Point2& p) {
        const double x = margin + (quad_to_double(p.x) - xlo) * scale;
        const double y = height - margin - (quad_to_double(p.y) - ylo) * scale;
        return detail::svg_num(x, precision) + "," + detail::svg_num(y, precision);
    };
    const auto polygon_points = [&](const Triangle& tri) {
        return map_point(tri[0]) + " " + map_point(tri[1]) + " " + map_point(tri[2]);
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(width) + "\" height=\"" +
           detail::svg_num(height, precision) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + detail::svg_num(height, precision) +
           "\">\n";
    for (const Triangle& tri : t.tiles) {
        out += "  <polygon class=\"tile\" points=\"" + polygon_points(tri) +
               "\" fill=\"#dbe7f4\" stroke=\"#27496d\" stroke-width=\"1\"/>\n";
    }
    out += "  <polygon class=\"outline\" points=\"" + polygon_points(t.outer) +
           "\" fill=\"none\" stroke=\"#0b1f33\" stroke-width=\"2.5\"/>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace tritile
