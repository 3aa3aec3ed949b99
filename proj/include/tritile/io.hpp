#pragma once
// Tiling file format (JSON container, exact string-encoded rationals).
//
// {
//   "version": 1,
//   "D": 3,
//   "tile_sq": [v, v, v],
//   "outer":  [[v, v], [v, v], [v, v]],
//   "tiles":  [[[v, v], [v, v], [v, v]], ...]
// }
//
// Every value v is a pair ["p/q", "r/s"] of rational strings meaning
// p/q + (r/s)*sqrt(D) against the file-level discriminant D; tile_sq holds
// the squared tile side lengths (the sides themselves need not lie in the
// coordinate field, their squares do).  A bare rational string is accepted
// on input as shorthand for a zero surd part, and non-canonical fractions
// are normalized; serialization always emits the canonical pair form.
// parse_tiling performs syntactic and field-level validation only; the
// geometric checks live in verify_tiling, which never trusts file content.

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "tritile/rational.hpp"
#include "tritile/tiling.hpp"

namespace tritile {

inline constexpr int kTilingFileVersion = 1;

namespace detail {

using TilingJson = nlohmann::ordered_json;

inline QuadVal value_from_json(const TilingJson& j, const Int& disc,
                               const std::string& where) {
    try {
        if (j.is_string()) return QuadVal(parse_rational(j.get<std::string>()));
        if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string()) {
            const Rational rat = parse_rational(j[0].get<std::string>());
            const Rational surd = parse_rational(j[1].get<std::string>());
            return QuadVal(rat, surd, surd == 0 ? Int(1) : disc);
        }
    } catch (const std::exception& e) {
        throw std::runtime_error("tiling file: bad value in " + where + ": " + e.what());
    }
    throw std::runtime_error("tiling file: " + where +
                             " must be a rational string or a pair of rational strings");
}

inline Point2 point_from_json(const TilingJson& j, const Int& disc,
                              const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw std::runtime_error("tiling file: " + where +
                                 " must be a two-element [x, y] array");
    return Point2{value_from_json(j[0], disc, where + " x"),
                  value_from_json(j[1], disc, where + " y")};
}

inline Triangle triangle_from_json(const TilingJson& j, const Int& disc,
                                   const std::string& where) {
    if (!j.is_array() || j.size() != 3)
        throw std::runtime_error("tiling file: " + where +
                                 " must be a three-point array");
    return Triangle{point_from_json(j[0], disc, where + " point 0"),
                    point_from_json(j[1], disc, where + " point 1"),
                    point_from_json(j[2], disc, where + " point 2")};
}

inline TilingJson value_to_json(const QuadVal& v, const Int& disc) {
    if (v.surd != 0 && v.disc != disc)
        throw std::logic_error(
            "serialize_tiling: value discriminant differs from the tiling "
            "discriminant");
    return TilingJson::array({format_rational(v.rat), format_rational(v.surd)});
}

inline TilingJson point_to_json(const Point2& p, const Int& disc) {
    return TilingJson::array({value_to_json(p.x, disc), value_to_json(p.y, disc)});
}

inline TilingJson triangle_to_json(const Triangle& t, const Int& disc) {
    return TilingJson::array({point_to_json(t[0], disc), point_to_json(t[1], disc),
                              point_to_json(t[2], disc)});
}

}  // namespace detail

inline Tiling parse_tiling(const std::string& text) {
    detail::TilingJson j;
    try {
        j = detail::TilingJson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("tiling file: ") + e.what());
    }
    if (!j.is_object())
        throw std::runtime_error("tiling file: top level must be an object");
    for (const char* key : {"version", "D", "tile_sq", "outer", "tiles"}) {
        if (!j.contains(key))
            throw std::runtime_error(std::string("tiling file: missing field '") +
                                     key + "'");
    }
    if (!j["version"].is_number_integer() ||
        j["version"].get<long long>() != kTilingFileVersion)
        throw std::runtime_error("tiling file: unsupported version (expected 1)");
    if (!j["D"].is_number_integer())
        throw std::runtime_error("tiling file: D must be an integer");

    Tiling t;
    t.disc = Int(j["D"].get<long long>());
    if (t.disc < 1) throw std::runtime_error("tiling file: D must be positive");
    if (squarefree_part(t.disc).first != t.disc)
        throw std::runtime_error("tiling file: D not squarefree");

    const auto& tile_sq = j["tile_sq"];
    if (!tile_sq.is_array() || tile_sq.size() != 3)
        throw std::runtime_error("tiling file: tile_sq must hold three values");
    for (int i = 0; i < 3; ++i)
        t.tile_sq[i] = detail::value_from_json(tile_sq[i], t.disc,
                                               "tile_sq[" + std::to_string(i) + "]");

    t.outer = detail::triangle_from_json(j["outer"], t.disc, "outer");

    const auto& tiles = j["tiles"];
    if (!tiles.is_array() || tiles.empty())
        throw std::runtime_error("tiling file: tiles must hold at least one tile");
    t.tiles.reserve(tiles.size());
    for (std::size_t i = 0; i < tiles.size(); ++i)
        t.tiles.push_back(detail::triangle_from_json(
            tiles[i], t.disc, "tile " + std::to_string(i)));
    return t;
}

inline std::string serialize_tiling(const Tiling& t) {
    if (t.disc < 1 || squarefree_part(t.disc).first != t.disc)
        throw std::logic_error("serialize_tiling: discriminant must be squarefree");
    detail::TilingJson j;
    j["version"] = kTilingFileVersion;
    j["D"] = t.disc.convert_to<long long>();
    j["tile_sq"] = detail::TilingJson::array();
    for (const QuadVal& q : t.tile_sq)
        j["tile_sq"].push_back(detail::value_to_json(q, t.disc));
    j["outer"] = detail::triangle_to_json(t.outer, t.disc);
    j["tiles"] = detail::TilingJson::array();
    for (const Triangle& tri : t.tiles)
        j["tiles"].push_back(detail::triangle_to_json(tri, t.disc));
    return j.dump(2) + "\n";
}

}  // namespace tritile
