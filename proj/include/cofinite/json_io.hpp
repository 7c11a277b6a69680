#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "cofinite/constructions.hpp"
#include "cofinite/error.hpp"
#include "cofinite/regions.hpp"
#include "cofinite/verifier.hpp"

namespace cofinite::json {

using Json = nlohmann::ordered_json;

//---------------------------------------------------------------------------//
// Emit
//---------------------------------------------------------------------------//

inline Json emit(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

inline const char* side_name(Side s)
{
    switch (s) {
    case Side::OpenPositive: return "OPEN_POSITIVE";
    case Side::OpenNegative: return "OPEN_NEGATIVE";
    case Side::ClosedPositive: return "CLOSED_POSITIVE";
    case Side::ClosedNegative: return "CLOSED_NEGATIVE";
    }
    return "?";
}

inline Json emit(const Line& l)
{
    return {{"a", l.a().get_str()}, {"b", l.b().get_str()}, {"c", l.c().get_str()}};
}

inline Json emit(const BoundaryInclusion& b)
{
    if (std::holds_alternative<FullLine>(b)) {
        return {{"kind", "FULL_LINE"}};
    }
    if (const auto* r = std::get_if<OpenRay>(&b)) {
        return {{"kind", "OPEN_RAY"}, {"origin", emit(r->origin)}, {"direction", emit(r->direction)}};
    }
    if (const auto* s = std::get_if<OpenSegment>(&b)) {
        return {{"kind", "OPEN_SEGMENT"}, {"endA", emit(s->end_a)}, {"endB", emit(s->end_b)}};
    }
    return {{"kind", "EMPTY"}};
}

inline Json emit(const GeneralizedHalfPlane& g)
{
    return {{"line", emit(g.line())}, {"side", side_name(g.side())}, {"boundary", emit(g.boundary())}};
}

inline Json emit(const ConvexRegion& r)
{
    Json cs = Json::array();
    for (const auto& g : r.constraints()) {
        cs.push_back(emit(g));
    }
    return {{"tag", r.tag()}, {"constraints", std::move(cs)}};
}

inline Json emit(const Instance& inst)
{
    Json pts = Json::array();
    for (const auto& p : inst.points()) {
        pts.push_back(emit(p));
    }
    return {{"label", inst.label()}, {"points", std::move(pts)}};
}

inline Json emit(const Cover& c)
{
    Json regions = Json::array();
    for (const auto& r : c.regions) {
        regions.push_back(emit(r));
    }
    return {{"builder", c.builder},
            {"claim", {{"mode", c.claim.mode == CoverMode::Cover ? "COVER" : "ENCAPSULATE"},
                       {"disjoint", c.claim.disjoint}}},
            {"instance", emit(c.instance)},
            {"regions", std::move(regions)}};
}

inline Json emit(const CoverReport& r)
{
    Json hist = Json::object();
    for (const auto& [k, v] : r.multiplicity) {
        hist[std::to_string(k)] = v;
    }
    Json wit = Json::array();
    for (const auto& w : r.witnesses) {
        Json j = {{"point", emit(w.point)}, {"kind", violation_name(w.kind)}};
        if (w.direction) {
            j["direction"] = emit(*w.direction);
        }
        if (w.radius) {
            j["radius"] = to_string(*w.radius);
        }
        wit.push_back(std::move(j));
    }
    Json out = {{"verdict", r.passed() ? "PASS" : "FAIL"},
                {"facesChecked", r.faces_checked},
                {"multiplicity", std::move(hist)},
                {"witnesses", std::move(wit)}};
    if (r.touch) {
        Json t = Json::array();
        for (const auto& pts : *r.touch) {
            Json row = Json::array();
            for (const auto& p : pts) {
                row.push_back(emit(p));
            }
            t.push_back(std::move(row));
        }
        out["touch"] = std::move(t);
    }
    return out;
}

//---------------------------------------------------------------------------//
// Parse
//---------------------------------------------------------------------------//

namespace detail {

[[noreturn]] inline void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

inline const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

inline std::string text(const Json& j)
{
    if (!j.is_string()) {
        bad("expected a string, got " + j.dump());
    }
    return j.get<std::string>();
}

inline BigInt integer(const Json& j)
{
    std::string s = text(j);
    if (!is_integer_literal(s)) {
        bad("malformed integer '" + s + "'");
    }
    return BigInt(s, 10);
}

} // namespace detail

inline Point parse_point(const Json& j)
{
    if (!j.is_array() || j.size() != 2) {
        detail::bad("a point is a pair of rationals, got " + j.dump());
    }
    return {parse_rational(detail::text(j[0])), parse_rational(detail::text(j[1]))};
}

inline Side parse_side(const std::string& s)
{
    if (s == "OPEN_POSITIVE") return Side::OpenPositive;
    if (s == "OPEN_NEGATIVE") return Side::OpenNegative;
    if (s == "CLOSED_POSITIVE") return Side::ClosedPositive;
    if (s == "CLOSED_NEGATIVE") return Side::ClosedNegative;
    detail::bad("unknown side '" + s + "'");
}

inline Line parse_line(const Json& j)
{
    Line l(detail::integer(detail::field(j, "a")), detail::integer(detail::field(j, "b")),
           detail::integer(detail::field(j, "c")));
    // Lines are stored canonical; anything else would not re-emit verbatim.
    if (l.a().get_str() != detail::text(j.at("a")) || l.b().get_str() != detail::text(j.at("b"))
        || l.c().get_str() != detail::text(j.at("c"))) {
        detail::bad("line coefficients are not in canonical form: " + j.dump());
    }
    return l;
}

inline BoundaryInclusion parse_boundary(const Json& j)
{
    const std::string kind = detail::text(detail::field(j, "kind"));
    if (kind == "EMPTY") return NoBoundary{};
    if (kind == "FULL_LINE") return FullLine{};
    if (kind == "OPEN_RAY") {
        return OpenRay{parse_point(detail::field(j, "origin")), parse_point(detail::field(j, "direction"))};
    }
    if (kind == "OPEN_SEGMENT") {
        return OpenSegment{parse_point(detail::field(j, "endA")), parse_point(detail::field(j, "endB"))};
    }
    detail::bad("unknown boundary kind '" + kind + "'");
}

inline GeneralizedHalfPlane parse_half_plane(const Json& j)
{
    return {parse_line(detail::field(j, "line")), parse_side(detail::text(detail::field(j, "side"))),
            parse_boundary(detail::field(j, "boundary"))};
}

inline ConvexRegion parse_region(const Json& j)
{
    std::vector<GeneralizedHalfPlane> cs;
    for (const auto& g : detail::field(j, "constraints")) {
        cs.push_back(parse_half_plane(g));
    }
    return ConvexRegion(std::move(cs), detail::text(detail::field(j, "tag")));
}

inline Instance parse_instance(const Json& j)
{
    std::vector<Point> pts;
    for (const auto& p : detail::field(j, "points")) {
        pts.push_back(parse_point(p));
    }
    std::string label = j.contains("label") ? detail::text(j.at("label")) : std::string();
    return Instance(std::move(pts), std::move(label));
}

inline Cover parse_cover(const Json& j)
{
    Cover c;
    c.builder = detail::text(detail::field(j, "builder"));
    const Json& claim = detail::field(j, "claim");
    const std::string mode = detail::text(detail::field(claim, "mode"));
    if (mode == "COVER") {
        c.claim.mode = CoverMode::Cover;
    } else if (mode == "ENCAPSULATE") {
        c.claim.mode = CoverMode::Encapsulate;
    } else {
        detail::bad("unknown claim mode '" + mode + "'");
    }
    const Json& disjoint = detail::field(claim, "disjoint");
    if (!disjoint.is_boolean()) {
        detail::bad("claim.disjoint must be a boolean");
    }
    c.claim.disjoint = disjoint.get<bool>();
    c.instance = parse_instance(detail::field(j, "instance"));
    for (const auto& r : detail::field(j, "regions")) {
        c.regions.push_back(parse_region(r));
    }
    return c;
}

inline Violation parse_violation(const std::string& s)
{
    for (Violation v : {Violation::Uncovered, Violation::PointOfPCovered, Violation::DoubleCovered,
                        Violation::NeighborhoodGap}) {
        if (s == violation_name(v)) {
            return v;
        }
    }
    detail::bad("unknown violation kind '" + s + "'");
}

inline CoverReport parse_report(const Json& j)
{
    CoverReport r;
    const std::string verdict = detail::text(detail::field(j, "verdict"));
    if (verdict != "PASS" && verdict != "FAIL") {
        detail::bad("unknown verdict '" + verdict + "'");
    }
    r.verdict = verdict == "PASS" ? Verdict::Pass : Verdict::Fail;
    r.faces_checked = detail::field(j, "facesChecked").get<std::size_t>();
    for (const auto& [k, v] : detail::field(j, "multiplicity").items()) {
        r.multiplicity[std::stoul(k)] = v.get<std::size_t>();
    }
    for (const auto& w : detail::field(j, "witnesses")) {
        Witness wit{parse_point(detail::field(w, "point")), parse_violation(detail::text(detail::field(w, "kind"))),
                    {}, {}};
        if (w.contains("direction")) {
            wit.direction = parse_point(w.at("direction"));
        }
        if (w.contains("radius")) {
            wit.radius = parse_rational(detail::text(w.at("radius")));
        }
        r.witnesses.push_back(std::move(wit));
    }
    if (j.contains("touch")) {
        std::vector<std::vector<Point>> touch;
        for (const auto& row : j.at("touch")) {
            std::vector<Point> pts;
            for (const auto& p : row) {
                pts.push_back(parse_point(p));
            }
            touch.push_back(std::move(pts));
        }
        r.touch = std::move(touch);
    }
    return r;
}

/// Parses text, mapping syntax errors and type mismatches to ParseError.
template <typename F>
auto parse_text(const std::string& text, F&& parse)
{
    try {
        return parse(Json::parse(text));
    } catch (const Json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace cofinite::json
