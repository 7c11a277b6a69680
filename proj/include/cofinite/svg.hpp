#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cofinite/error.hpp"
#include "cofinite/regions.hpp"
#include "cofinite/verifier.hpp"

namespace cofinite {

inline constexpr std::size_t kPaletteSize = 64;

/// Distinct hues; 29 is coprime to 64 so neighbours in the list differ
/// strongly.
inline std::string palette_color(std::size_t i)
{
    char buf[48];
    const double hue = static_cast<double>((i * 29) % kPaletteSize) * 360.0 / kPaletteSize;
    const int light = (i / 8) % 2 == 0 ? 55 : 42;
    std::snprintf(buf, sizeof buf, "hsl(%.3f,70%%,%d%%)", hue, light);
    return buf;
}

namespace detail {

inline std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Viewport {
    Rational lo_x, lo_y, hi_x, hi_y;
    static constexpr double kSize = 1000.0;

    std::string sx(const Rational& x) const { return fixed(Rational((x - lo_x) / (hi_x - lo_x)).get_d() * kSize); }
    std::string sy(const Rational& y) const { return fixed(Rational((hi_y - y) / (hi_y - lo_y)).get_d() * kSize); }

    static std::string fixed(double v)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        std::string s = buf;
        return s == "-0.000" ? "0.000" : s;
    }
};

// Bounding box of P grown to three times its extent about the centre.
inline Viewport viewport_for(const Instance& inst)
{
    Viewport v{-1, -1, 1, 1};
    const auto& pts = inst.points();
    if (pts.empty()) {
        return v;
    }
    Rational lx = pts[0].x, hx = pts[0].x, ly = pts[0].y, hy = pts[0].y;
    for (const auto& p : pts) {
        lx = p.x < lx ? p.x : lx;
        hx = p.x > hx ? p.x : hx;
        ly = p.y < ly ? p.y : ly;
        hy = p.y > hy ? p.y : hy;
    }
    Rational half = std::max(Rational(hx - lx), Rational(hy - ly)) / 2;
    if (half == 0) {
        half = 1;
    }
    Rational cx = (lx + hx) / 2;
    Rational cy = (ly + hy) / 2;
    return {cx - 3 * half, cy - 3 * half, cx + 3 * half, cy + 3 * half};
}

// Closed half-plane clip of a polygon.
inline std::vector<Point> clip(const std::vector<Point>& poly, const GeneralizedHalfPlane& g)
{
    const int want = side_sign(g.side());
    auto value = [&](const Point& p) -> Rational {
        return want * (Rational(g.line().a()) * p.x + Rational(g.line().b()) * p.y - Rational(g.line().c()));
    };
    std::vector<Point> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& s = poly[i];
        const Point& e = poly[(i + 1) % poly.size()];
        Rational vs = value(s);
        Rational ve = value(e);
        if (vs >= 0) {
            out.push_back(s);
        }
        if ((vs > 0 && ve < 0) || (vs < 0 && ve > 0)) {
            Rational t = vs / (vs - ve);
            out.push_back(s + t * (e - s));
        }
    }
    return out;
}

// Portion of segment [a, b] inside the closures of the given constraints.
inline std::optional<std::pair<Point, Point>> clip_segment(const Point& a, const Point& b,
                                                           const std::vector<GeneralizedHalfPlane>& cs,
                                                           const GeneralizedHalfPlane* skip)
{
    Rational lo = 0;
    Rational hi = 1;
    const Vec d = b - a;
    for (const auto& g : cs) {
        if (&g == skip) {
            continue;
        }
        const int want = side_sign(g.side());
        Rational v0 = want * (dot(g.line().normal(), Vec(a.x, a.y)) - Rational(g.line().c()));
        Rational dv = want * dot(g.line().normal(), d);
        // v0 + t*dv >= 0
        if (dv == 0) {
            if (v0 < 0) {
                return std::nullopt;
            }
            continue;
        }
        Rational t = -v0 / dv;
        if (dv > 0) {
            lo = t > lo ? t : lo;
        } else {
            hi = t < hi ? t : hi;
        }
    }
    if (lo >= hi) {
        return std::nullopt;
    }
    return std::make_pair(a + lo * d, a + hi * d);
}

} // namespace detail

/// Regions filled and clipped to the viewport, their boundary pieces
/// stroked, P as black dots, report witnesses as red rings.
inline std::string render_svg(const Cover& cover, const CoverReport* report = nullptr)
{
    if (cover.regions.size() > kPaletteSize) {
        throw Error(Errc::TooManyRegions, std::to_string(cover.regions.size()) + " regions exceed the "
                                              + std::to_string(kPaletteSize) + "-colour palette");
    }
    const detail::Viewport vp = detail::viewport_for(cover.instance);
    const std::vector<Point> frame{{vp.lo_x, vp.lo_y}, {vp.hi_x, vp.lo_y}, {vp.hi_x, vp.hi_y}, {vp.lo_x, vp.hi_y}};
    // Rays are drawn out to a length that always leaves the viewport.
    const Rational reach = 4 * (vp.hi_x - vp.lo_x);
    const std::vector<GeneralizedHalfPlane> frame_sides{
        {Line::from_rationals(1, 0, vp.lo_x), Side::OpenPositive},
        {Line::from_rationals(1, 0, vp.hi_x), Side::OpenNegative},
        {Line::from_rationals(0, 1, vp.lo_y), Side::OpenPositive},
        {Line::from_rationals(0, 1, vp.hi_y), Side::OpenNegative},
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n";
    svg << "<title>" << detail::xml_escape(cover.builder) << ": " << cover.regions.size() << " regions, " << cover.instance.size()
        << " points</title>\n";
    svg << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

    for (std::size_t i = 0; i < cover.regions.size(); ++i) {
        const auto& region = cover.regions[i];
        const std::string color = palette_color(i);
        std::vector<Point> poly = frame;
        for (const auto& g : region.constraints()) {
            poly = detail::clip(poly, g);
            if (poly.empty()) {
                break;
            }
        }
        svg << "<g class=\"region\" data-index=\"" << i << "\" data-tag=\"" << detail::xml_escape(region.tag()) << "\">\n";
        if (poly.size() >= 3) {
            svg << "<polygon fill=\"" << color << "\" fill-opacity=\"0.35\" stroke=\"none\" points=\"";
            for (std::size_t k = 0; k < poly.size(); ++k) {
                svg << (k ? " " : "") << vp.sx(poly[k].x) << "," << vp.sy(poly[k].y);
            }
            svg << "\"/>\n";
        }
        for (const auto& g : region.constraints()) {
            std::optional<std::pair<Point, Point>> piece;
            const auto& b = g.boundary();
            if (const auto* r = std::get_if<OpenRay>(&b)) {
                piece = std::make_pair(r->origin, r->origin + (reach / detail::max_abs(r->direction)) * r->direction);
            } else if (const auto* s = std::get_if<OpenSegment>(&b)) {
                piece = std::make_pair(s->end_a, s->end_b);
            } else if (std::holds_alternative<FullLine>(b)) {
                Point o = g.line().anchor();
                Vec u = g.line().direction();
                Rational t = (reach + detail::max_abs(o - Point(vp.lo_x, vp.lo_y))) / detail::max_abs(u);
                piece = std::make_pair(o + (-t) * u, o + t * u);
            }
            if (!piece) {
                continue;
            }
            auto seg = detail::clip_segment(piece->first, piece->second, region.constraints(), &g);
            if (seg) {
                seg = detail::clip_segment(seg->first, seg->second, frame_sides, nullptr);
            }
            if (seg) {
                svg << "<line stroke=\"" << color << "\" stroke-width=\"3\" x1=\"" << vp.sx(seg->first.x)
                    << "\" y1=\"" << vp.sy(seg->first.y) << "\" x2=\"" << vp.sx(seg->second.x) << "\" y2=\""
                    << vp.sy(seg->second.y) << "\"/>\n";
            }
        }
        svg << "</g>\n";
    }

    for (const auto& p : cover.instance.points()) {
        svg << "<circle class=\"point\" cx=\"" << vp.sx(p.x) << "\" cy=\"" << vp.sy(p.y)
            << "\" r=\"5\" fill=\"black\"/>\n";
    }
    if (report) {
        for (const auto& w : report->witnesses) {
            svg << "<circle class=\"witness\" data-kind=\"" << violation_name(w.kind) << "\" cx=\"" << vp.sx(w.point.x)
                << "\" cy=\"" << vp.sy(w.point.y) << "\" r=\"9\" fill=\"none\" stroke=\"red\" stroke-width=\"3\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace cofinite
