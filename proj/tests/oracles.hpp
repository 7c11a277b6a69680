// Independent reference implementations used as test oracles. Nothing here
// calls the library routine it checks.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cofinite/geometry.hpp"
#include "cofinite/regions.hpp"

namespace oracle {

using cofinite::Point;
using cofinite::Rational;

inline int orient(const Point& a, const Point& b, const Point& c)
{
    Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(v);
}

// c on the closed segment [a, b].
inline bool on_segment(const Point& a, const Point& b, const Point& c)
{
    return orient(a, b, c) == 0 && std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x)
        && std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

inline bool in_closed_triangle(const Point& a, const Point& b, const Point& c, const Point& p)
{
    int s1 = orient(a, b, p), s2 = orient(b, c, p), s3 = orient(c, a, p);
    bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
    bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
    return !(has_neg && has_pos);
}

/// Hull vertices by Caratheodory: p is a vertex iff it is in no closed
/// triangle and on no closed segment of other points. Ordered
/// counterclockwise from the lexicographic minimum.
inline std::vector<Point> brute_hull(const std::vector<Point>& pts)
{
    const std::size_t n = pts.size();
    std::vector<Point> verts;
    for (std::size_t i = 0; i < n; ++i) {
        bool inside = false;
        for (std::size_t a = 0; a < n && !inside; ++a) {
            for (std::size_t b = a + 1; b < n && !inside; ++b) {
                if (a == i || b == i) {
                    continue;
                }
                if (on_segment(pts[a], pts[b], pts[i])) {
                    inside = true;
                }
                for (std::size_t c = b + 1; c < n && !inside; ++c) {
                    if (c != i && orient(pts[a], pts[b], pts[c]) != 0
                        && in_closed_triangle(pts[a], pts[b], pts[c], pts[i])) {
                        inside = true;
                    }
                }
            }
        }
        if (!inside) {
            verts.push_back(pts[i]);
        }
    }
    if (verts.size() <= 2) {
        std::sort(verts.begin(), verts.end());
        return verts;
    }
    Point o = *std::min_element(verts.begin(), verts.end());
    verts.erase(std::find(verts.begin(), verts.end(), o));
    std::sort(verts.begin(), verts.end(), [&](const Point& a, const Point& b) { return orient(o, a, b) > 0; });
    verts.insert(verts.begin(), o);
    return verts;
}

inline bool has_collinear_triple(const std::vector<Point>& pts)
{
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (orient(pts[i], pts[j], pts[k]) == 0)
                    return true;
    return false;
}

/// Strictly inside the convex polygon `hull` (ccw).
inline bool in_open_hull(const std::vector<Point>& hull, const Point& p)
{
    if (hull.size() < 3) {
        return false;
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
        if (orient(hull[i], hull[(i + 1) % hull.size()], p) <= 0) {
            return false;
        }
    }
    return true;
}

// Region counts by counting rather than by the closed forms.
inline long convex_count(long n)
{
    long m = 0;
    while (2 * (m + 1) <= n + 5) {
        ++m;
    }
    return m - ((n == 0 || n == 1 || n == 3) ? 1 : 0);
}

inline long disjoint_count(long n)
{
    // f(0..3) = 1, 2, 3, 3 and f(n) = 2 + f(n - 3).
    static const long base[] = {1, 2, 3, 3};
    return n <= 3 ? base[n] : 2 + disjoint_count(n - 3);
}

inline long general_count_bound(long n)
{
    long m = 0;
    while (11 * (m + 1) <= 7 * n) {
        ++m;
    }
    return m + 4;
}

/// Membership from the definitions: strict side by the sign of aX+bY-c,
/// boundary pieces by the position parameter along the line.
inline bool ghp_member(const cofinite::GeneralizedHalfPlane& g, const Point& p)
{
    Rational v = Rational(g.line().a()) * p.x + Rational(g.line().b()) * p.y - Rational(g.line().c());
    const bool positive = g.side() == cofinite::Side::OpenPositive || g.side() == cofinite::Side::ClosedPositive;
    if (v != 0) {
        return (v > 0) == positive;
    }
    const auto& b = g.boundary();
    if (std::holds_alternative<cofinite::FullLine>(b)) {
        return true;
    }
    // Parameter of p along the line direction (-b, a).
    auto param = [&](const Point& q) -> Rational { return -Rational(g.line().b()) * q.x + Rational(g.line().a()) * q.y; };
    if (const auto* r = std::get_if<cofinite::OpenRay>(&b)) {
        Rational dir = -Rational(g.line().b()) * r->direction.x + Rational(g.line().a()) * r->direction.y;
        return dir > 0 ? param(p) > param(r->origin) : param(p) < param(r->origin);
    }
    if (const auto* s = std::get_if<cofinite::OpenSegment>(&b)) {
        Rational ta = param(s->end_a), tb = param(s->end_b), t = param(p);
        return std::min(ta, tb) < t && t < std::max(ta, tb);
    }
    return false;
}

inline bool region_member(const cofinite::ConvexRegion& r, const Point& p)
{
    for (const auto& g : r.constraints()) {
        if (!ghp_member(g, p)) {
            return false;
        }
    }
    return true;
}

/// Random rationals with small denominators, plus points of the given
/// lines and near the given points, where membership changes.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    Rational scalar(long range = 12, long den = 8)
    {
        return cofinite::make_rational(static_cast<long>(rng_() % (2 * range * den + 1)) - range * den, den);
    }

    Point point(long range = 12) { return {scalar(range), scalar(range)}; }

    Point near(const Point& c)
    {
        Rational r(1, static_cast<long>(1 + rng_() % 64));
        return {c.x + r * scalar(1, 4), c.y + r * scalar(1, 4)};
    }

    Point on(const cofinite::Line& l, long range = 12)
    {
        return l.anchor() + scalar(range) * l.direction();
    }

    std::uint64_t raw() { return rng_(); }

private:
    std::mt19937_64 rng_;
};

/// Mutations that must make a valid cover fail.
inline cofinite::Cover drop_first_region(cofinite::Cover c)
{
    c.regions.erase(c.regions.begin());
    return c;
}

/// Replaces the first region whose closure holds a point of P by that
/// closure. Returns false when no region qualifies.
inline bool swallow_point(cofinite::Cover& c)
{
    for (auto& r : c.regions) {
        auto closed = r.closure();
        for (const auto& p : c.instance.points()) {
            if (closed.contains(p)) {
                r = closed;
                return true;
            }
        }
    }
    return false;
}

} // namespace oracle
