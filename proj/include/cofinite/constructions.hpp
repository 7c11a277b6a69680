#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cofinite/error.hpp"
#include "cofinite/geometry.hpp"
#include "cofinite/regions.hpp"

namespace cofinite {

enum class Setting { ConvexCover, DisjointCover, GeneralCoverUb, GridEnc };

/// 1 for n in {0, 1, 3}, else 0.
inline long delta(long n) { return (n == 0 || n == 1 || n == 3) ? 1 : 0; }

/// Region counts of the constructions. For GridEnc the argument is the grid
/// side K rather than the number of points.
inline long target_count(long n, Setting setting)
{
    if (n < 0) {
        throw std::invalid_argument("target_count: negative n");
    }
    switch (setting) {
    case Setting::ConvexCover: return (n + 5) / 2 - delta(n);
    case Setting::DisjointCover: return (2 * n + 5) / 3;
    case Setting::GeneralCoverUb: return (7 * n) / 11 + 4;
    case Setting::GridEnc: return 2 * n + 2;
    }
    return 0;
}

namespace detail {

inline Vec left_normal(const Vec& d) { return {-d.y, d.x}; }

inline std::vector<Point> without(const std::vector<Point>& pts, const std::vector<Point>& removed)
{
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        if (std::find(removed.begin(), removed.end(), p) == removed.end()) {
            out.push_back(p);
        }
    }
    return out;
}

inline std::size_t index_of(const std::vector<Point>& pts, const Point& p)
{
    auto it = std::find(pts.begin(), pts.end(), p);
    if (it == pts.end()) {
        throw std::logic_error("point " + to_string(p) + " missing from sequence");
    }
    return static_cast<std::size_t>(it - pts.begin());
}

inline void require(bool condition, const char* what)
{
    if (!condition) {
        throw std::logic_error(what);
    }
}

inline std::vector<ConvexRegion> clip_all(const std::vector<ConvexRegion>& regions, const ConvexRegion& clip)
{
    std::vector<ConvexRegion> out;
    out.reserve(regions.size());
    for (const auto& r : regions) {
        ConvexRegion k = r.intersect(clip);
        k.set_tag(r.tag() + " & " + clip.tag());
        out.push_back(std::move(k));
    }
    return out;
}

//---------------------------------------------------------------------------//
// Pairwise disjoint covers
//---------------------------------------------------------------------------//

inline std::vector<ConvexRegion> disjoint_regions(const std::vector<Point>& pts, int depth = 0)
{
    const std::string lvl = std::to_string(depth);
    if (pts.empty()) {
        return {ConvexRegion({}, "plane")};
    }
    if (pts.size() == 1) {
        auto [g1, g2] = split_at_point(pts[0], Vec(0, 1));
        return {ConvexRegion({g1}, "left half " + lvl), ConvexRegion({g2}, "right half " + lvl)};
    }
    if (pts.size() == 2) {
        const Point& p = pts[0];
        const Point& q = pts[1];
        Line l = line_through(p, q);
        return {
            ConvexRegion({GeneralizedHalfPlane(l, Side::OpenPositive, OpenRay{q, q - p})}, "positive side " + lvl),
            ConvexRegion({GeneralizedHalfPlane(l, Side::OpenNegative, OpenRay{p, p - q})}, "negative side " + lvl),
            ConvexRegion({GeneralizedHalfPlane(l, Side::OpenPositive, OpenSegment{p, q}),
                          GeneralizedHalfPlane(l, Side::OpenNegative, OpenSegment{p, q})},
                         "segment " + lvl),
        };
    }

    // Peel three consecutive hull vertices x, y, z around the lexicographic
    // minimum y; A, B, C partition the plane minus {x, y, z}.
    std::vector<Point> hull = convex_hull(pts);
    const Point& y = hull.front();
    const Point& x = hull.back();
    const Point& z = hull[1];
    Vec d = (y - x) + (y - z);
    Line l1 = line_through(x, y);
    Line l2 = line_through(y, z);
    Line l3 = line_along(y, d);

    ConvexRegion a({GeneralizedHalfPlane::away_from(l1, z, OpenSegment{y, x}),
                    GeneralizedHalfPlane::toward(l3, x, OpenRay{y, d})},
                   "A " + lvl);
    ConvexRegion b({GeneralizedHalfPlane::away_from(l2, x, OpenSegment{y, z}),
                    GeneralizedHalfPlane::toward(l3, z)},
                   "B " + lvl);
    ConvexRegion c({GeneralizedHalfPlane::toward(l1, z, OpenRay{x, x - y}),
                    GeneralizedHalfPlane::toward(l2, x, OpenRay{z, z - y})},
                   "C " + lvl);

    std::vector<Point> rest = without(pts, {x, y, z});
    std::vector<ConvexRegion> out{std::move(a), std::move(b)};
    for (auto& k : clip_all(disjoint_regions(rest, depth + 1), c)) {
        out.push_back(std::move(k));
    }
    return out;
}

//---------------------------------------------------------------------------//
// Convex-position covers
//---------------------------------------------------------------------------//

inline std::vector<ConvexRegion> convex_regions(const std::vector<Point>& pts)
{
    const std::size_t n = pts.size();
    if (n <= 3) {
        return disjoint_regions(pts);
    }
    // p_0..p_{n-1} counterclockwise; b_i = p_i, a_i = p_{n-1-i}. Chord i
    // joins a_i and b_i; a_0 b_0 is a hull edge.
    std::vector<Point> p = convex_hull(pts);
    require(p.size() == n, "convex_regions: points are not in convex position");
    const std::size_t m = n / 2;
    auto b_pt = [&](std::size_t i) -> const Point& { return p[i]; };
    auto a_pt = [&](std::size_t i) -> const Point& { return p[n - 1 - i]; };

    // H_i^+ is the side holding the vertices strictly between b_i and a_i
    // in counterclockwise order (right of b_i -> a_i); it keeps the open ray
    // beyond a_i. H_i^- keeps the open ray beyond b_i.
    std::vector<GeneralizedHalfPlane> upper;
    std::vector<GeneralizedHalfPlane> lower;
    for (std::size_t i = 0; i < m; ++i) {
        const Point& ai = a_pt(i);
        const Point& bi = b_pt(i);
        Line chord = line_through(ai, bi);
        Point inner = bi - left_normal(ai - bi);
        upper.push_back(GeneralizedHalfPlane::toward(chord, inner, OpenRay{ai, ai - bi}));
        lower.push_back(GeneralizedHalfPlane::away_from(chord, inner, OpenRay{bi, bi - ai}));
    }

    std::vector<ConvexRegion> out;
    std::vector<GeneralizedHalfPlane> stack;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<GeneralizedHalfPlane> cs = stack;
        cs.push_back(lower[i]);
        out.emplace_back(std::move(cs), "below chord " + std::to_string(i));
        stack.push_back(upper[i]);
    }

    // Interior of the hull, plus the open hull edges that no half-plane
    // above keeps: chord 0 always, the last chord too when n is even.
    auto interior = [&](bool top_edge_is_chord) {
        std::vector<GeneralizedHalfPlane> cs;
        for (std::size_t j = 0; j < n; ++j) {
            const Point& s = p[j];
            const Point& t = p[(j + 1) % n];
            Line edge = line_through(s, t);
            Point inside = s + left_normal(t - s);
            bool keep = (j == n - 1) || (top_edge_is_chord && j == m - 1);
            cs.push_back(keep ? GeneralizedHalfPlane::toward(edge, inside, OpenSegment{s, t})
                              : GeneralizedHalfPlane::toward(edge, inside));
        }
        return ConvexRegion(std::move(cs), "hull interior");
    };

    if (n % 2 == 0) {
        out.emplace_back(std::vector<GeneralizedHalfPlane>{upper[m - 1]}, "above chord " + std::to_string(m - 1));
        out.push_back(interior(true));
        return out;
    }

    // Odd n: the apex a_m sits alone above the last chord. Cut there with
    // the parallel line through the apex, rays split at the apex.
    const Point& apex = a_pt(m);
    Vec along = a_pt(m - 1) - b_pt(m - 1);
    Line apex_line = line_along(apex, along);
    const Point& below = b_pt(0);
    GeneralizedHalfPlane apex_lower = GeneralizedHalfPlane::toward(apex_line, below, OpenRay{apex, along});
    GeneralizedHalfPlane apex_upper = GeneralizedHalfPlane::away_from(apex_line, below, OpenRay{apex, -along});
    std::vector<GeneralizedHalfPlane> cs = stack;
    cs.push_back(apex_lower);
    out.emplace_back(std::move(cs), "below apex");
    out.emplace_back(std::vector<GeneralizedHalfPlane>{apex_upper}, "above apex");
    out.push_back(interior(false));
    return out;
}

//---------------------------------------------------------------------------//
// General position covers
//---------------------------------------------------------------------------//

// Lexicographic comparison of the unit vectors u/|u| and v/|v|.
inline int compare_unit(const Vec& u, const Vec& v)
{
    Rational nu = dot(u, u);
    Rational nv = dot(v, v);
    auto cmp_component = [&](const Rational& a, const Rational& b) {
        int sa = sign(a);
        int sb = sign(b);
        if (sa != sb) {
            return sa < sb ? -1 : 1;
        }
        if (sa == 0) {
            return 0;
        }
        int c = cmp(a * a * nv, b * b * nu);
        return sa > 0 ? c : -c;
    };
    if (int c = cmp_component(u.x, v.x)) {
        return c;
    }
    return cmp_component(u.y, v.y);
}

inline std::vector<ConvexRegion> general_regions(const std::vector<Point>& pts, int depth = 0);

// Exactly one point of P is interior to the hull.
inline std::vector<ConvexRegion> general_one_interior(const std::vector<Point>& pts, const Point& inner)
{
    std::vector<Point> rest = without(pts, {inner});
    std::vector<ConvexRegion> base = convex_regions(rest);
    std::vector<ConvexRegion> out;
    std::size_t split = 0;
    for (const auto& r : base) {
        if (!r.contains(inner)) {
            out.push_back(r);
            continue;
        }
        auto [left, right] = split_region_at_point(r, inner, Vec(0, 1));
        out.push_back(std::move(left));
        out.push_back(std::move(right));
        ++split;
    }
    // The hull interior and one chord band hold the point; below four hull
    // vertices the base cover is disjoint and only one region does.
    require(split == (rest.size() >= 4 ? 2u : 1u), "interior point not covered the expected number of times");
    return out;
}

// Some ear a b c of the hull holds a point of P.
inline std::vector<ConvexRegion> general_ear(const std::vector<Point>& pts, const Point& a, const Point& b,
                                             const Point& c, int depth)
{
    const std::string lvl = std::to_string(depth);
    // Height over line(a, c) toward b; ties go to the point nearest a.
    const Vec base = c - a;
    const int up = sign(cross(base, b - a));
    const Point* best = nullptr;
    Rational best_height;
    Rational best_along;
    for (const auto& z : pts) {
        if (orientation(a, b, z) <= 0 || orientation(b, c, z) <= 0 || orientation(c, a, z) <= 0) {
            continue;
        }
        Rational height = up * cross(base, z - a);
        Rational along = dot(z - a, base);
        if (best == nullptr || height > best_height || (height == best_height && along < best_along)) {
            best = &z;
            best_height = height;
            best_along = along;
        }
    }
    require(best != nullptr, "ear holds no point");
    const Point x = *best;

    std::vector<Point> hull_wo_b = convex_hull(without(pts, {b}));
    const std::size_t k = index_of(hull_wo_b, x);
    const std::size_t h = hull_wo_b.size();
    const Point a2 = hull_wo_b[(k + h - 1) % h];
    const Point c2 = hull_wo_b[(k + 1) % h];

    // The rays x->a', x->b, x->c' cut the plane into three wedges, each
    // narrower than a half-plane. Pieces of the rays: (x,a') and (x,b) go to
    // A, the ray beyond b and (x,c') to B, the rays beyond a' and c' to C.
    ConvexRegion wa = wedge(x, a2 - x, b - x, OpenSegment{x, a2}, OpenSegment{x, b}, "ear A " + lvl);
    ConvexRegion wb = wedge(x, b - x, c2 - x, OpenRay{b, b - x}, OpenSegment{x, c2}, "ear B " + lvl);
    ConvexRegion wc = wedge(x, a2 - x, c2 - x, OpenRay{a2, a2 - x}, OpenRay{c2, c2 - x}, "ear C " + lvl);

    std::vector<Point> rest = without(pts, {x, a2, b, c2});
    for (const auto& z : pts) {
        require(!wa.contains(z) && !wb.contains(z), "ear wedge A or B holds a point of P");
    }
    for (const auto& z : rest) {
        require(wc.contains(z), "ear wedge C misses a remaining point");
    }
    require(rest.size() + 4 == pts.size(), "ear step must remove four points");

    std::vector<ConvexRegion> out{std::move(wa), std::move(wb)};
    for (auto& r : clip_all(general_regions(rest, depth + 1), wc)) {
        out.push_back(std::move(r));
    }
    return out;
}

// Every ear is empty and at least two points are interior.
inline std::vector<ConvexRegion> general_empty_ears(const std::vector<Point>& pts, const std::vector<Point>& hull,
                                                    const std::vector<Point>& interior, int depth)
{
    const std::string lvl = std::to_string(depth);

    // Edge p->q of the inner hull with the lexicographically largest unit
    // outward normal; the inner points lie on its left ("below").
    std::vector<Point> inner = convex_hull(interior);
    std::size_t best = 0;
    Vec best_normal;
    for (std::size_t i = 0; i < inner.size(); ++i) {
        Vec e = inner[(i + 1) % inner.size()] - inner[i];
        Vec outward(e.y, -e.x);
        if (i == 0 || compare_unit(outward, best_normal) > 0) {
            best = i;
            best_normal = outward;
        }
    }
    const Point p = inner[best];
    const Point q = inner[(best + 1) % inner.size()];
    auto above = [&](const Point& z) { return orientation(p, q, z) < 0; };

    // Hull edges of conv P crossed by line(p, q): p'p'' beyond p and q'q''
    // beyond q, with p'' and q'' above the line.
    const std::size_t h = hull.size();
    Point p1, p2, q1, q2;
    int found = 0;
    for (std::size_t j = 0; j < h; ++j) {
        const Point& s = hull[j];
        const Point& t = hull[(j + 1) % h];
        if (orientation(p, q, s) * orientation(p, q, t) >= 0) {
            continue;
        }
        Point cut = *line_intersection(line_through(p, q), line_through(s, t));
        const Point& hi = above(s) ? s : t;
        const Point& lo = above(s) ? t : s;
        if (dot(cut - p, q - p) < 0) {
            p1 = lo;
            p2 = hi;
        } else {
            q1 = lo;
            q2 = hi;
        }
        ++found;
    }
    require(found == 2, "line(p,q) must cross exactly two hull edges");
    require(p1 != q1 && p2 != q2, "crossed hull edges must not share a vertex");

    // p''', p, q, q''' consecutive on the hull of the points on or below
    // line(p, q).
    std::vector<Point> low;
    for (const auto& z : pts) {
        if (!above(z)) {
            low.push_back(z);
        }
    }
    std::vector<Point> low_hull = convex_hull(low);
    const std::size_t lh = low_hull.size();
    const std::size_t kp = index_of(low_hull, p);
    require(low_hull[(kp + 1) % lh] == q, "p -> q must be an edge of the lower hull");
    const Point p3 = low_hull[(kp + lh - 1) % lh];
    const Point q3 = low_hull[(kp + 2) % lh];
    require(p3 != q3, "lower hull needs four vertices");

    Line pq = line_through(p, q);
    Line lp2 = line_through(p, p2);
    Line lq2 = line_through(q, q2);
    Line lp3 = line_through(p, p3);
    Line lq3 = line_through(q, q3);

    const bool a_bounded = angle_sum_vs_straight(p, p2, q, q2) == AngleSum::Less;
    const bool d_bounded = angle_sum_vs_straight(p, p3, q, q3) == AngleSum::Less;

    ConvexRegion ra({GeneralizedHalfPlane::toward(pq, p2),
                     GeneralizedHalfPlane::toward(lp2, q, OpenSegment{p, p2}),
                     GeneralizedHalfPlane::toward(lq2, p, OpenSegment{q, q2})},
                    std::string(a_bounded ? "bounded " : "") + "top A " + lvl);
    ConvexRegion rd({GeneralizedHalfPlane::toward(pq, p3, OpenSegment{p, q}),
                     GeneralizedHalfPlane::toward(lp3, q, OpenSegment{p, p3}),
                     GeneralizedHalfPlane::toward(lq3, p, OpenSegment{q, q3})},
                    std::string(d_bounded ? "bounded " : "") + "bottom D " + lvl);
    ConvexRegion rc({GeneralizedHalfPlane::away_from(lp2, q, OpenRay{p2, p2 - p}),
                     GeneralizedHalfPlane::away_from(lp3, q, OpenRay{p3, p3 - p})},
                    "side C " + lvl);
    ConvexRegion rb({GeneralizedHalfPlane::away_from(lq2, p, OpenRay{q2, q2 - q}),
                     GeneralizedHalfPlane::away_from(lq3, p, OpenRay{q3, q3 - q})},
                    "side B " + lvl);

    std::vector<Point> in_a;
    std::vector<Point> in_d;
    for (const auto& z : pts) {
        require(!rb.contains(z) && !rc.contains(z), "side region holds a point of P");
        if (ra.contains(z)) {
            in_a.push_back(z);
        } else if (rd.contains(z)) {
            in_d.push_back(z);
        }
    }
    require(in_a.size() + in_d.size() + 6 == pts.size(), "top/bottom split must leave six points on the cut");

    std::vector<ConvexRegion> out{std::move(rb), std::move(rc)};
    for (auto& r : clip_all(convex_regions(in_a), ra)) {
        out.push_back(std::move(r));
    }
    for (auto& r : clip_all(general_regions(in_d, depth + 1), rd)) {
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<ConvexRegion> general_regions(const std::vector<Point>& pts, int depth)
{
    if (pts.size() <= 3) {
        return convex_regions(pts);
    }
    std::vector<Point> hull = convex_hull(pts);
    std::vector<Point> interior = without(pts, hull);
    if (interior.empty()) {
        return convex_regions(pts);
    }
    if (interior.size() == 1) {
        return general_one_interior(pts, interior.front());
    }
    const std::size_t h = hull.size();
    for (std::size_t i = 0; i < h; ++i) {
        const Point& a = hull[(i + h - 1) % h];
        const Point& b = hull[i];
        const Point& c = hull[(i + 1) % h];
        for (const auto& z : interior) {
            if (orientation(a, b, z) > 0 && orientation(b, c, z) > 0 && orientation(c, a, z) > 0) {
                return general_ear(pts, a, b, c, depth);
            }
        }
    }
    return general_empty_ears(pts, hull, interior, depth);
}

inline void require_general_position(const Instance& inst)
{
    if (!inst.general_position()) {
        throw Error(Errc::NotGeneralPosition, "instance '" + inst.label() + "' has three collinear points");
    }
}

} // namespace detail

/// Pairwise disjoint cover of R^2 minus P with floor((2n+5)/3) regions.
inline Cover build_disjoint_cover(const Instance& inst)
{
    detail::require_general_position(inst);
    return {detail::disjoint_regions(inst.points()), inst, {CoverMode::Cover, true}, "disjoint"};
}

/// Cover of R^2 minus P for P in convex position, floor((n+5)/2) - delta(n)
/// regions.
inline Cover build_convex_cover(const Instance& inst)
{
    detail::require_general_position(inst);
    if (!inst.convex_position()) {
        throw Error(Errc::NotConvexPosition, "instance '" + inst.label() + "' is not in convex position");
    }
    return {detail::convex_regions(inst.points()), inst, {CoverMode::Cover, false}, "convex"};
}

/// Cover of R^2 minus P for any P in general position, at most
/// floor(7n/11) + 4 regions.
inline Cover build_general_cover(const Instance& inst)
{
    detail::require_general_position(inst);
    return {detail::general_regions(inst.points()), inst, {CoverMode::Cover, false}, "general"};
}

/// The grid {(m,n) : 1 <= m,n <= K, not both even} and its 2K+2 strips.
inline std::pair<Instance, Cover> build_grid_encapsulation(long k)
{
    if (k < 2) {
        throw Error(Errc::KTooSmall, "grid side must be at least 2, got " + std::to_string(k));
    }
    std::vector<Point> pts;
    for (long m = 1; m <= k; ++m) {
        for (long n = 1; n <= k; ++n) {
            if (m % 2 != 0 || n % 2 != 0) {
                pts.emplace_back(m, n);
            }
        }
    }
    Instance inst(std::move(pts), "grid-K" + std::to_string(k));

    auto vertical = [](long c) { return Line(1, 0, c); };
    auto horizontal = [](long c) { return Line(0, 1, c); };
    std::vector<ConvexRegion> regions;
    for (long i = 1; i < k; ++i) {
        regions.emplace_back(std::vector<GeneralizedHalfPlane>{{vertical(i), Side::OpenPositive},
                                                               {vertical(i + 1), Side::OpenNegative}},
                             "vertical strip " + std::to_string(i));
    }
    for (long i = 1; i < k; ++i) {
        regions.emplace_back(std::vector<GeneralizedHalfPlane>{{horizontal(i), Side::OpenPositive},
                                                               {horizontal(i + 1), Side::OpenNegative}},
                             "horizontal strip " + std::to_string(i));
    }
    regions.emplace_back(std::vector<GeneralizedHalfPlane>{{vertical(1), Side::OpenNegative}}, "x < 1");
    regions.emplace_back(std::vector<GeneralizedHalfPlane>{{vertical(k), Side::OpenPositive}}, "x > K");
    regions.emplace_back(std::vector<GeneralizedHalfPlane>{{horizontal(1), Side::OpenNegative}}, "y < 1");
    regions.emplace_back(std::vector<GeneralizedHalfPlane>{{horizontal(k), Side::OpenPositive}}, "y > K");

    Cover cover{std::move(regions), inst, {CoverMode::Encapsulate, false}, "grid"};
    return {std::move(inst), std::move(cover)};
}

} // namespace cofinite
