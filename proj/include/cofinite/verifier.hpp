#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cofinite/geometry.hpp"
#include "cofinite/regions.hpp"

namespace cofinite {

//---------------------------------------------------------------------------//
// Homogeneous points
//---------------------------------------------------------------------------//

/// The rational point (x/w, y/w) with w > 0. Arrangement arithmetic stays in
/// integers this way; gcd reduction happens only where points are compared.
struct HPoint {
    BigInt x;
    BigInt y;
    BigInt w{1};

    static HPoint from(const Point& p)
    {
        BigInt w = lcm(BigInt(p.x.get_den()), BigInt(p.y.get_den()));
        return {p.x.get_num() * (w / p.x.get_den()), p.y.get_num() * (w / p.y.get_den()), w};
    }

    Point point() const { return {make_rational(x, w), make_rational(y, w)}; }

    void reduce()
    {
        BigInt g = gcd(gcd(x, y), w);
        if (g != 1) {
            x /= g;
            y /= g;
            w /= g;
        }
    }

    // Exact comparisons; both operands must be reduced for == to mean
    // equality of points.
    friend bool operator==(const HPoint& a, const HPoint& b) { return a.x == b.x && a.y == b.y && a.w == b.w; }
    friend bool operator<(const HPoint& a, const HPoint& b)
    {
        if (int c = cmp(a.x * b.w, b.x * a.w)) {
            return c < 0;
        }
        return a.y * b.w < b.y * a.w;
    }
};

inline int side(const Line& l, const HPoint& p)
{
    BigInt v = l.a() * p.x;
    mpz_addmul(v.get_mpz_t(), l.b().get_mpz_t(), p.y.get_mpz_t());
    mpz_submul(v.get_mpz_t(), l.c().get_mpz_t(), p.w.get_mpz_t());
    return sign(v);
}

//---------------------------------------------------------------------------//
// Arrangement
//---------------------------------------------------------------------------//

enum class FaceKind { Vertex, Edge, Cell };

struct Representative {
    HPoint point;
    FaceKind kind;
};

/// Lines of a cover plus one representative point in every face. The lines
/// are the constraint carriers, a perpendicular through every ray origin and
/// segment end, and the horizontal and vertical line through each point of
/// P.
struct Arrangement {
    std::vector<Line> lines;
    std::vector<HPoint> vertices;
    std::vector<Representative> representatives;

    std::optional<std::size_t> index_of(const Line& l) const
    {
        auto it = std::lower_bound(lines.begin(), lines.end(), l);
        if (it == lines.end() || *it != l) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - lines.begin());
    }
};

/// Perpendicular to `carrier` through `at`.
inline Line transversal(const Line& carrier, const Point& at)
{
    Vec u = carrier.direction();
    return Line::from_rationals(u.x, u.y, dot(u, Vec(at.x, at.y)));
}

inline std::vector<Line> arrangement_lines(const Cover& cover)
{
    std::vector<Line> lines;
    for (const auto& r : cover.regions) {
        for (const auto& g : r.constraints()) {
            lines.push_back(g.line());
            for (const auto& anchor : boundary_anchors(g.boundary())) {
                lines.push_back(transversal(g.line(), anchor));
            }
        }
    }
    for (const auto& p : cover.instance.points()) {
        lines.push_back(Line::from_rationals(1, 0, p.x));
        lines.push_back(Line::from_rationals(0, 1, p.y));
    }
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    return lines;
}

inline Arrangement build_arrangement(const Cover& cover)
{
    Arrangement arr;
    arr.lines = arrangement_lines(cover);
    const std::size_t n = arr.lines.size();
    if (n == 0) {
        arr.representatives.push_back({HPoint{0, 0, 1}, FaceKind::Cell});
        return arr;
    }

    std::vector<std::vector<HPoint>> on_line(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Line& l = arr.lines[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Line& m = arr.lines[j];
            HPoint v{l.c() * m.b() - m.c() * l.b(), l.a() * m.c() - m.a() * l.c(), l.a() * m.b() - m.a() * l.b()};
            if (v.w == 0) {
                continue;
            }
            if (v.w < 0) {
                v.x = -v.x;
                v.y = -v.y;
                v.w = -v.w;
            }
            v.reduce();
            on_line[i].push_back(v);
            on_line[j].push_back(v);
            arr.vertices.push_back(std::move(v));
        }
    }
    std::sort(arr.vertices.begin(), arr.vertices.end());
    arr.vertices.erase(std::unique(arr.vertices.begin(), arr.vertices.end()), arr.vertices.end());
    for (const auto& v : arr.vertices) {
        arr.representatives.push_back({v, FaceKind::Vertex});
    }

    // Edge representatives, then the two cells beside each edge.
    std::vector<HPoint> edges;
    std::vector<std::size_t> edge_line;
    for (std::size_t i = 0; i < n; ++i) {
        const Line& l = arr.lines[i];
        const BigInt ux = -l.b();
        const BigInt& uy = l.a();
        auto& verts = on_line[i];
        // Order along the direction u = (-b, a).
        std::sort(verts.begin(), verts.end(), [&](const HPoint& p, const HPoint& q) {
            BigInt kp = ux * p.x + uy * p.y;
            BigInt kq = ux * q.x + uy * q.y;
            return kp * q.w < kq * p.w;
        });
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (verts.empty()) {
            edges.push_back({l.a() * l.c(), l.b() * l.c(), l.a() * l.a() + l.b() * l.b()});
            edge_line.push_back(i);
            continue;
        }
        const HPoint& first = verts.front();
        const HPoint& last = verts.back();
        edges.push_back({first.x - ux * first.w, first.y - uy * first.w, first.w});
        edge_line.push_back(i);
        for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
            const HPoint& p = verts[k];
            const HPoint& q = verts[k + 1];
            edges.push_back({p.x * q.w + q.x * p.w, p.y * q.w + q.y * p.w, 2 * p.w * q.w});
            edge_line.push_back(i);
        }
        edges.push_back({last.x + ux * last.w, last.y + uy * last.w, last.w});
        edge_line.push_back(i);
    }

    BigInt num;
    BigInt den;
    BigInt lhs;
    BigInt rhs;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const HPoint& pt = edges[e];
        const Line& l = arr.lines[edge_line[e]];
        // Along pt + t*(a, b), line m is met at t = num / (w * den) with
        // num = c_m w - a_m x - b_m y and den = a_m a + b_m b.
        std::optional<std::pair<BigInt, BigInt>> best_pos;
        std::optional<std::pair<BigInt, BigInt>> best_neg;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == edge_line[e]) {
                continue;
            }
            const Line& m = arr.lines[j];
            den = m.a() * l.a();
            mpz_addmul(den.get_mpz_t(), m.b().get_mpz_t(), l.b().get_mpz_t());
            if (den == 0) {
                continue;
            }
            num = m.c() * pt.w;
            mpz_submul(num.get_mpz_t(), m.a().get_mpz_t(), pt.x.get_mpz_t());
            mpz_submul(num.get_mpz_t(), m.b().get_mpz_t(), pt.y.get_mpz_t());
            const int s = sign(num) * sign(den);
            if (s == 0) {
                continue;
            }
            auto& best = (s > 0) ? best_pos : best_neg;
            if (best) {
                // |num/den| < |best.num/best.den|
                mpz_mul(lhs.get_mpz_t(), num.get_mpz_t(), best->second.get_mpz_t());
                mpz_mul(rhs.get_mpz_t(), best->first.get_mpz_t(), den.get_mpz_t());
                if (mpz_cmpabs(lhs.get_mpz_t(), rhs.get_mpz_t()) >= 0) {
                    continue;
                }
            }
            best = std::make_pair(num, den);
        }
        arr.representatives.push_back({pt, FaceKind::Edge});
        for (int dir : {1, -1}) {
            const auto& best = (dir > 0) ? best_pos : best_neg;
            HPoint cell;
            if (best) {
                // pt + (t/2) * (a, b)
                const auto& [bn, bd] = *best;
                cell.x = 2 * bd * pt.x + bn * l.a();
                cell.y = 2 * bd * pt.y + bn * l.b();
                cell.w = 2 * bd * pt.w;
                if (cell.w < 0) {
                    cell.x = -cell.x;
                    cell.y = -cell.y;
                    cell.w = -cell.w;
                }
            } else {
                cell.x = pt.x + dir * l.a() * pt.w;
                cell.y = pt.y + dir * l.b() * pt.w;
                cell.w = pt.w;
            }
            arr.representatives.push_back({std::move(cell), FaceKind::Cell});
        }
    }
    return arr;
}

//---------------------------------------------------------------------------//
// Compiled membership
//---------------------------------------------------------------------------//

/// Regions rewritten in terms of arrangement line indices: a point's
/// membership follows from its signs against those lines, which are
/// computed once per point and shared by all regions.
class MembershipOracle {
public:
    MembershipOracle(const Cover& cover, const Arrangement& arr) : arr_(arr), cache_(arr.lines.size(), kUnknown)
    {
        for (const auto& r : cover.regions) {
            std::vector<Compiled> cs;
            for (const auto& g : r.constraints()) {
                cs.push_back(compile(g));
            }
            // Outer construction levels append constraints last and reject
            // most points.
            std::reverse(cs.begin(), cs.end());
            regions_.push_back(std::move(cs));
        }
    }

    std::size_t region_count() const { return regions_.size(); }

    /// Starts evaluating a new point.
    void reset(const HPoint& p)
    {
        point_ = &p;
        std::fill(cache_.begin(), cache_.end(), kUnknown);
    }

    bool contains(std::size_t region)
    {
        for (const auto& c : regions_[region]) {
            const int s = sign_of(c.line);
            if (s != 0) {
                if (s != c.want) {
                    return false;
                }
                continue;
            }
            if (c.kind == Compiled::kNone) {
                return false;
            }
            for (int k = 0; k < c.nconds; ++k) {
                if (sign_of(c.conds[k].first) != c.conds[k].second) {
                    return false;
                }
            }
        }
        return true;
    }

    std::size_t multiplicity(const HPoint& p)
    {
        reset(p);
        std::size_t count = 0;
        for (std::size_t r = 0; r < regions_.size(); ++r) {
            count += contains(r) ? 1 : 0;
        }
        return count;
    }

private:
    static constexpr signed char kUnknown = 2;

    struct Compiled {
        enum Kind { kNone, kFull, kConds };
        std::size_t line = 0;
        int want = 0;
        Kind kind = kNone;
        int nconds = 0;
        std::array<std::pair<std::size_t, int>, 2> conds{};
    };

    std::size_t line_index(const Line& l) const
    {
        auto idx = arr_.index_of(l);
        if (!idx) {
            throw std::logic_error("constraint line " + to_string(l) + " missing from arrangement");
        }
        return *idx;
    }

    // Strictly beyond `anchor` in the direction of `toward` along `carrier`.
    std::pair<std::size_t, int> beyond(const Line& carrier, const Point& anchor, const Point& toward) const
    {
        Line t = transversal(carrier, anchor);
        return {line_index(t), t.side(toward)};
    }

    Compiled compile(const GeneralizedHalfPlane& g) const
    {
        Compiled c;
        c.line = line_index(g.line());
        c.want = side_sign(g.side());
        const auto& b = g.boundary();
        if (std::holds_alternative<FullLine>(b)) {
            c.kind = Compiled::kFull;
        } else if (const auto* r = std::get_if<OpenRay>(&b)) {
            c.kind = Compiled::kConds;
            c.nconds = 1;
            c.conds[0] = beyond(g.line(), r->origin, r->origin + r->direction);
        } else if (const auto* s = std::get_if<OpenSegment>(&b)) {
            c.kind = Compiled::kConds;
            c.nconds = 2;
            c.conds[0] = beyond(g.line(), s->end_a, s->end_b);
            c.conds[1] = beyond(g.line(), s->end_b, s->end_a);
        }
        return c;
    }

    int sign_of(std::size_t line)
    {
        signed char& s = cache_[line];
        if (s == kUnknown) {
            s = static_cast<signed char>(side(arr_.lines[line], *point_));
        }
        return s;
    }

    const Arrangement& arr_;
    std::vector<std::vector<Compiled>> regions_;
    std::vector<signed char> cache_;
    const HPoint* point_ = nullptr;
};

//---------------------------------------------------------------------------//
// Reports
//---------------------------------------------------------------------------//

enum class Verdict { Pass, Fail };
enum class Violation { Uncovered, PointOfPCovered, DoubleCovered, NeighborhoodGap };

inline const char* violation_name(Violation v)
{
    switch (v) {
    case Violation::Uncovered: return "UNCOVERED";
    case Violation::PointOfPCovered: return "POINT_OF_P_COVERED";
    case Violation::DoubleCovered: return "DOUBLE_COVERED";
    case Violation::NeighborhoodGap: return "NEIGHBORHOOD_GAP";
    }
    return "?";
}

struct Witness {
    Point point;
    Violation kind;
    // Local-star gaps: the sampled direction from the point of P and the
    // radius along it.
    std::optional<Vec> direction;
    std::optional<Rational> radius;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct CoverReport {
    Verdict verdict = Verdict::Pass;
    /// Representatives examined (at least one per face, cells may repeat).
    std::size_t faces_checked = 0;
    std::map<std::size_t, std::size_t> multiplicity;
    std::vector<Witness> witnesses;
    /// Per region, the points of P it touches (in its closure, not in it).
    std::optional<std::vector<std::vector<Point>>> touch;

    bool passed() const { return verdict == Verdict::Pass; }

    friend bool operator==(const CoverReport&, const CoverReport&) = default;
};

namespace detail {

inline void finalize(CoverReport& report)
{
    auto& w = report.witnesses;
    std::sort(w.begin(), w.end(), [](const Witness& a, const Witness& b) {
        if (a.point != b.point) {
            return a.point < b.point;
        }
        return a.kind < b.kind;
    });
    w.erase(std::unique(w.begin(), w.end(),
                        [](const Witness& a, const Witness& b) { return a.point == b.point && a.kind == b.kind; }),
            w.end());
    report.verdict = w.empty() ? Verdict::Pass : Verdict::Fail;
}

// Angular order of direction vectors, counterclockwise from +x.
inline bool angle_less(const Vec& u, const Vec& v)
{
    auto half = [](const Vec& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; };
    int hu = half(u);
    int hv = half(v);
    if (hu != hv) {
        return hu < hv;
    }
    return sign(cross(u, v)) > 0;
}

} // namespace detail

/// One sample point in every face of the arrangement incident to `p`.
struct StarSample {
    Point point;
    Vec direction;
    Rational radius;
    FaceKind kind;
};

/// Samples p + r*d for every edge direction d of the lines through p and
/// every sector between consecutive edges, r being half the smallest
/// positive parameter at which p + s*d meets a line not through p.
inline std::vector<StarSample> local_star(const Point& p, const std::vector<Line>& lines)
{
    std::vector<Vec> dirs;
    std::vector<const Line*> others;
    for (const auto& l : lines) {
        if (l.contains(p)) {
            dirs.push_back(l.direction());
            dirs.push_back(-l.direction());
        } else {
            others.push_back(&l);
        }
    }
    std::vector<std::pair<Vec, FaceKind>> samples;
    if (dirs.empty()) {
        samples.emplace_back(Vec(1, 0), FaceKind::Cell);
    } else {
        std::sort(dirs.begin(), dirs.end(), detail::angle_less);
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            const Vec& d = dirs[i];
            const Vec& e = dirs[(i + 1) % dirs.size()];
            samples.emplace_back(d, FaceKind::Edge);
            // Consecutive directions are less than a half-turn apart unless
            // a single line passes through p.
            Vec mid = (sign(cross(d, e)) > 0) ? d + e : Vec(-d.y, d.x);
            samples.emplace_back(mid, FaceKind::Cell);
        }
    }
    std::vector<StarSample> out;
    out.reserve(samples.size());
    for (auto& [d, kind] : samples) {
        std::optional<Rational> best;
        for (const Line* m : others) {
            Rational den = dot(m->normal(), d);
            if (den == 0) {
                continue;
            }
            Rational s = (Rational(m->c()) - dot(m->normal(), Vec(p.x, p.y))) / den;
            if (s > 0 && (!best || s < *best)) {
                best = s;
            }
        }
        Rational r = best ? Rational(*best / 2) : Rational(1);
        out.push_back({p + r * d, d, r, kind});
    }
    return out;
}

/// touch(K) for every region K: the points p of P outside K with some face
/// of p's local star inside K.
inline std::vector<std::vector<Point>> compute_touch(const Cover& cover, const std::vector<Line>& lines)
{
    std::vector<std::vector<Point>> touch(cover.regions.size());
    for (const auto& p : cover.instance.points()) {
        auto star = local_star(p, lines);
        for (std::size_t r = 0; r < cover.regions.size(); ++r) {
            const auto& region = cover.regions[r];
            if (region.contains(p)) {
                continue;
            }
            for (const auto& s : star) {
                if (region.contains(s.point)) {
                    touch[r].push_back(p);
                    break;
                }
            }
        }
    }
    return touch;
}

inline std::vector<std::vector<Point>> compute_touch(const Cover& cover)
{
    return compute_touch(cover, arrangement_lines(cover));
}

/// Exact multiplicity of every representative of `arr`.
inline std::vector<std::size_t> representative_multiplicities(const Cover& cover, const Arrangement& arr)
{
    MembershipOracle oracle(cover, arr);
    std::vector<std::size_t> out;
    out.reserve(arr.representatives.size());
    for (const auto& rep : arr.representatives) {
        out.push_back(oracle.multiplicity(rep.point));
    }
    return out;
}

namespace detail {

inline CoverReport verify_cover_mode(const Cover& cover, const Arrangement& arr)
{
    CoverReport report;
    std::vector<HPoint> in_p;
    for (const auto& p : cover.instance.points()) {
        HPoint h = HPoint::from(p);
        h.reduce();
        in_p.push_back(std::move(h));
    }
    std::sort(in_p.begin(), in_p.end());

    MembershipOracle oracle(cover, arr);
    for (const auto& rep : arr.representatives) {
        const std::size_t mult = oracle.multiplicity(rep.point);
        ++report.multiplicity[mult];
        const bool is_p = rep.kind == FaceKind::Vertex && std::binary_search(in_p.begin(), in_p.end(), rep.point);
        if (is_p) {
            if (mult > 0) {
                report.witnesses.push_back({rep.point.point(), Violation::PointOfPCovered, {}, {}});
            }
        } else if (mult == 0) {
            report.witnesses.push_back({rep.point.point(), Violation::Uncovered, {}, {}});
        } else if (cover.claim.disjoint && mult > 1) {
            report.witnesses.push_back({rep.point.point(), Violation::DoubleCovered, {}, {}});
        }
    }
    report.faces_checked = arr.representatives.size();
    report.touch = compute_touch(cover, arr.lines);
    return report;
}

inline std::size_t direct_multiplicity(const Cover& cover, const Point& p)
{
    std::size_t count = 0;
    for (const auto& r : cover.regions) {
        count += r.contains(p) ? 1 : 0;
    }
    return count;
}

inline CoverReport verify_encapsulate_mode(const Cover& cover, const std::vector<Line>& lines)
{
    CoverReport report;
    const auto& pts = cover.instance.points();
    for (const auto& p : pts) {
        const std::size_t at_p = direct_multiplicity(cover, p);
        ++report.multiplicity[at_p];
        ++report.faces_checked;
        if (at_p > 0) {
            report.witnesses.push_back({p, Violation::PointOfPCovered, {}, {}});
        }
        for (const auto& s : local_star(p, lines)) {
            const std::size_t mult = direct_multiplicity(cover, s.point);
            ++report.multiplicity[mult];
            ++report.faces_checked;
            if (mult == 0) {
                report.witnesses.push_back({s.point, Violation::NeighborhoodGap, s.direction, s.radius});
            } else if (cover.claim.disjoint && mult > 1) {
                report.witnesses.push_back({s.point, Violation::DoubleCovered, {}, {}});
            }
        }
    }
    report.touch = compute_touch(cover, lines);
    return report;
}

} // namespace detail

/// Exact certification of the cover's claim over every face of its
/// arrangement (cover mode) or of every local star around P (encapsulation).
inline CoverReport verify(const Cover& cover, const Arrangement& arr)
{
    CoverReport report = cover.claim.mode == CoverMode::Cover ? detail::verify_cover_mode(cover, arr)
                                                              : detail::verify_encapsulate_mode(cover, arr.lines);
    detail::finalize(report);
    return report;
}

inline CoverReport verify(const Cover& cover)
{
    if (cover.claim.mode == CoverMode::Encapsulate) {
        CoverReport report = detail::verify_encapsulate_mode(cover, arrangement_lines(cover));
        detail::finalize(report);
        return report;
    }
    return verify(cover, build_arrangement(cover));
}

//---------------------------------------------------------------------------//
// Monte-Carlo oracle
//---------------------------------------------------------------------------//

namespace detail {

class SampleSource {
public:
    explicit SampleSource(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return rng_() % n; }

    /// Uniform in [lo, hi] on a 2^24 lattice.
    Rational between(const Rational& lo, const Rational& hi)
    {
        constexpr std::uint64_t kSteps = std::uint64_t(1) << 24;
        Rational t(static_cast<unsigned long>(below(kSteps + 1)), static_cast<unsigned long>(kSteps));
        t.canonicalize();
        return lo + (hi - lo) * t;
    }

    Vec direction()
    {
        for (;;) {
            long dx = static_cast<long>(below(17)) - 8;
            long dy = static_cast<long>(below(17)) - 8;
            if (dx != 0 || dy != 0) {
                return Vec(dx, dy);
            }
        }
    }

private:
    std::mt19937_64 rng_;
};

inline Rational max_abs(const Vec& d)
{
    Rational ax = abs(d.x);
    Rational ay = abs(d.y);
    return ax > ay ? ax : ay;
}

} // namespace detail

/// Independent check of the claim by random rational points, tested with
/// region membership directly (no arrangement). Samples: uniform points in
/// the doubled bounding box of P, anchors and carrier crossings; points on
/// carrier lines; rings around P and anchors, partly along the carriers
/// through them. Encapsulation claims are probed only in small rings
/// around P.
inline CoverReport monte_carlo_check(const Cover& cover, std::size_t samples, std::uint64_t seed)
{
    CoverReport report;
    detail::SampleSource src(seed);
    const auto& pts = cover.instance.points();
    const std::vector<Point> anchors = cover_anchors(cover);
    const std::vector<Line> carriers = cover_carriers(cover);

    auto record = [&](const Point& q, bool in_p, bool required) {
        const std::size_t mult = detail::direct_multiplicity(cover, q);
        ++report.multiplicity[mult];
        ++report.faces_checked;
        if (in_p) {
            if (mult > 0) {
                report.witnesses.push_back({q, Violation::PointOfPCovered, {}, {}});
            }
            return;
        }
        if (!required) {
            return;
        }
        if (mult == 0) {
            report.witnesses.push_back({q, cover.claim.mode == CoverMode::Cover ? Violation::Uncovered
                                                                                : Violation::NeighborhoodGap,
                                        {}, {}});
        } else if (cover.claim.disjoint && mult > 1) {
            report.witnesses.push_back({q, Violation::DoubleCovered, {}, {}});
        }
    };
    auto is_p = [&](const Point& q) { return std::find(pts.begin(), pts.end(), q) != pts.end(); };

    for (const auto& p : pts) {
        record(p, true, true);
    }

    // Carrier directions through a point.
    auto directions_at = [&](const Point& c) {
        std::vector<Vec> out;
        for (const auto& l : carriers) {
            if (l.contains(c)) {
                out.push_back(l.direction());
                out.push_back(-l.direction());
            }
        }
        return out;
    };

    if (cover.claim.mode == CoverMode::Encapsulate) {
        if (pts.empty()) {
            detail::finalize(report);
            return report;
        }
        for (std::size_t i = 0; i < samples; ++i) {
            const Point& p = pts[src.below(pts.size())];
            // Radius below half the distance to any carrier missing p and
            // to any anchor other than p, so the sample stays in the star.
            std::optional<Rational> reach;
            for (const auto& l : carriers) {
                if (l.contains(p)) {
                    continue;
                }
                Rational v = abs(dot(l.normal(), Vec(p.x, p.y)) - Rational(l.c()))
                           / Rational(abs(l.a()) + abs(l.b()));
                if (!reach || v < *reach) {
                    reach = v;
                }
            }
            for (const auto& a : anchors) {
                if (a == p) {
                    continue;
                }
                Rational v = detail::max_abs(a - p);
                if (!reach || v < *reach) {
                    reach = v;
                }
            }
            Rational r = (reach ? *reach : Rational(1)) / 2;
            auto along = directions_at(p);
            Vec d = (!along.empty() && src.below(2) == 0) ? along[src.below(along.size())] : src.direction();
            d = (1 / detail::max_abs(d)) * d;
            Rational scale = src.between(Rational(1, 1024), Rational(1));
            record(p + (r * scale) * d, false, true);
        }
        detail::finalize(report);
        return report;
    }

    // Bounding box of P, anchors and carrier crossings, doubled about its
    // centre.
    std::vector<Point> hull_pts = pts;
    hull_pts.insert(hull_pts.end(), anchors.begin(), anchors.end());
    for (std::size_t i = 0; i < carriers.size(); ++i) {
        for (std::size_t j = i + 1; j < carriers.size(); ++j) {
            if (auto v = line_intersection(carriers[i], carriers[j])) {
                hull_pts.push_back(*v);
            }
        }
    }
    Rational lox(-1), hix(1), loy(-1), hiy(1);
    if (!hull_pts.empty()) {
        lox = hix = hull_pts[0].x;
        loy = hiy = hull_pts[0].y;
        for (const auto& q : hull_pts) {
            lox = q.x < lox ? q.x : lox;
            hix = q.x > hix ? q.x : hix;
            loy = q.y < loy ? q.y : loy;
            hiy = q.y > hiy ? q.y : hiy;
        }
    }
    Rational half = std::max(Rational(hix - lox), Rational(hiy - loy)) / 2;
    if (half < 1) {
        half = 1;
    }
    const Point centre{(lox + hix) / 2, (loy + hiy) / 2};
    const Rational box_lo_x = centre.x - 2 * half;
    const Rational box_hi_x = centre.x + 2 * half;
    const Rational box_lo_y = centre.y - 2 * half;
    const Rational box_hi_y = centre.y + 2 * half;

    std::vector<Point> centres = pts;
    centres.insert(centres.end(), anchors.begin(), anchors.end());

    const std::size_t n_uniform = samples * 2 / 5;
    const std::size_t n_ring = centres.empty() ? 0 : samples * 3 / 10;
    const std::size_t n_line = carriers.empty() ? 0 : samples * 3 / 10;
    const std::size_t n_fill = samples - std::min(samples, n_uniform + n_ring + n_line);

    auto check = [&](const Point& q) { record(q, is_p(q), true); };

    for (std::size_t i = 0; i < n_uniform + n_fill; ++i) {
        check({src.between(box_lo_x, box_hi_x), src.between(box_lo_y, box_hi_y)});
    }
    for (std::size_t i = 0; i < n_ring; ++i) {
        const Point& c = centres[src.below(centres.size())];
        auto along = directions_at(c);
        Vec d = (!along.empty() && src.below(2) == 0) ? along[src.below(along.size())] : src.direction();
        d = (1 / detail::max_abs(d)) * d;
        Rational r = 4 * half * Rational(1, 1UL << src.below(24)) * src.between(Rational(1, 2), Rational(1));
        check(c + r * d);
    }
    for (std::size_t i = 0; i < n_line; ++i) {
        const Line& l = carriers[src.below(carriers.size())];
        Vec u = l.direction();
        Rational reach = 4 * half / detail::max_abs(u);
        Point base = l.anchor();
        // Closest point of the line to the box centre, as the sampling origin.
        Rational t0 = dot(centre - base, u) / dot(u, u);
        check(base + (t0 + src.between(-reach, reach)) * u);
    }
    detail::finalize(report);
    return report;
}

} // namespace cofinite
