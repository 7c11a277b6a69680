#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cofinite/error.hpp"
#include "cofinite/geometry.hpp"

namespace cofinite {

//---------------------------------------------------------------------------//
// Boundary pieces of a half-plane
//---------------------------------------------------------------------------//

struct NoBoundary {
    friend bool operator==(const NoBoundary&, const NoBoundary&) { return true; }
};

struct FullLine {
    friend bool operator==(const FullLine&, const FullLine&) { return true; }
};

/// {origin + s*direction : s > 0}
struct OpenRay {
    Point origin;
    Vec direction;
    friend bool operator==(const OpenRay&, const OpenRay&) = default;
};

/// Segment strictly between the two ends.
struct OpenSegment {
    Point end_a;
    Point end_b;
    friend bool operator==(const OpenSegment&, const OpenSegment&) = default;
};

using BoundaryInclusion = std::variant<NoBoundary, FullLine, OpenRay, OpenSegment>;

/// Membership of a point already known to lie on the carrier line.
inline bool boundary_contains(const BoundaryInclusion& boundary, const Point& p)
{
    struct Visitor {
        const Point& p;
        bool operator()(const NoBoundary&) const { return false; }
        bool operator()(const FullLine&) const { return true; }
        bool operator()(const OpenRay& r) const { return sign(dot(p - r.origin, r.direction)) > 0; }
        bool operator()(const OpenSegment& s) const
        {
            return sign(dot(p - s.end_a, s.end_b - s.end_a)) > 0
                && sign(dot(p - s.end_b, s.end_a - s.end_b)) > 0;
        }
    };
    return std::visit(Visitor{p}, boundary);
}

/// Points that delimit the boundary piece along its line.
inline std::vector<Point> boundary_anchors(const BoundaryInclusion& boundary)
{
    if (const auto* r = std::get_if<OpenRay>(&boundary)) {
        return {r->origin};
    }
    if (const auto* s = std::get_if<OpenSegment>(&boundary)) {
        return {s->end_a, s->end_b};
    }
    return {};
}

//---------------------------------------------------------------------------//
// Generalized half-planes
//---------------------------------------------------------------------------//

enum class Side { OpenPositive, OpenNegative, ClosedPositive, ClosedNegative };

inline bool is_closed(Side s) { return s == Side::ClosedPositive || s == Side::ClosedNegative; }
inline int side_sign(Side s) { return (s == Side::OpenPositive || s == Side::ClosedPositive) ? 1 : -1; }
inline Side open_side(int sgn) { return sgn > 0 ? Side::OpenPositive : Side::OpenNegative; }
inline Side closed_side(int sgn) { return sgn > 0 ? Side::ClosedPositive : Side::ClosedNegative; }

/// An open half-plane of `line` (the sign of aX+bY-c) plus a convex piece
/// of the line itself. Closed sides always carry the full line; an open side
/// with the full line is stored as the closed side.
class GeneralizedHalfPlane {
public:
    GeneralizedHalfPlane(Line line, Side side, BoundaryInclusion boundary = NoBoundary{})
        : line_(std::move(line)), side_(side), boundary_(std::move(boundary))
    {
        validate();
    }

    /// Open side of `line` containing `witness`.
    static GeneralizedHalfPlane toward(const Line& line, const Point& witness, BoundaryInclusion boundary = NoBoundary{})
    {
        int s = line.side(witness);
        if (s == 0) {
            throw Error(Errc::SideViolation, "witness " + to_string(witness) + " lies on " + to_string(line));
        }
        return {line, open_side(s), std::move(boundary)};
    }

    /// Open side of `line` not containing `witness`.
    static GeneralizedHalfPlane away_from(const Line& line, const Point& witness, BoundaryInclusion boundary = NoBoundary{})
    {
        int s = line.side(witness);
        if (s == 0) {
            throw Error(Errc::SideViolation, "witness " + to_string(witness) + " lies on " + to_string(line));
        }
        return {line, open_side(-s), std::move(boundary)};
    }

    const Line& line() const { return line_; }
    Side side() const { return side_; }
    const BoundaryInclusion& boundary() const { return boundary_; }

    bool contains(const Point& p) const
    {
        int s = line_.side(p);
        if (s != 0) {
            return s == side_sign(side_);
        }
        return boundary_contains(boundary_, p);
    }

    /// Topological closure: the closed half-plane.
    GeneralizedHalfPlane closure() const { return {line_, closed_side(side_sign(side_)), FullLine{}}; }

    friend bool operator==(const GeneralizedHalfPlane& g, const GeneralizedHalfPlane& h)
    {
        return g.side_ == h.side_ && g.line_ == h.line_ && g.boundary_ == h.boundary_;
    }

private:
    void validate()
    {
        if (std::holds_alternative<FullLine>(boundary_)) {
            side_ = closed_side(side_sign(side_));
        } else if (is_closed(side_)) {
            throw Error(Errc::InvalidBoundary, "closed side requires the full boundary line");
        }
        if (const auto* r = std::get_if<OpenRay>(&boundary_)) {
            if (!line_.contains(r->origin) || is_zero(r->direction) || dot(line_.normal(), r->direction) != 0) {
                throw Error(Errc::InvalidBoundary, "open ray must lie along " + to_string(line_));
            }
        } else if (const auto* s = std::get_if<OpenSegment>(&boundary_)) {
            if (s->end_a == s->end_b || !line_.contains(s->end_a) || !line_.contains(s->end_b)) {
                throw Error(Errc::InvalidBoundary, "open segment must have distinct ends on " + to_string(line_));
            }
        }
    }

    Line line_;
    Side side_;
    BoundaryInclusion boundary_;
};

inline bool ghp_contains(const GeneralizedHalfPlane& g, const Point& p) { return g.contains(p); }

//---------------------------------------------------------------------------//
// Convex regions
//---------------------------------------------------------------------------//

/// Finite intersection of generalized half-planes; no constraints means the
/// whole plane.
class ConvexRegion {
public:
    ConvexRegion() = default;
    explicit ConvexRegion(std::vector<GeneralizedHalfPlane> constraints, std::string tag = {})
        : tag_(std::move(tag))
    {
        for (auto& g : constraints) {
            add(std::move(g));
        }
    }

    const std::vector<GeneralizedHalfPlane>& constraints() const { return constraints_; }
    const std::string& tag() const { return tag_; }
    void set_tag(std::string tag) { tag_ = std::move(tag); }

    bool contains(const Point& p) const
    {
        // Later constraints come from outer construction levels and reject
        // most points, so test them first.
        for (auto it = constraints_.rbegin(); it != constraints_.rend(); ++it) {
            if (!it->contains(p)) {
                return false;
            }
        }
        return true;
    }

    ConvexRegion intersect(const GeneralizedHalfPlane& g) const
    {
        ConvexRegion out = *this;
        out.add(g);
        return out;
    }

    ConvexRegion intersect(const ConvexRegion& other) const
    {
        ConvexRegion out = *this;
        for (const auto& g : other.constraints_) {
            out.add(g);
        }
        return out;
    }

    ConvexRegion closure() const
    {
        ConvexRegion out;
        out.tag_ = tag_;
        for (const auto& g : constraints_) {
            out.add(g.closure());
        }
        return out;
    }

    friend bool operator==(const ConvexRegion& a, const ConvexRegion& b)
    {
        return a.tag_ == b.tag_ && a.constraints_ == b.constraints_;
    }

private:
    void add(GeneralizedHalfPlane g)
    {
        if (std::find(constraints_.begin(), constraints_.end(), g) == constraints_.end()) {
            constraints_.push_back(std::move(g));
        }
    }

    std::vector<GeneralizedHalfPlane> constraints_;
    std::string tag_;
};

inline bool region_contains(const ConvexRegion& r, const Point& p) { return r.contains(p); }

inline ConvexRegion region_intersect(const ConvexRegion& r, const GeneralizedHalfPlane& g) { return r.intersect(g); }

/// The two half-open half-planes bounded by the line through p along
/// `axis`: the left side with the ray p - s*axis, and the right side with
/// the ray p + s*axis. Their disjoint union is the plane minus p.
inline std::pair<GeneralizedHalfPlane, GeneralizedHalfPlane> split_at_point(const Point& p, const Vec& axis)
{
    Line line = line_along(p, axis);
    Point left = p + Vec(-axis.y, axis.x);
    return {GeneralizedHalfPlane::toward(line, left, OpenRay{p, -axis}),
            GeneralizedHalfPlane::away_from(line, left, OpenRay{p, axis})};
}

inline std::pair<ConvexRegion, ConvexRegion> split_region_at_point(const ConvexRegion& r, const Point& p, const Vec& axis)
{
    if (!r.contains(p)) {
        throw Error(Errc::PointNotInRegion, to_string(p) + " is not in region '" + r.tag() + "'");
    }
    auto [g1, g2] = split_at_point(p, axis);
    ConvexRegion first = r.intersect(g1);
    ConvexRegion second = r.intersect(g2);
    first.set_tag(r.tag() + " | left of " + to_string(p));
    second.set_tag(r.tag() + " | right of " + to_string(p));
    return {std::move(first), std::move(second)};
}

/// Open cone {apex + s*dir_a + t*dir_b : s,t > 0} with the given pieces of
/// its two edge lines attached. Cones wider than a half-plane are not
/// convex; callers split them into two calls.
inline ConvexRegion wedge(const Point& apex, const Vec& dir_a, const Vec& dir_b,
                          BoundaryInclusion boundary_a = NoBoundary{}, BoundaryInclusion boundary_b = NoBoundary{},
                          std::string tag = {})
{
    if (is_zero(dir_a) || is_zero(dir_b) || cross(dir_a, dir_b) == 0) {
        throw Error(Errc::ParallelDirections, "wedge edges must be independent directions");
    }
    Line edge_a = line_along(apex, dir_a);
    Line edge_b = line_along(apex, dir_b);
    return ConvexRegion({GeneralizedHalfPlane::toward(edge_a, apex + dir_b, std::move(boundary_a)),
                         GeneralizedHalfPlane::toward(edge_b, apex + dir_a, std::move(boundary_b))},
                        std::move(tag));
}

//---------------------------------------------------------------------------//
// Covers
//---------------------------------------------------------------------------//

enum class CoverMode { Cover, Encapsulate };

struct Claim {
    CoverMode mode = CoverMode::Cover;
    bool disjoint = false;
    friend bool operator==(const Claim&, const Claim&) = default;
};

/// A family of convex regions together with what it claims about the
/// instance: covering R^2 minus P exactly, or encapsulating every point of P.
struct Cover {
    std::vector<ConvexRegion> regions;
    Instance instance;
    Claim claim;
    std::string builder;

    friend bool operator==(const Cover& a, const Cover& b)
    {
        return a.regions == b.regions && a.instance == b.instance && a.claim == b.claim && a.builder == b.builder;
    }
};

/// Every point where a region's membership can change along its carrier.
inline std::vector<Point> cover_anchors(const Cover& cover)
{
    std::vector<Point> out;
    for (const auto& r : cover.regions) {
        for (const auto& g : r.constraints()) {
            for (auto& a : boundary_anchors(g.boundary())) {
                out.push_back(std::move(a));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<Line> cover_carriers(const Cover& cover)
{
    std::vector<Line> out;
    for (const auto& r : cover.regions) {
        for (const auto& g : r.constraints()) {
            out.push_back(g.line());
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace cofinite
