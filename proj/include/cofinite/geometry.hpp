#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cofinite/error.hpp"
#include "cofinite/rational.hpp"

namespace cofinite {

//---------------------------------------------------------------------------//
// Points and vectors
//---------------------------------------------------------------------------//

struct Point {
    Rational x;
    Rational y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // Lexicographic (x, then y).
    friend bool operator<(const Point& a, const Point& b)
    {
        int cx = cmp(a.x, b.x);
        return cx < 0 || (cx == 0 && a.y < b.y);
    }
};

// Vectors share the representation; the distinction is by role only.
using Vec = Point;

inline Point operator+(const Point& a, const Vec& d) { return {a.x + d.x, a.y + d.y}; }
inline Vec operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec operator-(const Vec& a) { return {-a.x, -a.y}; }
inline Vec operator*(const Rational& s, const Vec& d) { return {s * d.x, s * d.y}; }

inline Rational cross(const Vec& u, const Vec& v) { return u.x * v.y - u.y * v.x; }
inline Rational dot(const Vec& u, const Vec& v) { return u.x * v.x + u.y * v.y; }
inline bool is_zero(const Vec& v) { return v.x == 0 && v.y == 0; }
inline Point midpoint(const Point& a, const Point& b)
{
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

inline std::string to_string(const Point& p)
{
    return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

/// Sign of (b-a) x (c-a); +1 is a counterclockwise turn.
inline int orientation(const Point& a, const Point& b, const Point& c)
{
    return sign(cross(b - a, c - a));
}

//---------------------------------------------------------------------------//
// Lines
//---------------------------------------------------------------------------//

/// The point set {(X,Y) : aX + bY = c}, stored as coprime integers with
/// (a,b) lexicographically positive. Two Lines are equal iff they describe
/// the same point set.
class Line {
public:
    Line(BigInt a, BigInt b, BigInt c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c))
    {
        canonicalize();
    }

    static Line from_rationals(const Rational& a, const Rational& b, const Rational& c)
    {
        BigInt l = lcm(BigInt(a.get_den()), BigInt(b.get_den()));
        l = lcm(l, BigInt(c.get_den()));
        return Line(a.get_num() * (l / a.get_den()), b.get_num() * (l / b.get_den()),
                    c.get_num() * (l / c.get_den()));
    }

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }

    Vec normal() const { return {Rational(a_), Rational(b_)}; }
    Vec direction() const { return {Rational(-b_), Rational(a_)}; }

    /// sign(aX + bY - c) at p.
    int side(const Point& p) const
    {
        const BigInt& xn = p.x.get_num();
        const BigInt& xd = p.x.get_den();
        const BigInt& yn = p.y.get_num();
        const BigInt& yd = p.y.get_den();
        BigInt v = a_ * xn * yd + b_ * yn * xd - c_ * xd * yd;
        return sign(v);
    }

    bool contains(const Point& p) const { return side(p) == 0; }

    /// A rational point of the line (the foot of the normal from the origin).
    Point anchor() const
    {
        BigInt n2 = a_ * a_ + b_ * b_;
        return {make_rational(a_ * c_, n2), make_rational(b_ * c_, n2)};
    }

    friend bool operator==(const Line& l, const Line& m)
    {
        return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_;
    }
    friend bool operator!=(const Line& l, const Line& m) { return !(l == m); }
    friend bool operator<(const Line& l, const Line& m)
    {
        if (int r = cmp(l.a_, m.a_)) {
            return r < 0;
        }
        if (int r = cmp(l.b_, m.b_)) {
            return r < 0;
        }
        return l.c_ < m.c_;
    }

private:
    void canonicalize()
    {
        if (a_ == 0 && b_ == 0) {
            throw Error(Errc::IdenticalPoints, "line normal is the zero vector");
        }
        BigInt g = gcd(gcd(a_, b_), c_);
        if (g != 1) {
            a_ /= g;
            b_ /= g;
            c_ /= g;
        }
        if (a_ < 0 || (a_ == 0 && b_ < 0)) {
            a_ = -a_;
            b_ = -b_;
            c_ = -c_;
        }
    }

    BigInt a_;
    BigInt b_;
    BigInt c_;
};

inline std::string to_string(const Line& l)
{
    return "{" + l.a().get_str() + "x + " + l.b().get_str() + "y = " + l.c().get_str() + "}";
}

inline Line line_through(const Point& p, const Point& q)
{
    if (p == q) {
        throw Error(Errc::IdenticalPoints, "line_through needs two distinct points, got " + to_string(p));
    }
    Rational a = q.y - p.y;
    Rational b = p.x - q.x;
    Rational c = a * p.x + b * p.y;
    return Line::from_rationals(a, b, c);
}

inline Line line_along(const Point& p, const Vec& direction)
{
    if (is_zero(direction)) {
        throw Error(Errc::IdenticalPoints, "zero direction vector");
    }
    return line_through(p, p + direction);
}

/// Unique crossing point, nullopt when parallel; identical lines are an error.
inline std::optional<Point> line_intersection(const Line& l, const Line& m)
{
    BigInt det = l.a() * m.b() - m.a() * l.b();
    if (det == 0) {
        if (l == m) {
            throw Error(Errc::CoincidentLines, "intersection of a line with itself: " + to_string(l));
        }
        return std::nullopt;
    }
    return Point(make_rational(l.c() * m.b() - m.c() * l.b(), det),
                 make_rational(l.a() * m.c() - m.a() * l.c(), det));
}

//---------------------------------------------------------------------------//
// Point sets
//---------------------------------------------------------------------------//

inline void require_distinct(std::vector<Point> sorted_copy)
{
    std::sort(sorted_copy.begin(), sorted_copy.end());
    auto dup = std::adjacent_find(sorted_copy.begin(), sorted_copy.end());
    if (dup != sorted_copy.end()) {
        throw Error(Errc::DuplicatePoints, "repeated point " + to_string(*dup));
    }
}

/// Hull vertices, counterclockwise, starting at the lexicographic minimum.
/// Points on the relative interior of a hull edge are dropped.
inline std::vector<Point> convex_hull(const std::vector<Point>& points)
{
    if (points.empty()) {
        throw Error(Errc::EmptyInput, "convex_hull of no points");
    }
    std::vector<Point> pts = points;
    std::sort(pts.begin(), pts.end());
    if (auto dup = std::adjacent_find(pts.begin(), pts.end()); dup != pts.end()) {
        throw Error(Errc::DuplicatePoints, "repeated point " + to_string(*dup));
    }
    if (pts.size() <= 2) {
        return pts;
    }
    std::vector<Point> hull;
    hull.reserve(2 * pts.size());
    // Monotone chain: lower hull left to right, then upper hull right to left.
    for (const Point& p : pts) {
        while (hull.size() >= 2 && orientation(hull[hull.size() - 2], hull.back(), p) <= 0) {
            hull.pop_back();
        }
        hull.push_back(p);
    }
    const std::size_t lower = hull.size() + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        const Point& p = pts[i];
        while (hull.size() >= lower && orientation(hull[hull.size() - 2], hull.back(), p) <= 0) {
            hull.pop_back();
        }
        hull.push_back(p);
    }
    hull.pop_back();
    return hull;
}

namespace detail {

// Primitive integer direction of the vector q - p, up to sign.
inline std::pair<BigInt, BigInt> primitive_direction(const Point& p, const Point& q)
{
    Line l = line_through(p, q);
    return {l.a(), l.b()};
}

} // namespace detail

/// No three points collinear. O(n^2 log n): for every point, sort the
/// primitive directions to the others and look for repeats.
inline bool is_general_position(const std::vector<Point>& points)
{
    require_distinct(points);
    std::vector<std::pair<BigInt, BigInt>> dirs;
    for (std::size_t i = 0; i < points.size(); ++i) {
        dirs.clear();
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j != i) {
                dirs.push_back(detail::primitive_direction(points[i], points[j]));
            }
        }
        std::sort(dirs.begin(), dirs.end());
        if (std::adjacent_find(dirs.begin(), dirs.end()) != dirs.end()) {
            return false;
        }
    }
    return true;
}

/// Every point is a hull vertex.
inline bool is_convex_position(const std::vector<Point>& points)
{
    require_distinct(points);
    if (points.empty()) {
        return true;
    }
    return convex_hull(points).size() == points.size();
}

/// A finite point set P. Points are distinct; general position is measured
/// at construction, not assumed.
class Instance {
public:
    Instance() = default;
    Instance(std::vector<Point> points, std::string label = {})
        : points_(std::move(points)), label_(std::move(label))
    {
        general_position_ = is_general_position(points_);
    }

    const std::vector<Point>& points() const { return points_; }
    const std::string& label() const { return label_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    bool general_position() const { return general_position_; }
    bool convex_position() const { return is_convex_position(points_); }

    bool contains(const Point& p) const
    {
        return std::find(points_.begin(), points_.end(), p) != points_.end();
    }

    friend bool operator==(const Instance& a, const Instance& b)
    {
        return a.points_ == b.points_ && a.label_ == b.label_;
    }

private:
    std::vector<Point> points_;
    std::string label_;
    bool general_position_ = true;
};

//---------------------------------------------------------------------------//
// Angle comparison
//---------------------------------------------------------------------------//

enum class AngleSum { Less, Equal, Greater };

/// Compares angle(p_out, p, q) + angle(p, q, q_out) with a straight angle.
/// The sum is below 180 degrees exactly when the rays p->p_out and
/// q->q_out meet on their common side of line(p, q).
inline AngleSum angle_sum_vs_straight(const Point& p, const Point& p_out, const Point& q, const Point& q_out)
{
    if (p == q) {
        throw Error(Errc::IdenticalPoints, "angle_sum_vs_straight needs p != q");
    }
    int sp = orientation(p, q, p_out);
    int sq = orientation(p, q, q_out);
    if (sp == 0 || sp != sq) {
        throw Error(Errc::SideViolation, "outer points must lie strictly on one common side of line(p,q)");
    }
    // p + t*u = q + s*v
    Vec u = p_out - p;
    Vec v = q_out - q;
    Rational det = cross(u, v);
    if (det == 0) {
        return AngleSum::Equal;
    }
    Vec w = q - p;
    Rational t = cross(w, v) / det;
    Rational s = cross(w, u) / det;
    return (t > 0 && s > 0) ? AngleSum::Less : AngleSum::Greater;
}

} // namespace cofinite
