#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "cofinite/geometry.hpp"
#include "oracles.hpp"

using namespace cofinite;

TEST(Rational, CanonicalAndSerialized)
{
    Rational r = make_rational(6, -4);
    EXPECT_EQ(to_string(r), "-3/2");
    EXPECT_EQ(to_string(Rational(4)), "4");
    EXPECT_EQ(parse_rational("-3/2"), r);
    EXPECT_EQ(parse_rational("10/4"), Rational(5, 2));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("1/-2"), Error);
    EXPECT_THROW(parse_rational("x"), Error);
    EXPECT_THROW(parse_rational(""), Error);
}

TEST(Orientation, Examples)
{
    EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), 1);
    EXPECT_EQ(orientation({0, 0}, {1, 1}, {2, 2}), 0);
    EXPECT_EQ(orientation({0, 0}, {0, 1}, {1, 0}), -1);
}

TEST(Orientation, AffineMapsPreserveOrFlipSign)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto r = [&] { return Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1); };
        Point a{r(), r()}, b{r(), r()}, c{r(), r()};
        Rational m11 = r(), m12 = r(), m21 = r(), m22 = r();
        Rational det = m11 * m22 - m12 * m21;
        if (det == 0) {
            continue;
        }
        Vec t{r(), r()};
        auto f = [&](const Point& p) { return Point(m11 * p.x + m12 * p.y + t.x, m21 * p.x + m22 * p.y + t.y); };
        EXPECT_EQ(orientation(f(a), f(b), f(c)), sign(det) * orientation(a, b, c));
    }
}

TEST(ConvexHull, Examples)
{
    EXPECT_EQ(convex_hull({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}}),
              (std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
    EXPECT_EQ(convex_hull({{0, 0}}), (std::vector<Point>{{0, 0}}));
    EXPECT_EQ(convex_hull({{0, 0}, {3, 1}, {1, 3}, {4, 4}}), (std::vector<Point>{{0, 0}, {3, 1}, {4, 4}, {1, 3}}));
    EXPECT_THROW(convex_hull({}), Error);
    try {
        convex_hull({{1, 1}, {1, 1}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DuplicatePoints);
    }
}

TEST(ConvexHull, MatchesBruteForceOnRandomSets)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        std::vector<Point> pts;
        while (pts.size() < n) {
            Point p(static_cast<long>(rng() % 15), static_cast<long>(rng() % 15));
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) {
                pts.push_back(p);
            }
        }
        EXPECT_EQ(convex_hull(pts), oracle::brute_hull(pts));
    }
}

TEST(Position, Predicates)
{
    EXPECT_FALSE(is_general_position({{0, 0}, {1, 0}, {2, 0}}));
    EXPECT_TRUE(is_convex_position({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
    std::vector<Point> centred{{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}};
    EXPECT_FALSE(is_convex_position(centred));
    EXPECT_FALSE(is_general_position(centred));
    EXPECT_THROW(is_general_position({{0, 0}, {0, 0}}), Error);
}

TEST(Position, GeneralPositionMatchesTripleScan)
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + rng() % 8;
        std::vector<Point> pts;
        while (pts.size() < n) {
            Point p(static_cast<long>(rng() % 9), static_cast<long>(rng() % 9));
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) {
                pts.push_back(p);
            }
        }
        EXPECT_EQ(is_general_position(pts), !oracle::has_collinear_triple(pts));
        EXPECT_EQ(is_convex_position(pts), oracle::brute_hull(pts).size() == pts.size());
    }
}

TEST(Lines, ThroughAndIntersection)
{
    Line l = line_through({0, 0}, {1, 1});
    EXPECT_EQ(l.a(), 1);
    EXPECT_EQ(l.b(), -1);
    EXPECT_EQ(l.c(), 0);
    EXPECT_EQ(line_through({2, 2}, {-3, -3}), l);
    EXPECT_EQ(Line::from_rationals(Rational(1, 2), Rational(-1, 2), 0), l);
    Line x0(1, 0, 0);
    Line y0(0, 1, 0);
    EXPECT_EQ(line_intersection(x0, y0), Point(0, 0));
    EXPECT_EQ(line_intersection(y0, Line(0, 1, 1)), std::nullopt);
    try {
        line_intersection(x0, Line(-2, 0, 0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::CoincidentLines);
    }
    try {
        line_through({1, 2}, {1, 2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::IdenticalPoints);
    }
}

TEST(Lines, CanonicalFormIsUnique)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto r = [&] { return Rational(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 5) + 1); };
        Point p{r(), r()}, q{r(), r()};
        if (p == q) {
            continue;
        }
        Line l = line_through(p, q);
        EXPECT_TRUE(l.contains(p));
        EXPECT_TRUE(l.contains(q));
        EXPECT_TRUE(l.a() > 0 || (l.a() == 0 && l.b() > 0));
        EXPECT_EQ(gcd(gcd(l.a(), l.b()), l.c()), 1);
        EXPECT_EQ(line_through(q, p), l);
        EXPECT_TRUE(l.contains(l.anchor()));
    }
}

TEST(AngleSum, Examples)
{
    EXPECT_EQ(angle_sum_vs_straight({0, 0}, {-1, 1}, {2, 0}, {3, 1}), AngleSum::Greater);
    EXPECT_EQ(angle_sum_vs_straight({0, 0}, {-1, 1}, {2, 0}, {1, 1}), AngleSum::Equal);
    EXPECT_EQ(angle_sum_vs_straight({0, 0}, {1, 1}, {2, 0}, {1, 1}), AngleSum::Less);
    try {
        angle_sum_vs_straight({0, 0}, {1, 1}, {2, 0}, {1, -1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::SideViolation);
    }
}

TEST(AngleSum, SymmetricUnderSwap)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        auto r = [&] { return static_cast<long>(rng() % 21) - 10; };
        Point p(r(), r()), q(r(), r()), po(r(), r()), qo(r(), r());
        if (p == q) {
            continue;
        }
        int sp = orientation(p, q, po);
        if (sp == 0 || sp != orientation(p, q, qo)) {
            continue;
        }
        EXPECT_EQ(angle_sum_vs_straight(p, po, q, qo), angle_sum_vs_straight(q, qo, p, po));
    }
}

TEST(Instance, FlagsAndDuplicates)
{
    Instance inst({{0, 0}, {4, 0}, {0, 4}}, "t");
    EXPECT_TRUE(inst.general_position());
    EXPECT_TRUE(inst.convex_position());
    EXPECT_TRUE(inst.contains({4, 0}));
    EXPECT_THROW(Instance({{1, 1}, {1, 1}}), Error);
    EXPECT_FALSE(Instance({{0, 0}, {1, 1}, {2, 2}}).general_position());
}
