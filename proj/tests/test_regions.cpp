#include <gtest/gtest.h>

#include <vector>

#include "cofinite/regions.hpp"
#include "oracles.hpp"

using namespace cofinite;

namespace {

const Line kXAxisNormal(1, 0, 0); // x = 0
const Line kYZero(0, 1, 0);       // y = 0

ConvexRegion random_region(oracle::Sampler& s, int constraints)
{
    std::vector<GeneralizedHalfPlane> cs;
    for (int i = 0; i < constraints; ++i) {
        Point p = s.point(4);
        Point q = s.point(4);
        if (p == q) {
            continue;
        }
        Line l = line_through(p, q);
        Side side = s.raw() % 2 ? Side::OpenPositive : Side::OpenNegative;
        switch (s.raw() % 4) {
        case 0: cs.emplace_back(l, side); break;
        case 1: cs.emplace_back(l, side, FullLine{}); break;
        case 2: cs.emplace_back(l, side, OpenRay{p, q - p}); break;
        default: cs.emplace_back(l, side, OpenSegment{p, q}); break;
        }
    }
    return ConvexRegion(std::move(cs));
}

} // namespace

TEST(HalfPlane, OpenSideExcludesLine)
{
    GeneralizedHalfPlane g(kXAxisNormal, Side::OpenPositive);
    EXPECT_TRUE(ghp_contains(g, {1, 0}));
    EXPECT_FALSE(ghp_contains(g, {0, 5}));
}

TEST(HalfPlane, OpenRayBoundary)
{
    GeneralizedHalfPlane g(kXAxisNormal, Side::OpenPositive, OpenRay{{0, 0}, {0, 1}});
    EXPECT_TRUE(ghp_contains(g, {0, 5}));
    EXPECT_FALSE(ghp_contains(g, {0, 0}));
    EXPECT_FALSE(ghp_contains(g, {0, -1}));
}

TEST(HalfPlane, Validation)
{
    EXPECT_THROW(GeneralizedHalfPlane(kXAxisNormal, Side::ClosedPositive), Error);
    EXPECT_THROW(GeneralizedHalfPlane(kXAxisNormal, Side::OpenPositive, OpenRay{{1, 0}, {0, 1}}), Error);
    EXPECT_THROW(GeneralizedHalfPlane(kXAxisNormal, Side::OpenPositive, OpenRay{{0, 0}, {1, 1}}), Error);
    EXPECT_THROW(GeneralizedHalfPlane(kXAxisNormal, Side::OpenPositive, OpenSegment{{0, 1}, {0, 1}}), Error);
    // An open side with the whole line is the closed side.
    GeneralizedHalfPlane g(kXAxisNormal, Side::OpenNegative, FullLine{});
    EXPECT_EQ(g.side(), Side::ClosedNegative);
    EXPECT_EQ(g, GeneralizedHalfPlane(kXAxisNormal, Side::ClosedNegative, FullLine{}));
}

TEST(HalfPlane, WitnessFactories)
{
    auto g = GeneralizedHalfPlane::toward(kXAxisNormal, {3, 1});
    EXPECT_TRUE(g.contains({1, -7}));
    auto h = GeneralizedHalfPlane::away_from(kXAxisNormal, {3, 1});
    EXPECT_TRUE(h.contains({-1, 2}));
    try {
        GeneralizedHalfPlane::toward(kXAxisNormal, {0, 4});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::SideViolation);
    }
}

TEST(Region, Examples)
{
    ConvexRegion whole;
    EXPECT_TRUE(region_contains(whole, {123, -7}));

    ConvexRegion quadrant({{kXAxisNormal, Side::OpenPositive}, {kYZero, Side::OpenPositive}});
    EXPECT_TRUE(region_contains(quadrant, {1, 1}));
    EXPECT_FALSE(region_contains(quadrant, {1, 0}));

    ConvexRegion seg({{kYZero, Side::OpenPositive, OpenRay{{0, 0}, {1, 0}}},
                      {kYZero, Side::OpenPositive, OpenRay{{2, 0}, {-1, 0}}}});
    EXPECT_TRUE(region_contains(seg, {1, 0}));
    EXPECT_FALSE(region_contains(seg, {3, 0}));
    // Scan rational points of y = 0: the trace is exactly the open segment.
    for (int i = -40; i <= 40; ++i) {
        Point p(make_rational(i, 8), 0);
        EXPECT_EQ(region_contains(seg, p), p.x > 0 && p.x < 2) << to_string(p);
    }
}

TEST(Region, IntersectPrunesDuplicates)
{
    GeneralizedHalfPlane g(kXAxisNormal, Side::OpenPositive);
    ConvexRegion r = region_intersect(ConvexRegion(), g);
    EXPECT_EQ(r.constraints().size(), 1u);
    ConvexRegion twice = region_intersect(r, g);
    EXPECT_EQ(twice.constraints().size(), 1u);
}

TEST(Region, MembershipMatchesOracle)
{
    oracle::Sampler s(17);
    for (int trial = 0; trial < 100; ++trial) {
        ConvexRegion r = random_region(s, 1 + static_cast<int>(s.raw() % 4));
        ConvexRegion g_only = random_region(s, 1);
        if (g_only.constraints().empty()) {
            continue;
        }
        const auto& g = g_only.constraints()[0];
        ConvexRegion both = region_intersect(r, g);
        for (int k = 0; k < 60; ++k) {
            Point p = k % 3 == 0 ? s.on(g.line(), 4) : s.point(5);
            EXPECT_EQ(region_contains(both, p), oracle::region_member(r, p) && oracle::ghp_member(g, p));
        }
    }
}

TEST(Region, ConvexUnderSampledMidpoints)
{
    oracle::Sampler s(23);
    for (int trial = 0; trial < 40; ++trial) {
        ConvexRegion r = random_region(s, 1 + static_cast<int>(s.raw() % 3));
        std::vector<Point> members;
        for (int k = 0; k < 400 && members.size() < 40; ++k) {
            Point p = s.point(5);
            if (!r.constraints().empty() && k % 2 == 0) {
                p = s.on(r.constraints()[s.raw() % r.constraints().size()].line(), 4);
            }
            if (r.contains(p)) {
                members.push_back(p);
            }
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                EXPECT_TRUE(r.contains(midpoint(members[i], members[j])));
            }
        }
    }
}

TEST(Split, WholePlaneAtOrigin)
{
    auto [g1, g2] = split_at_point({0, 0}, {0, 1});
    EXPECT_TRUE(g1.contains({-1, 0}));
    EXPECT_TRUE(g1.contains({0, -1}));
    EXPECT_FALSE(g1.contains({0, 1}));
    EXPECT_TRUE(g2.contains({1, 0}));
    EXPECT_TRUE(g2.contains({0, 1}));
    EXPECT_FALSE(g2.contains({0, -1}));
    EXPECT_FALSE(g1.contains({0, 0}));
    EXPECT_FALSE(g2.contains({0, 0}));
}

TEST(Split, StaysInsideRegion)
{
    ConvexRegion r({{kYZero, Side::OpenPositive, OpenRay{{0, 0}, {1, 0}}}});
    ConvexRegion above({{Line(0, 1, -1), Side::OpenPositive}});
    auto [a, b] = split_region_at_point(above, {0, 0}, {0, 1});
    EXPECT_FALSE(a.contains({0, 0}));
    EXPECT_FALSE(b.contains({0, 0}));
    EXPECT_FALSE(a.contains({-1, -2}));
    EXPECT_FALSE(b.contains({1, -2}));
    try {
        split_region_at_point(r, {-1, 0}, {0, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::PointNotInRegion);
    }
}

TEST(Split, DisjointUnionIsRegionMinusPoint)
{
    oracle::Sampler s(31);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        ConvexRegion r = random_region(s, 1 + static_cast<int>(s.raw() % 3));
        Point p = s.point(3);
        if (!r.contains(p)) {
            continue;
        }
        Vec axis = s.point(2);
        if (is_zero(axis)) {
            continue;
        }
        auto [a, b] = split_region_at_point(r, p, axis);
        for (int k = 0; k < 170; ++k) {
            Point q = k % 4 == 0 ? s.near(p) : (k % 4 == 1 ? p + s.scalar(3) * axis : s.point(5));
            if (q == p) {
                continue;
            }
            const bool in_a = a.contains(q);
            const bool in_b = b.contains(q);
            EXPECT_FALSE(in_a && in_b);
            EXPECT_EQ(in_a || in_b, oracle::region_member(r, q));
            ++checked;
        }
        EXPECT_FALSE(a.contains(p) || b.contains(p));
    }
    EXPECT_GT(checked, 1000);
}

TEST(Wedge, Quadrants)
{
    ConvexRegion q = wedge({0, 0}, {1, 0}, {0, 1});
    EXPECT_TRUE(q.contains({1, 1}));
    EXPECT_FALSE(q.contains({1, 0}));
    ConvexRegion qa = wedge({0, 0}, {1, 0}, {0, 1}, OpenRay{{0, 0}, {1, 0}});
    EXPECT_TRUE(qa.contains({1, 0}));
    EXPECT_FALSE(qa.contains({0, 0}));
    EXPECT_FALSE(qa.contains({0, 1}));
    try {
        wedge({0, 0}, {1, 1}, {-2, -2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ParallelDirections);
    }
}

TEST(Wedge, ReflexConeAsTwoWedges)
{
    // The cone of directions from (1,0) counterclockwise to (0,-1), 270
    // degrees, is the union of two convex wedges meeting along (-1,1).
    ConvexRegion w1 = wedge({0, 0}, {1, 0}, {-1, 1}, NoBoundary{}, OpenRay{{0, 0}, {-1, 1}});
    ConvexRegion w2 = wedge({0, 0}, {-1, 1}, {0, -1});
    oracle::Sampler s(41);
    for (int k = 0; k < 2000; ++k) {
        Point p = k % 5 == 0 ? Point(s.scalar(4) * Rational(-1), s.scalar(4)) : s.point(4);
        if (k % 5 == 0) {
            p = Point(-abs(p.y), abs(p.y));
        }
        const bool in_cone = !(p.x >= 0 && p.y <= 0) && !(p.x == 0 && p.y == 0);
        EXPECT_EQ(w1.contains(p) || w2.contains(p), in_cone) << to_string(p);
        EXPECT_FALSE(w1.contains(p) && w2.contains(p));
    }
}

TEST(Cover, AnchorsAndCarriers)
{
    ConvexRegion seg({{kYZero, Side::OpenPositive, OpenSegment{{0, 0}, {2, 0}}}});
    ConvexRegion ray({{kXAxisNormal, Side::OpenNegative, OpenRay{{0, 3}, {0, 1}}}});
    Cover c{{seg, ray}, Instance(), {}, "test"};
    EXPECT_EQ(cover_anchors(c), (std::vector<Point>{{0, 0}, {0, 3}, {2, 0}}));
    EXPECT_EQ(cover_carriers(c), (std::vector<Line>{kYZero, kXAxisNormal}));
}
