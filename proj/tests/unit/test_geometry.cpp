#include "support.hpp"

#include "wedgelab/error.hpp"
#include "wedgelab/geometry.hpp"

#include <gtest/gtest.h>

using namespace wlt;

TEST(Scalar, ParsesAndReducesToLowestTerms)
{
    EXPECT_EQ(parse_scalar("-3/5"), make_scalar(-3, 5));
    EXPECT_EQ(parse_scalar("6/4"), make_scalar(3, 2));
    EXPECT_EQ(parse_scalar("+7"), Scalar(7));
    EXPECT_EQ(to_string(parse_scalar("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_scalar("-10/5")), "-2");
}

TEST(Scalar, RejectsMalformedText)
{
    for (const char* bad : {"", "1/0", "1/-2", "x", "1.5", "3/", "/3", "1 2", "--1"}) {
        try {
            parse_scalar(bad);
            ADD_FAILURE() << "accepted '" << bad << "'";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::Parse) << bad;
        }
    }
}

TEST(Scalar, DecimalRenderingHasTwelveSignificantDigits)
{
    EXPECT_EQ(to_decimal(make_scalar(1, 3)), "0.333333333333");
    EXPECT_EQ(to_decimal(Scalar(8)), "8");
    EXPECT_EQ(to_decimal(make_scalar(-5, 4)), "-1.25");
}

TEST(Wedge, Examples)
{
    EXPECT_EQ(wedge(pt(1, 0), pt(0, 1)), 1);
    EXPECT_EQ(wedge(pt(2, 3), pt(4, 6)), 0);
    EXPECT_EQ(wedge(pt(1, 2), pt(3, 5)), -1);
}

TEST(Dot, Examples)
{
    EXPECT_EQ(dot(pt(1, 0), pt(0, 1)), 0);
    EXPECT_EQ(dot(pt(1, 2), pt(3, 5)), 13);
    EXPECT_EQ(dot(pt(2, 3), pt(2, 3)), 13);
}

TEST(Perp, Examples)
{
    EXPECT_EQ(perp(pt(1, 0)), pt(0, 1));
    EXPECT_EQ(perp(pt(3, 5)), pt(-5, 3));
    EXPECT_EQ(wedge(pt(1, 2), pt(-5, 3)), 13);
}

TEST(MaxCollinear, Examples)
{
    EXPECT_EQ(max_collinear(pts("1 0\n0 1")), 2u);
    EXPECT_EQ(max_collinear(generate({GeneratorKind::Collinear, 5, 0, std::nullopt, {}})), 5u);
    EXPECT_EQ(max_collinear(grid(3)), 3u);
    EXPECT_EQ(max_collinear(pts("1 1")), 1u);
    // a line that misses the origin
    EXPECT_EQ(max_collinear(pts("1 5\n2 4\n3 3\n4 2\n1 1")), 4u);
}

TEST(PointSet, RejectsOriginAndDuplicates)
{
    try {
        pts("0 0\n1 1");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OriginPoint);
    }
    try {
        pts("1 2\n2/2 4/2");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DuplicatePoint);
    }
}

TEST(PointSet, IsSortedLexicographically)
{
    const PointSet p = pts("2 1\n1 3\n1 -1");
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p[0], pt(1, -1));
    EXPECT_EQ(p[1], pt(1, 3));
    EXPECT_EQ(p[2], pt(2, 1));
    EXPECT_EQ(p.find(pt(1, 3)), 1u);
    EXPECT_EQ(p.find(pt(9, 9)), 3u);
}

TEST(Rotation, TripleEnumerationOrder)
{
    const auto r = pythagorean_rotations(4);
    ASSERT_EQ(r.size(), 4u);
    EXPECT_EQ(r[0], std::make_pair(make_scalar(3, 5), make_scalar(4, 5)));
    EXPECT_EQ(r[1], std::make_pair(make_scalar(5, 13), make_scalar(12, 13)));
    EXPECT_EQ(r[2], std::make_pair(make_scalar(8, 17), make_scalar(15, 17)));
    EXPECT_EQ(r[3], std::make_pair(make_scalar(7, 25), make_scalar(24, 25)));
    for (const auto& [c, s] : pythagorean_rotations(64))
        EXPECT_EQ(c * c + s * s, 1);
}

TEST(Rotation, Examples)
{
    const auto single = normalize_rotation(pts("1 0"));
    EXPECT_EQ(single.points[0], (Point2{make_scalar(3, 5), make_scalar(4, 5)}));
    EXPECT_EQ(single.rotation.cos, make_scalar(3, 5));
    EXPECT_EQ(single.rotation.sin, make_scalar(4, 5));
    EXPECT_EQ(single.rotation.attempt, 1u);

    const auto basis = normalize_rotation(pts("1 0\n0 1"));
    EXPECT_EQ(basis.points, PointSet({{make_scalar(3, 5), make_scalar(4, 5)}, {make_scalar(-4, 5), make_scalar(3, 5)}}));

    const auto fives = normalize_rotation(pts("5 0\n0 5"));
    EXPECT_TRUE(is_rotation_normalized(fives.points));
    for (const auto& v : fives.points) {
        EXPECT_NE(v.x, 0);
        EXPECT_NE(v.y, 0);
    }
}

TEST(Rotation, SkipsTriplesThatCollideXCoordinates)
{
    // (3,-4) rotates onto the x-axis under (3/5, 4/5)
    const auto n = normalize_rotation(pts("3 -4\n1 1"));
    EXPECT_GT(n.rotation.attempt, 1u);
    EXPECT_TRUE(is_rotation_normalized(n.points));
}

TEST(Rotation, ExhaustionIsReported)
{
    try {
        normalize_rotation(pts("3 -4\n1 1"), 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RotationExhausted);
    }
}

TEST(GeometryProperties, WedgeAntisymmetryAndPerpIdentity)
{
    SplitMix64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const Point2 u = random_point(rng), v = random_point(rng);
        EXPECT_EQ(wedge(u, v), -wedge(v, u));
        EXPECT_EQ(wedge(u, u), 0);
        EXPECT_EQ(dot(u, v), dot(v, u));
        EXPECT_EQ(dot(u, v), wedge(u, perp(v)));
    }
}

TEST(GeometryProperties, UnimodularMatricesPreserveWedge)
{
    SplitMix64 rng(12);
    int checked = 0;
    while (checked < 300) {
        const long a = static_cast<long>(rng.below(11)) - 5, b = static_cast<long>(rng.below(11)) - 5;
        const long c = static_cast<long>(rng.below(11)) - 5, d = static_cast<long>(rng.below(11)) - 5;
        if (a * d - b * c != 1)
            continue;
        ++checked;
        const Point2 u = random_point(rng), v = random_point(rng);
        const Point2 mu{a * u.x + b * u.y, c * u.x + d * u.y};
        const Point2 mv{a * v.x + b * v.y, c * v.x + d * v.y};
        EXPECT_EQ(wedge(mu, mv), wedge(u, v));
    }
}

TEST(GeometryProperties, RotationPreservesPairValuesAndCollinearity)
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const PointSet p = random_set(8, 5, seed);
        const auto n = normalize_rotation(p);
        EXPECT_TRUE(is_rotation_normalized(n.points));
        EXPECT_EQ(max_collinear(n.points), max_collinear(p));
        for (const auto& u : p)
            for (const auto& v : p) {
                const Point2 ru = rotate(u, n.rotation.cos, n.rotation.sin);
                const Point2 rv = rotate(v, n.rotation.cos, n.rotation.sin);
                EXPECT_EQ(wedge(ru, rv), wedge(u, v));
                EXPECT_EQ(dot(ru, rv), dot(u, v));
            }
    }
}
