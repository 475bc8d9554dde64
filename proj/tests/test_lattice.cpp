#include "gcrystal/lattice.hpp"

#include <gtest/gtest.h>

using namespace gcrystal;

namespace {

XPoint point21()
{
    XPoint x{Shape{2, 1}};
    x.set(1, 1, 2);
    x.set(1, 2, 3);
    return x;
}

} // namespace

TEST(Shape, SmallestCase)
{
    const Shape s{2, 1};
    EXPECT_EQ(s.kprime(), 2);
    EXPECT_EQ(s.nodes(Side::L1), (std::vector<Coord>{{1, 1}, {1, 2}}));
    EXPECT_EQ(s.nodes(Side::L2), (std::vector<Coord>{{1, 0}, {1, 1}}));
}

TEST(Shape, ThreeTwo)
{
    const Shape s{3, 2};
    EXPECT_EQ(s.nodes(Side::L1), (std::vector<Coord>{{1, 2}, {1, 3}, {2, 1}, {2, 2}}));
    EXPECT_EQ(s.nodes(Side::L2), (std::vector<Coord>{{1, 1}, {1, 2}, {2, 0}, {2, 1}}));
}

TEST(Shape, RejectsBadArguments)
{
    EXPECT_THROW(make_shape(2, 3), ValidationError);
    EXPECT_THROW(make_shape(1, 1), ValidationError);
    EXPECT_THROW(make_shape(4, 0), ValidationError);
}

TEST(Shape, CardinalityUpToEight)
{
    for (int n = 2; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            const Shape s{n, k};
            const auto expected = static_cast<std::size_t>(k * (n + 1 - k));
            EXPECT_EQ(s.nodes(Side::L1).size(), expected);
            EXPECT_EQ(s.nodes(Side::L2).size(), expected);
            int expect = 0;
            for (const auto& c : s.nodes(Side::L1)) {
                EXPECT_TRUE(c.l + c.m > k && c.l + c.m <= n + 1);
                EXPECT_EQ(s.index(Side::L1, c.l, c.m), expect++);
            }
            expect = 0;
            for (const auto& c : s.nodes(Side::L2)) {
                EXPECT_TRUE(c.l + c.m >= k && c.l + c.m <= n);
                EXPECT_EQ(s.index(Side::L2, c.l, c.m), expect++);
            }
        }
    }
}

TEST(XGet, OnAndOffLattice)
{
    const XPoint x = point21();
    EXPECT_EQ(x_get(x, 1, 1), 2);
    EXPECT_EQ(x_get(x, 2, 0), 1);
    EXPECT_EQ(x_get(x, 0, 5), 1);
}

TEST(TropGet, OnAndOffLattice)
{
    TropPoint x{Shape{2, 1}};
    x.set(1, 2, 5);
    EXPECT_EQ(trop_get(x, 1, 2), 5);
    EXPECT_EQ(trop_get(x, 2, 1), 0);
    EXPECT_EQ(trop_get(x, 1, 0), 0);
}

TEST(XPoint, SetOffLatticeThrows)
{
    XPoint x{Shape{2, 1}};
    EXPECT_THROW(x.set(2, 1, 1), ValidationError);
    EXPECT_THROW((XPoint{Shape{2, 1}, {1}}), ValidationError);
}

TEST(Sampling, Deterministic)
{
    const Shape s{2, 1};
    EXPECT_EQ(sample_point<XPoint>(s, 7, 16), sample_point<XPoint>(s, 7, 16));
    EXPECT_EQ(sample_point<TropPoint>(s, 7, 16), sample_point<TropPoint>(s, 7, 16));
    EXPECT_NE(sample_point<XPoint>(s, 7, 16), sample_point<XPoint>(s, 8, 16));
}

TEST(Sampling, RationalBounds)
{
    const auto x = sample_point<XPoint>(Shape{3, 2}, 1, 10);
    ASSERT_EQ(x.entries().size(), 4u);
    EXPECT_TRUE(all_positive(x));
    for (const auto& q : x.entries()) {
        EXPECT_LE(q.get_num(), 10);
        EXPECT_LE(q.get_den(), 10);
    }
}

TEST(Sampling, TropicalBounds)
{
    Sampler rng{3};
    for (int t = 0; t < 50; ++t) {
        const auto x = sample_point<TropPoint>(Shape{4, 2}, rng, 3);
        for (auto v : x.entries()) {
            EXPECT_GE(v, -3);
            EXPECT_LE(v, 3);
        }
    }
}

TEST(Sampling, NotOne)
{
    Sampler rng{11};
    for (int t = 0; t < 200; ++t) {
        EXPECT_NE(rng.positive_rational_not_one(5), 1);
    }
    EXPECT_THROW(rng.positive_rational_not_one(1), ValidationError);
}

TEST(Rational, FormatAndParse)
{
    EXPECT_EQ(to_string(make_rational(6, 4)), "3/2");
    EXPECT_EQ(to_string(make_rational(-3)), "-3/1");
    EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
    EXPECT_EQ(parse_rational("-7"), make_rational(-7));
    EXPECT_THROW(parse_rational("1/0"), ValidationError);
    EXPECT_THROW(parse_rational("1/2x"), ValidationError);
    EXPECT_THROW(parse_rational(""), ValidationError);
    EXPECT_EQ(pow(make_rational(2, 3), -2), make_rational(9, 4));
}
