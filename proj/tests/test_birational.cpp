#include "gcrystal/birational.hpp"

#include <gtest/gtest.h>

using namespace gcrystal;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

XPoint point32()
{
    XPoint x{Shape{3, 2}};
    x.set(2, 1, 1);
    x.set(2, 2, 2);
    x.set(1, 2, 3);
    x.set(1, 3, 4);
    return x;
}

const std::vector<std::pair<int, int>> shapes{{2, 1}, {3, 1}, {3, 2}, {4, 2}, {5, 2}, {5, 3}};

} // namespace

TEST(ChartChange, SmallestShape)
{
    XPoint x{Shape{2, 1}};
    x.set(1, 1, 2);
    x.set(1, 2, 3);
    const auto y = sigma_map(x);
    EXPECT_EQ(y.get(1, 0), q(1, 3));
    EXPECT_EQ(y.get(1, 1), q(2, 3));
    EXPECT_EQ(xi_map(y), x);
}

TEST(ChartChange, ThreeTwo)
{
    const auto y = sigma_map(point32());
    EXPECT_EQ(y.get(2, 0), q(1, 4));
    EXPECT_EQ(y.get(2, 1), q(5, 4));
    EXPECT_EQ(y.get(1, 1), q(1, 5));
    EXPECT_EQ(y.get(1, 2), q(3, 2));
    EXPECT_EQ(xi_map(y), point32());
}

TEST(ChartChange, AllOnesCountsPaths)
{
    const Shape s{5, 3};
    const XPoint x{s};
    const auto y = sigma_map(x);
    const PathTables<XPoint> t{x};
    for (const auto& [l, m] : s.nodes(Side::L2)) {
        EXPECT_EQ(y.get(l, m), t.X(l, m) / t.X(l + 1, m));
    }
}

TEST(ChartChange, LastRowIsPartialSum)
{
    const auto x = sample_point<XPoint>(Shape{5, 3}, 4, 9);
    const auto y = sigma_map(x);
    const PathTables<XPoint> t{x};
    EXPECT_EQ(y.get(3, 0), 1 / x.get(1, 5));
    for (int m = 1; m <= 2; ++m) {
        EXPECT_EQ(y.get(3, m), t.X(3, m));
    }
}

TEST(ChartChange, RoundTripsAndPositivity)
{
    Sampler rng{31};
    for (const auto& [n, k] : shapes) {
        const Shape s{n, k};
        for (int t = 0; t < 10; ++t) {
            const auto x = sample_point<XPoint>(s, rng, 20);
            const auto y = sample_point<YPoint>(s, rng, 20);
            const auto sx = sigma_map(x);
            const auto xy = xi_map(y);
            EXPECT_TRUE(all_positive(sx));
            EXPECT_TRUE(all_positive(xy));
            EXPECT_EQ(xi_map(sx), x);
            EXPECT_EQ(sigma_map(xy), y);
        }
    }
}

TEST(ChartChange, FactorisationThroughPartialSums)
{
    Sampler rng{8};
    for (const auto& [n, k] : shapes) {
        const Shape s{n, k};
        const auto x = sample_point<XPoint>(s, rng, 20);
        const auto y = sample_point<YPoint>(s, rng, 20);
        const PathTables<XPoint> tx{x};
        const PathTables<YPoint> tsx{sigma_map(x)};
        const PathTables<YPoint> ty{y};
        const PathTables<XPoint> txy{xi_map(y)};
        for (const auto& [l, m] : s.nodes(Side::L1)) {
            EXPECT_EQ(x.get(l, m), tx.X(l, m) * tsx.Ystar(l - 1, m));
        }
        for (const auto& [l, m] : s.nodes(Side::L2)) {
            EXPECT_EQ(y.get(l, m), ty.Ystar(l, m) * txy.X(l, m));
        }
    }
}
