#include "gcrystal/tropical.hpp"

#include <gtest/gtest.h>

using namespace gcrystal;

namespace {

TropPoint trop21(TropInt a, TropInt b)
{
    TropPoint x{Shape{2, 1}};
    x.set(1, 1, a);
    x.set(1, 2, b);
    return x;
}

const std::vector<std::pair<int, int>> shapes{{2, 1}, {3, 1}, {3, 2}, {4, 2}, {5, 2}, {5, 3}};

/// Region maxima by explicit enumeration, for the i = 0 operator.
TropPoint trop_e0_by_enumeration(const TropPoint& x, TropInt d)
{
    const Shape& s = x.shape();
    using S = MaxPlusSemiring;
    auto region = [&](oracle::Region r, int l, int m) { return oracle::region_sum(x, r, l, m); };
    TropPoint out{s};
    for (const auto& [l, m] : s.nodes(Side::L1)) {
        if (l == 1 && m == s.n()) {
            out.set(l, m, x.get(l, m) - d);
            continue;
        }
        const auto top = S::add(region(oracle::Region::above, l - 1, m), S::mul(d, region(oracle::Region::below, l, m)));
        const auto bottom = S::add(region(oracle::Region::above, l, m), S::mul(d, region(oracle::Region::below, l + 1, m)));
        out.set(l, m, x.get(l, m) + *top - *bottom);
    }
    return out;
}

} // namespace

TEST(TropExamples, Weight)
{
    const auto x = trop21(0, 5);
    EXPECT_EQ(trop_wt(x, 1), -5);
    EXPECT_EQ(trop_wt(x, 0), -5);
    const TropPoint zero{Shape{4, 2}};
    for (int i = 0; i <= 4; ++i) {
        EXPECT_EQ(trop_wt(zero, i), 0);
        EXPECT_EQ(trop_eps(zero, i), 0);
    }
}

TEST(TropExamples, Epsilon)
{
    const auto x = trop21(0, 5);
    EXPECT_EQ(trop_eps(x, 1), 5);
    EXPECT_EQ(trop_eps(x, 0), 0);
    TropPoint y{Shape{3, 2}};
    y.set(2, 1, 4);
    y.set(2, 2, -3);
    y.set(1, 2, 7);
    y.set(1, 3, 1);
    EXPECT_EQ(trop_eps(y, 1), -3 - 4);
}

TEST(TropExamples, Actions)
{
    const auto x = trop21(0, 5);
    EXPECT_EQ(trop_e(x, 1, 1), trop21(1, 5));
    EXPECT_EQ(trop_e(x, 0, 1), trop21(-1, 4));
    EXPECT_EQ(trop_weyl(x, 1), trop21(5, 5));
    for (int i = 0; i <= 2; ++i) {
        EXPECT_EQ(trop_e(x, i, 0), x);
    }
}

TEST(TropAxioms, GroupLawWeightsEpsilon)
{
    Sampler rng{61};
    for (const auto& [n, k] : shapes) {
        const Shape s{n, k};
        const CartanA1n a{n};
        for (int t = 0; t < 10; ++t) {
            const auto x = sample_point<TropPoint>(s, rng, 10);
            const auto d = rng.uniform(-4, 4);
            const auto d2 = rng.uniform(-4, 4);
            for (int i = 0; i <= n; ++i) {
                const auto ex = trop_e(x, i, d);
                EXPECT_EQ(trop_e(ex, i, d2), trop_e(x, i, d + d2));
                EXPECT_EQ(trop_eps(ex, i), trop_eps(x, i) - d);
                for (int j = 0; j <= n; ++j) {
                    EXPECT_EQ(trop_wt(ex, j), trop_wt(x, j) + d * a(i, j));
                }
            }
        }
    }
}

TEST(TropAxioms, ZeroOperatorMatchesEnumeration)
{
    Sampler rng{67};
    for (const auto& [n, k] : shapes) {
        const Shape s{n, k};
        for (int t = 0; t < 5; ++t) {
            const auto x = sample_point<TropPoint>(s, rng, 10);
            const auto d = rng.uniform(-4, 4);
            EXPECT_EQ(trop_e(x, 0, d), trop_e0_by_enumeration(x, d));
            EXPECT_EQ(trop_eps(x, 0), x.get(1, n) + *oracle::sum_over(x, oracle::full_paths(s, Side::L1)));
        }
    }
}

TEST(TropWeyl, Relations)
{
    Sampler rng{71};
    for (const auto& [n, k] : shapes) {
        const Shape s{n, k};
        const CartanA1n a{n};
        const auto x = sample_point<TropPoint>(s, rng, 10);
        for (int i = 0; i <= n; ++i) {
            EXPECT_EQ(trop_weyl(trop_weyl(x, i), i), x);
            EXPECT_EQ(trop_weyl(TropPoint{s}, i), TropPoint{s});
            for (int j = i + 1; j <= n; ++j) {
                if (a(i, j) == 0) {
                    EXPECT_EQ(trop_weyl(trop_weyl(x, j), i), trop_weyl(trop_weyl(x, i), j));
                } else {
                    EXPECT_EQ(trop_weyl(trop_weyl(trop_weyl(x, i), j), i), trop_weyl(trop_weyl(trop_weyl(x, j), i), j));
                }
            }
        }
    }
}

TEST(DegreeProbe, Examples)
{
    const auto x = trop21(0, 5);
    EXPECT_EQ(ud_degree_probe({UdQuantity::Kind::epsilon, 1, {}}, x, 0), 5);
    EXPECT_EQ(ud_degree_probe({UdQuantity::Kind::gamma, 0, {}}, x, 0), -5);
    const TropPoint zero{Shape{3, 2}};
    for (int i = 0; i <= 3; ++i) {
        EXPECT_EQ(ud_degree_probe({UdQuantity::Kind::gamma, i, {}}, zero, 0), 0);
    }
    EXPECT_THROW(ud_degree_probe({UdQuantity::Kind::gamma, 1, {}}, trop21(9, 0), 0), ValidationError);
    EXPECT_THROW(ud_degree_probe({UdQuantity::Kind::e_coord, 1, {3, 3}}, x, 0), ValidationError);
}

TEST(DegreeProbe, MatchesClosedForms)
{
    Sampler rng{73};
    for (const auto& [n, k] : shapes) {
        const Shape s{n, k};
        for (int t = 0; t < 8; ++t) {
            const auto x = sample_point<TropPoint>(s, rng, 8);
            const auto d = rng.uniform(-8, 8);
            for (int i = 0; i <= n; ++i) {
                for (auto kind : {UdQuantity::Kind::gamma, UdQuantity::Kind::epsilon}) {
                    const UdQuantity qd{kind, i, {}};
                    EXPECT_EQ(ud_degree_probe(qd, x, d), ud_closed_form(qd, x, d));
                }
                for (const auto& c : s.nodes(Side::L1)) {
                    const UdQuantity qd{UdQuantity::Kind::e_coord, i, c};
                    EXPECT_EQ(ud_degree_probe(qd, x, d), ud_closed_form(qd, x, d)) << "i=" << i;
                }
            }
        }
    }
}
