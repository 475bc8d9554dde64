#include "gcrystal/iso.hpp"
#include "gcrystal/tropical.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace gcrystal;

namespace {

const std::vector<std::pair<int, int>> shapes{{2, 1}, {3, 1}, {3, 2}, {4, 2}, {5, 2}, {5, 3}};

} // namespace

TEST(Isomorphism, Examples)
{
    TropPoint x{Shape{2, 1}};
    x.set(1, 1, 3);
    x.set(1, 2, 7);
    EXPECT_EQ(omega(x), (BElement{Shape{2, 1}, {3, 4, -7}}));
    EXPECT_EQ(omega_inv(omega(x)), x);

    TropPoint y{Shape{3, 2}};
    y.set(2, 1, 1);
    y.set(2, 2, 2);
    y.set(1, 2, 3);
    y.set(1, 3, 4);
    EXPECT_EQ(omega(y), (BElement{Shape{3, 2}, {1, 1, -2, 3, 1, -4}}));
    EXPECT_EQ(omega(TropPoint{Shape(5, 3)}), BElement{Shape(5, 3)});
    EXPECT_EQ(omega_inv(BElement{Shape(5, 3)}), TropPoint{Shape(5, 3)});
}

TEST(Isomorphism, RoundTrip)
{
    Sampler rng{101};
    for (const auto& [n, k] : shapes) {
        const Shape s{n, k};
        for (int t = 0; t < 20; ++t) {
            const auto x = sample_point<TropPoint>(s, rng, 10);
            const auto b = sample_belement(s, rng, 10);
            EXPECT_EQ(omega_inv(omega(x)), x);
            EXPECT_EQ(omega(omega_inv(b)), b);
        }
    }
}

TEST(PathCorrespondence, Examples)
{
    EXPECT_EQ(pi_correspondence(Shape{2, 1}, {1, 3}).points, (std::vector<Coord>{{1, 1}, {1, 2}}));
    EXPECT_EQ(pi_correspondence(Shape{3, 2}, {1, 2, 4}).points, (std::vector<Coord>{{2, 1}, {1, 2}, {1, 3}}));
}

TEST(PathCorrespondence, Bijective)
{
    for (int n = 2; n <= 7; ++n) {
        for (int k = 1; k <= n; ++k) {
            const Shape s{n, k};
            auto paths = oracle::full_paths(s, Side::L1);
            std::vector<Path> images;
            for (const auto& c : enumerate_ctuples(s)) {
                images.push_back(pi_correspondence(s, c));
            }
            auto less = [](const Path& a, const Path& b) { return a.points < b.points; };
            std::sort(paths.begin(), paths.end(), less);
            std::sort(images.begin(), images.end(), less);
            EXPECT_EQ(images, paths);
        }
    }
}

TEST(PathCorrespondence, DeltaIsNegatedPathWeight)
{
    Sampler rng{103};
    for (const auto& [n, k] : shapes) {
        const Shape s{n, k};
        const auto x = sample_point<TropPoint>(s, rng, 10);
        const auto b = omega(x);
        for (const auto& c : enumerate_ctuples(s)) {
            EXPECT_EQ(delta(b, c), -*path_weight(x, pi_correspondence(s, c)));
        }
    }
}

TEST(Isomorphism, IntertwinesCrystalData)
{
    Sampler rng{107};
    for (const auto& [n, k] : shapes) {
        const Shape s{n, k};
        for (int t = 0; t < 20; ++t) {
            const auto x = sample_point<TropPoint>(s, rng, 10);
            const auto b = omega(x);
            for (int i = 0; i <= n; ++i) {
                EXPECT_EQ(trop_wt(x, i), b_wt(b, i)) << "i=" << i;
                EXPECT_EQ(trop_eps(x, i), eps_phi(b, i).eps) << "i=" << i;
                for (int d = -3; d <= 3; ++d) {
                    EXPECT_EQ(omega(trop_e(x, i, d)), kashiwara_power(b, i, d)) << "i=" << i << " d=" << d;
                }
                EXPECT_EQ(omega(trop_weyl(x, i)), weyl_s_tilde(b, i));
            }
        }
    }
}
