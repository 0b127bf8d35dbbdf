#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace flagheight;
namespace ft = flagheight::testing;

namespace {

struct Gr24 {
    WeylGroup g = WeylGroup::enumerate(build_root_datum(Family::GL, 4));
    CochVec mu{{3, 1, 0, -2}, {}};
    GrassmannSetup s = grassmann_setup(4, 2);
    ConeAnalyzer cones{g, mu, s.parabolic};
    PolarizedClass cls(const Rational& t) const { return {s.lambda, t}; }
};

}  // namespace

TEST(Cones, RootFunctional) {
    Gr24 x;
    EXPECT_EQ(x.cones.functional_root(x.cls(7), 2), Rational(-1));
    try {
        x.cones.functional_root(x.cls(0), 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IndexInLevi);
    }
    EXPECT_EQ(x.cones.functional_root(PolarizedClass{WeightVec{{0, 0, 0, 0}}, 1}, 2), Rational(0));
    EXPECT_EQ(x.cones.functional_root(PolarizedClass{WeightVec{{0, 0, 3, 3}}, 0}, 2), Rational(-3));
    EXPECT_THROW(x.cones.functional_root(PolarizedClass{WeightVec{{0, 1, 0, 1}}, 0}, 2), Error);
}

TEST(Cones, WeylFunctional) {
    Gr24 x;
    const auto i0 = x.g.from_word({2, 1, 3, 2});
    EXPECT_EQ(x.cones.functional_weyl(x.cls(Rational(1, 2)), i0), Rational(7, 2));
    // the fiber class f = (lambda 0, t -1)
    EXPECT_EQ(x.cones.functional_weyl(PolarizedClass{WeightVec{{0, 0, 0, 0}}, -1}, i0), Rational(1));
    // constant on double cosets (Delta_Q empty here, so only right W_P moves)
    EXPECT_EQ(x.cones.functional_weyl(x.cls(0), x.g.right_mul(i0, 1)), x.cones.functional_weyl(x.cls(0), i0));
}

TEST(Cones, BaseLocus) {
    Gr24 x;
    EXPECT_TRUE(x.cones.augmented_base_locus(x.cls(-3)).cells.included_ids.empty());
    EXPECT_FALSE(x.cones.augmented_base_locus(x.cls(-3)).codimension);
    auto b = x.cones.augmented_base_locus(x.cls(1));
    EXPECT_EQ(b.cells.included_ids.size(), 4u);
    EXPECT_EQ(b.cells.dimension, 2);
    EXPECT_EQ(b.codimension, 2);
    auto all = x.cones.augmented_base_locus(x.cls(4));
    EXPECT_TRUE(all.cells.is_all);
    EXPECT_EQ(all.codimension, 0);
    auto notbig = x.cones.augmented_base_locus(PolarizedClass{WeightVec{{0, 0, 0, 0}}, -5});
    EXPECT_TRUE(notbig.cells.is_all);
    EXPECT_FALSE(notbig.reason.empty());
}

TEST(Cones, MovableExtremes) {
    Gr24 x;
    const int d = x.cones.dim();
    ASSERT_EQ(d, 4);
    ASSERT_EQ(x.cones.max_k(), d + 1);
    for (long num = -10; num <= 12; ++num) {
        const Rational t = frac(num, 2);
        EXPECT_EQ(x.cones.movable_check(x.cls(t), 1), t < 4) << to_string(t);  // big
        // B_+ may still contain the zero-dimensional cell: points of the fibers over a section
        EXPECT_EQ(x.cones.movable_check(x.cls(t), d), t < -1) << to_string(t);
        EXPECT_EQ(x.cones.movable_check(x.cls(t), d + 1), t < -2) << to_string(t);  // ample
    }
    // -det_2 pairs positively with alpha_2^vee: never movable
    PolarizedClass rev{WeightVec{{0, 0, -1, -1}}, -100};
    for (int k = 1; k <= d + 1; ++k) EXPECT_FALSE(x.cones.movable_check(rev, k));
    EXPECT_EQ(x.cones.movable_index(rev).movable_index, 0);
    EXPECT_THROW(x.cones.movable_check(x.cls(0), 0), Error);
    EXPECT_THROW(x.cones.movable_check(x.cls(0), 6), Error);
}

TEST(Cones, MovableIndexAndBoundary) {
    Gr24 x;
    auto rep = x.cones.movable_index(x.cls(0));
    // e = (4, 3, 1, -1, -2): e_k > 0 for k <= 3
    EXPECT_EQ(rep.movable_index, 3);
    EXPECT_TRUE(rep.is_big);
    EXPECT_TRUE(rep.boundary_of.empty());
    auto at = x.cones.movable_index(x.cls(1));
    EXPECT_EQ(at.movable_index, 2);
    EXPECT_EQ(at.boundary_of, (std::vector<int>{3}));
    EXPECT_EQ(x.cones.movable_index(x.cls(-3)).movable_index, 5);  // ample
    auto top = x.cones.movable_index(x.cls(4));
    EXPECT_FALSE(top.is_big);
    EXPECT_EQ(top.boundary_of, (std::vector<int>{1}));
}

TEST(Cones, MovableIffZhangMinimumAboveT) {
    std::mt19937 rng(61);
    for (const auto& k : ft::type_a_suite(67, 1)) {
        auto g = WeylGroup::enumerate(build_root_datum(Family::GL, k.n));
        ConeAnalyzer cones(g, k.slope, k.parabolic);
        auto e = zhang_minima(successive_minima(g, k.slope, k.lambda, k.parabolic));
        std::vector<Rational> ts;
        for (const auto& x : e) {
            ts.push_back(x);
            ts.push_back(x - Rational(1, 12));
            ts.push_back(x + Rational(1, 12));
        }
        for (const auto& t : ts) {
            PolarizedClass cls{k.lambda, t};
            int expected_index = 0;
            for (int kk = 1; kk <= cones.max_k(); ++kk) {
                const bool in = cones.movable_check(cls, kk);
                EXPECT_EQ(in, e[kk - 1] > t);
                if (in) expected_index = kk;
            }
            auto rep = cones.movable_index(cls);
            EXPECT_EQ(rep.movable_index, expected_index);
            for (int kk : rep.boundary_of) EXPECT_EQ(e[kk - 1], t);
            for (int kk = 1; kk <= cones.max_k(); ++kk) {
                if (e[kk - 1] == t) {
                    EXPECT_TRUE(std::count(rep.boundary_of.begin(), rep.boundary_of.end(), kk));
                }
            }
        }
    }
}

TEST(Cones, MonotoneInT) {
    Gr24 x;
    int prev = x.cones.max_k();
    for (long num = -30; num <= 30; ++num) {
        const int idx = x.cones.movable_index(x.cls(frac(num, 6))).movable_index;
        EXPECT_LE(idx, prev);
        prev = idx;
    }
}

TEST(Cones, FiltrationVersusBaseLocus) {
    Gr24 x;
    auto table = successive_minima(x.g, x.mu, x.s.lambda, x.s.parabolic);
    for (const auto& e : table.entries) {
        auto z = height_filtration(table, e.zeta);
        auto b = augmented_base_locus(table, e.zeta);
        EXPECT_FALSE(std::count(z.included_ids.begin(), z.included_ids.end(), e.coset_id));
        EXPECT_TRUE(std::count(b.included_ids.begin(), b.included_ids.end(), e.coset_id));
    }
}

TEST(Cones, GrassmannRays) {
    auto rays = grassmann_big_cone_rays(4, 2, HNBlocks({{1, 3}, {1, 1}, {1, 0}, {1, -2}}));
    EXPECT_EQ(rays.fiber.lambda_coeff, Rational(0));
    EXPECT_EQ(rays.fiber.t, Rational(-1));
    EXPECT_EQ(rays.essential.lambda_coeff, Rational(1));
    EXPECT_EQ(rays.essential.t, Rational(4));
    EXPECT_TRUE(rays.strictly_inside(1, 3));
    EXPECT_FALSE(rays.strictly_inside(1, 4));
    EXPECT_FALSE(rays.strictly_inside(0, -1));
    auto semi = grassmann_big_cone_rays(3, 1, HNBlocks({{3, Rational(2, 3)}}));
    EXPECT_EQ(semi.essential.t, Rational(2, 3));
    EXPECT_EQ(grassmann_big_cone_rays(2, 1, HNBlocks({{1, 1}, {1, 0}})).essential.t, Rational(1));
    EXPECT_THROW(grassmann_big_cone_rays(4, 2, HNBlocks({{1, 1}, {1, 0}})), Error);
}

TEST(Cones, GrassmannRaysAgreeWithMovableCheck) {
    std::mt19937 rng(71);
    for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 2}, {5, 2}}) {
        auto blocks = ft::random_blocks(rng, n);
        auto rays = grassmann_big_cone_rays(n, r, blocks);
        auto g = WeylGroup::enumerate(build_root_datum(Family::GL, n));
        auto s = grassmann_setup(n, r);
        ConeAnalyzer cones(g, hn_to_slope_vector(blocks), s.parabolic);
        for (int a = 1; a <= 3; ++a)
            for (int dt = -6; dt <= 6; ++dt) {
                WeightVec l = s.lambda;
                for (auto& q : l.coords) q *= a;
                const Rational t = a * rays.essential.t + frac(dt, 4);
                EXPECT_EQ(cones.movable_check({l, t}, 1), rays.strictly_inside(a, t));
            }
    }
}
