#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace flagheight;

TEST(HNInput, SlopeVectorExample) {
    HNBlocks blocks({{2, Rational(1)}, {2, Rational(0)}});
    auto c = hn_to_slope_vector(blocks);
    EXPECT_EQ(c.coords, (RationalVec{1, 1, 0, 0}));
    EXPECT_EQ(c.levi, (SimpleSet{1, 3}));
    EXPECT_EQ(blocks.total_rank(), 4);
    EXPECT_EQ(blocks.total_degree(), Rational(2));
}

TEST(HNInput, SemistableAndSplit) {
    auto c = hn_to_slope_vector(HNBlocks({{3, Rational(1, 3)}}));
    EXPECT_EQ(c.levi, (SimpleSet{1, 2}));
    auto d = hn_to_slope_vector(HNBlocks({{1, Rational(3)}, {1, Rational(1)}, {1, Rational(0)}, {1, Rational(-2)}}));
    EXPECT_TRUE(d.levi.empty());
    EXPECT_TRUE(validate_canonical_slope(build_root_datum(Family::GL, 4), d).empty());
}

TEST(HNInput, FromDegree) {
    auto b = HNBlock::from_degree(3, Rational(2));
    EXPECT_EQ(b.slope, Rational(2, 3));
}

TEST(HNInput, Rejections) {
    try {
        HNBlocks({{1, Rational(0)}, {1, Rational(1)}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonDecreasingSlopes);
        ASSERT_EQ(e.details().size(), 1u);
        EXPECT_EQ(e.details()[0].index, 2);
    }
    EXPECT_THROW(HNBlocks({{1, Rational(1)}, {1, Rational(1)}}), Error);
    try {
        HNBlocks({{0, Rational(1)}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadRank);
    }
    EXPECT_THROW(HNBlocks(std::vector<HNBlock>{}), Error);
}

TEST(HNInput, RoundTripAndDegreeConservation) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 6)(rng);
        auto blocks = flagheight::testing::random_blocks(rng, n);
        auto c = hn_to_slope_vector(blocks);
        Rational sum = 0;
        for (const auto& x : c.coords) sum += x;
        EXPECT_EQ(sum, blocks.total_degree());
        auto back = slope_vector_to_hn(c);
        ASSERT_EQ(back.size(), blocks.size());
        for (std::size_t i = 0; i < back.size(); ++i) {
            EXPECT_EQ(back.blocks()[i].rank, blocks.blocks()[i].rank);
            EXPECT_EQ(back.blocks()[i].slope, blocks.blocks()[i].slope);
        }
        if (n >= 2) {
            EXPECT_TRUE(validate_canonical_slope(build_root_datum(Family::GL, n), c).empty());
        }
    }
}

TEST(HNInput, GrassmannSetup) {
    auto s = grassmann_setup(4, 2);
    EXPECT_EQ(s.parabolic, (SimpleSet{1, 3}));
    EXPECT_EQ(s.lambda.coords, (RationalVec{0, 0, 1, 1}));
    for (int n = 2; n <= 6; ++n)
        for (int r = 1; r < n; ++r) {
            auto g = grassmann_setup(n, r);
            auto d = build_root_datum(Family::GL, n);
            EXPECT_TRUE(validate_antidominant(d, g.lambda, g.parabolic).empty());
            EXPECT_EQ(d.flag_dimension(g.parabolic), r * (n - r));
        }
    EXPECT_THROW(grassmann_setup(4, 0), Error);
    EXPECT_THROW(grassmann_setup(4, 4), Error);
}
