#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace flagheight;
using flagheight::testing::closure_order;

namespace {

RationalVec q(std::initializer_list<long> v) {
    RationalVec out;
    for (long x : v) out.emplace_back(x);
    return out;
}

bool has_violation(const std::vector<Violation>& v, ErrorKind k, int index) {
    for (const auto& x : v)
        if (x.kind == k && x.index == index) return true;
    return false;
}

}  // namespace

TEST(RootDatum, CartanA1AndGL4) {
    auto a1 = build_root_datum(Family::A, 1);
    EXPECT_EQ(a1.cartan(), (IntMatrix{{2}}));
    auto gl4 = build_root_datum(Family::GL, 4);
    EXPECT_EQ(gl4.num_simple(), 3);
    EXPECT_EQ(gl4.coord_dim(), 4);
    EXPECT_EQ(gl4.cartan(), (IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
}

TEST(RootDatum, CartanB2OrientationAndClosure) {
    auto b2 = build_root_datum(Family::B, 2);
    // alpha_1 long: <alpha_2^vee, alpha_1> = -2
    EXPECT_EQ(b2.cartan(), (IntMatrix{{2, -1}, {-2, 2}}));
    EXPECT_EQ(closure_order(b2), 8u);
    EXPECT_EQ(b2.positive_roots().size(), 4u);
}

TEST(RootDatum, CartanC2IsTransposeOfB2) {
    auto c2 = build_root_datum(Family::C, 2);
    EXPECT_EQ(c2.cartan(), (IntMatrix{{2, -2}, {-1, 2}}));
}

TEST(RootDatum, PositiveRootCounts) {
    const std::vector<std::tuple<Family, int, std::size_t>> cases{
        {Family::A, 3, 6},  {Family::B, 3, 9},  {Family::C, 3, 9},   {Family::D, 4, 12},
        {Family::G2, 2, 6}, {Family::F4, 4, 24}, {Family::E6, 6, 36}, {Family::E7, 7, 63},
        {Family::GL, 4, 6}};
    for (auto [f, r, n] : cases) EXPECT_EQ(build_root_datum(f, r).positive_roots().size(), n) << family_name(f) << r;
}

TEST(RootDatum, ClosedFormOrderMatchesBruteClosure) {
    for (auto [f, r] : std::vector<std::pair<Family, int>>{
             {Family::A, 2}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::G2, 2}, {Family::GL, 4}}) {
        auto d = build_root_datum(f, r);
        EXPECT_EQ(d.weyl_order(), closure_order(d)) << d.name();
    }
}

TEST(RootDatum, RankConstraints) {
    EXPECT_THROW(build_root_datum(Family::B, 1), Error);
    EXPECT_THROW(build_root_datum(Family::D, 2), Error);
    EXPECT_THROW(build_root_datum(Family::GL, 1), Error);
    try {
        build_root_datum(Family::E8, 8);
        FAIL() << "E8 must be rejected";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedType);
    }
    EXPECT_THROW(parse_family("H3"), Error);
}

TEST(RootDatum, PairingExamples) {
    auto gl4 = build_root_datum(Family::GL, 4);
    CochVec c{q({3, 1, 0, -2}), {}};
    EXPECT_EQ(pair(c, WeightVec{q({0, 0, 1, 1})}), Rational(-2));
    EXPECT_EQ(coroot_pairing(gl4, 2, WeightVec{q({0, 0, 1, 1})}), Rational(-1));
    EXPECT_EQ(root_pairing(gl4, c, 1), Rational(2));
    auto gl2 = build_root_datum(Family::GL, 2);
    EXPECT_EQ(coroot_pairing(gl2, 1, WeightVec{q({0, 1})}), Rational(-1));
}

TEST(RootDatum, PairingIsBilinear) {
    RationalVec c{Rational(1, 2), Rational(-3), Rational(2, 3)};
    WeightVec a{q({1, 2, 3})}, b{q({-1, 0, 5})};
    WeightVec sum{{a.coords[0] + b.coords[0], a.coords[1] + b.coords[1], a.coords[2] + b.coords[2]}};
    EXPECT_EQ(pair(c, sum), pair(c, a) + pair(c, b));
}

TEST(RootDatum, DimensionMismatch) {
    auto gl4 = build_root_datum(Family::GL, 4);
    try {
        validate_antidominant(gl4, WeightVec{q({0, 1, 2})}, {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
    EXPECT_THROW(validate_antidominant(gl4, WeightVec{q({0, 1, 2, 3})}, {4}), Error);
}

TEST(RootDatum, AntidominanceClassifiesEveryIndex) {
    auto gl4 = build_root_datum(Family::GL, 4);
    EXPECT_TRUE(validate_antidominant(gl4, WeightVec{q({0, 0, 1, 1})}, {1, 3}).empty());
    // (0,1,0,1) with Delta_P = {1,3}: index 1 pairs to -1 (in Delta_P), 2 to +1, 3 to -1
    auto v = validate_antidominant(gl4, WeightVec{q({0, 1, 0, 1})}, {1, 3});
    EXPECT_TRUE(has_violation(v, ErrorKind::NotACharacterOfP, 1));
    EXPECT_TRUE(has_violation(v, ErrorKind::NotStrictlyAntidominant, 2));
    EXPECT_TRUE(has_violation(v, ErrorKind::NotACharacterOfP, 3));
    EXPECT_EQ(v.size(), 3u);
    try {
        raise_if_any(v, "lambda");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.details().size(), 3u);
    }
    // simple family: fundamental-weight coordinates
    auto b2 = build_root_datum(Family::B, 2);
    EXPECT_TRUE(validate_antidominant(b2, WeightVec{q({-1, -2})}, {}).empty());
    EXPECT_TRUE(has_violation(validate_antidominant(b2, WeightVec{q({0, -2})}, {}), ErrorKind::NotStrictlyAntidominant, 1));
}

TEST(RootDatum, CanonicalSlopeClassification) {
    auto gl4 = build_root_datum(Family::GL, 4);
    EXPECT_TRUE(validate_canonical_slope(gl4, CochVec{q({3, 1, 0, -2}), {}}).empty());
    EXPECT_TRUE(validate_canonical_slope(gl4, CochVec{q({1, 1, 0, 0}), {1, 3}}).empty());
    auto v = validate_canonical_slope(gl4, CochVec{q({1, 2, 2, 0}), {1}});
    EXPECT_TRUE(has_violation(v, ErrorKind::SlopeNotLeviTrivial, 1));
    EXPECT_TRUE(has_violation(v, ErrorKind::SlopeNotStrictlyDecreasingAcrossBlocks, 2));
    EXPECT_EQ(v.size(), 2u);
}

TEST(RootDatum, FlagDimension) {
    auto gl4 = build_root_datum(Family::GL, 4);
    EXPECT_EQ(gl4.flag_dimension({1, 3}), 4);
    EXPECT_EQ(gl4.flag_dimension({}), 6);
    EXPECT_EQ(gl4.flag_dimension({1, 2, 3}), 0);
    EXPECT_EQ(build_root_datum(Family::B, 2).flag_dimension({1}), 3);
}

TEST(RootDatum, Deterministic) {
    auto a = build_root_datum(Family::F4, 4), b = build_root_datum(Family::F4, 4);
    EXPECT_EQ(a.cartan(), b.cartan());
    EXPECT_EQ(a.positive_roots(), b.positive_roots());
}
