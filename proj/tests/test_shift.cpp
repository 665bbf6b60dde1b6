#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace irrdec;
using irrdec::oracle::rv;
using irrdec::oracle::Rng;

namespace {

Rational q(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }

Triangulation segment_cone() { return placing_triangulation(2, {IntVector{2, 0}, IntVector{2, 1}}); }

ShiftSpec spec_with(const RatVector& s, ShiftDirection dir = ShiftDirection::outward) {
    ShiftSpec spec;
    spec.base = RatVector(s.dim());
    spec.direction = dir;
    spec.s = s;
    return spec;
}

std::vector<long long> fill(std::size_t d, long long v) { return std::vector<long long>(d, v); }

}  // namespace

TEST(ChooseShift, Examples) {
    auto t = segment_cone();
    auto out = choose_shift(t, RatVector(2), ShiftDirection::outward);
    EXPECT_EQ(out.spec.s, rv({q(-2, 5), q(-1, 10)}));
    EXPECT_EQ(out.spec.epsilon, q(1, 10));
    EXPECT_EQ(out.spec.interior_direction, (IntVector{4, 1}));
    for (const auto& c : out.certificate.boundary_checks) {
        if (c.normal == IntVector{0, 1}) {
            EXPECT_EQ(c.at_shift, q(-1, 10));
        }
        if (c.normal == IntVector{1, -2}) {
            EXPECT_EQ(c.at_shift, q(-1, 5));
        }
        EXPECT_EQ(c.at_base, q(0));
    }
    EXPECT_EQ(out.certificate.boundary_checks.size(), 2u);

    auto ray = placing_triangulation(1, {IntVector{2}});
    auto r = choose_shift(ray, RatVector(1), ShiftDirection::outward);
    EXPECT_EQ(r.spec.s, rv({q(-1, 5)}));
    EXPECT_EQ(r.spec.interior_direction, (IntVector{2}));
    ASSERT_EQ(r.certificate.boundary_checks.size(), 1u);
    EXPECT_EQ(r.certificate.boundary_checks[0].at_shift, q(-1, 5));

    auto in = choose_shift(t, RatVector(2), ShiftDirection::inward);
    EXPECT_EQ(in.spec.s, rv({q(2, 5), q(1, 10)}));
    for (const auto& c : in.certificate.boundary_checks) {
        if (c.normal == IntVector{0, 1}) {
            EXPECT_EQ(c.at_shift, q(1, 10));
        }
        if (c.normal == IntVector{1, -2}) {
            EXPECT_EQ(c.at_shift, q(1, 5));
        }
    }
}

TEST(VerifyShift, Examples) {
    auto t = segment_cone();
    auto ok = choose_shift(t, RatVector(2), ShiftDirection::outward);
    EXPECT_TRUE(verify_shift(t, ok.spec).pass);

    auto integral = verify_shift(t, spec_with(rv({q(-1), q(0)})));
    EXPECT_FALSE(integral.pass);
    EXPECT_NE(integral.violation.find("(0,1)"), std::string::npos) << integral.violation;
    EXPECT_NE(integral.violation.find("is an integer"), std::string::npos);

    auto crossed = verify_shift(t, spec_with(rv({q(-3), q(-1, 10)})));
    EXPECT_FALSE(crossed.pass);
    EXPECT_NE(crossed.violation.find("(1,-2)"), std::string::npos) << crossed.violation;
    EXPECT_NE(crossed.violation.find("-14/5"), std::string::npos);
    EXPECT_NE(crossed.violation.find("strictly between"), std::string::npos);
    // the report still lists every pairing
    EXPECT_EQ(crossed.certificate.boundary_checks.size(), 2u);
    EXPECT_EQ(crossed.certificate.wall_checks.size(), 2u);
}

TEST(VerifyShift, WrongSideAndWallFailures) {
    auto t = segment_cone();
    auto inward = verify_shift(t, spec_with(rv({q(-2, 5), q(-1, 10)}), ShiftDirection::inward));
    EXPECT_FALSE(inward.pass);
    EXPECT_NE(inward.violation.find("not above"), std::string::npos) << inward.violation;

    // square cone: s clears every boundary facet but pairs to 0 with the
    // diagonal wall (1,-1,-1)
    auto sq = placing_triangulation(cone_over(oracle::unit_cube(2), 1));
    auto r = verify_shift(sq, spec_with(rv({q(-1, 2), q(-1, 4), q(-1, 4)})));
    EXPECT_FALSE(r.pass);
    EXPECT_NE(r.violation.find("wall <(1,-1,-1),s> = 0"), std::string::npos) << r.violation;
}

TEST(ChooseShift, PerturbsWhenDirectionIsOrthogonalToAWall) {
    // w = (2,2) is orthogonal to the interior wall through (1,1)
    auto t = placing_triangulation(2, {IntVector{1, 0}, IntVector{1, 1}, IntVector{0, 1}});
    ASSERT_EQ(t.cells.size(), 2u);
    auto a = choose_shift(t, RatVector(2), ShiftDirection::outward);
    EXPECT_TRUE(verify_shift(t, a.spec).pass);
    EXPECT_NE(a.spec.interior_direction, (IntVector{2, 2}));
    auto b = choose_shift(t, RatVector(2), ShiftDirection::outward);
    EXPECT_EQ(a.spec.s, b.spec.s);

    ShiftOptions none;
    none.max_perturbations = 0;
    try {
        choose_shift(t, RatVector(2), ShiftDirection::outward, none);
        FAIL() << "expected ShiftSearchError";
    } catch (const ShiftSearchError& e) {
        EXPECT_NE(std::string(e.what()).find("orthogonal"), std::string::npos);
    }
}

TEST(ChooseShift, Errors) {
    auto t = segment_cone();
    EXPECT_THROW(choose_shift(t, RatVector(3), ShiftDirection::outward), DimensionError);
    ShiftOptions zero;
    zero.max_shrink_steps = 0;
    EXPECT_THROW(choose_shift(t, RatVector(2), ShiftDirection::outward, zero), ShiftSearchError);
}

TEST(ChooseShift, GeneralBasePoint) {
    auto t = segment_cone();
    RatVector v = rv({q(1, 3), q(-1, 2)});
    for (auto dir : {ShiftDirection::outward, ShiftDirection::inward}) {
        auto c = choose_shift(t, v, dir);
        EXPECT_TRUE(verify_shift(t, c.spec).pass);
        EXPECT_NE(c.spec.s, v);
        auto sys = oracle::cone_system(t.parent);
        auto res = oracle::check_shift_soundness(sys, t, c.spec, fill(2, -8), fill(2, 8));
        EXPECT_TRUE(res.ok) << res.failure;
    }
}

TEST(ChooseShift, DeterministicAndExtraShrinkStillCertified) {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        Cone c = oracle::random_pointed_cone(rng, 1 + trial % 3, 2 + trial % 3);
        auto t = placing_triangulation(c);
        for (auto dir : {ShiftDirection::outward, ShiftDirection::inward}) {
            auto a = choose_shift(t, RatVector(c.ambient_dim), dir);
            auto b = choose_shift(t, RatVector(c.ambient_dim), dir);
            EXPECT_EQ(a.spec.s, b.spec.s);
            ShiftOptions extra;
            extra.extra_shrink_steps = 1;
            auto e = choose_shift(t, RatVector(c.ambient_dim), dir, extra);
            EXPECT_TRUE(verify_shift(t, e.spec).pass);
            EXPECT_LT(e.spec.epsilon, a.spec.epsilon);
        }
    }
}

TEST(ShiftSoundness, RandomConesBoxOracleProperty) {
    Rng rng(42);
    std::size_t specs = 0;
    for (int trial = 0; trial < 24; ++trial) {
        std::size_t d = 1 + trial % 3;
        Cone c = oracle::random_pointed_cone(rng, d, d + trial % 3);
        auto t = placing_triangulation(c);
        auto sys = oracle::cone_system(c);
        std::vector<RatVector> bases{RatVector(d)};
        for (int k = 0; k < 2; ++k) {
            RatVector v(d);
            for (std::size_t i = 0; i < d; ++i) v[i] = oracle::random_rational(rng, 2, 4);
            bases.push_back(v);
        }
        const long long r = d == 3 ? 6 : 10;
        for (const auto& base : bases)
            for (auto dir : {ShiftDirection::outward, ShiftDirection::inward}) {
                auto shift = choose_shift(t, base, dir);
                auto res = oracle::check_shift_soundness(sys, t, shift.spec, fill(d, -r), fill(d, r));
                EXPECT_TRUE(res.ok) << "trial " << trial << ": " << res.failure;
                ++specs;
            }
    }
    EXPECT_EQ(specs, 24u * 6u);
}

TEST(ShiftSoundness, ConesOverPolytopesBoxOracleProperty) {
    for (const auto& poly : oracle::random_corpus(43, 9)) {
        Integer p = minimal_dilation(poly);
        auto t = placing_triangulation(cone_over(poly, p));
        auto sys = oracle::cone_over_system(poly);
        auto [lo, hi] = oracle::cone_over_box(poly, p);
        for (auto dir : {ShiftDirection::outward, ShiftDirection::inward}) {
            auto shift = choose_shift(t, RatVector(poly.ambient_dim() + 1), dir);
            auto res = oracle::check_shift_soundness(sys, t, shift.spec, lo, hi);
            EXPECT_TRUE(res.ok) << res.failure;
            EXPECT_GT(res.points_checked, 0u);
        }
    }
}

TEST(ShiftSoundness, OracleDetectsABadShift) {
    // sanity check of the oracle itself: s = (1/2, 1/3) excludes the origin
    auto t = segment_cone();
    ShiftSpec bad = spec_with(rv({q(1, 2), q(1, 3)}));
    auto res = oracle::check_shift_soundness(oracle::cone_system(t.parent), t, bad, fill(2, -4), fill(2, 4));
    EXPECT_FALSE(res.ok);
}
