#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include <pinchext/errors.hpp>
#include <pinchext/rational.hpp>

#include "generators.hpp"

using namespace pinchext;
using pinchext::testing::Rng;

namespace {

CircleFunction sampled(std::function<cplx(cplx)> fn, std::size_t grid = 256) {
    return CircleFunction::sample(fn, 1.0, grid);
}

// Boundary values of a principal part, evaluated pointwise.
CircleFunction boundary_of(const RationalPart& rp, std::size_t grid) {
    return sampled([&](cplx l) { return rp(l); }, grid);
}

const Pole* nearest(const RationalPart& rp, cplx a) {
    const Pole* best = nullptr;
    for (const auto& p : rp.poles())
        if (!best || std::abs(p.a - a) < std::abs(best->a - a)) best = &p;
    return best;
}

} // namespace

TEST(EvaluateRational, Examples) {
    EXPECT_NEAR(std::abs(evaluate_rational(RationalPart({{0.0, 1, {1.0}}}), 0.5) - 2.0), 0.0, 1e-15);
    EXPECT_EQ(evaluate_rational(RationalPart(), cplx{0.3, -0.2}), cplx(0.0));
    EXPECT_NEAR(std::abs(evaluate_rational(RationalPart({{0.3, 2, {1.0, 0.0}}}), 0.8) - 4.0), 0.0, 1e-14);
}

TEST(EvaluateRational, NearPoleThrows) {
    EXPECT_THROW(evaluate_rational(RationalPart({{0.3, 1, {1.0}}}), 0.3), PoleError);
}

TEST(RationalPart, RejectsMalformedPoles) {
    EXPECT_THROW(RationalPart({{0.1, 0, {}}}), DomainError);
    EXPECT_THROW(RationalPart({{0.1, 2, {1.0}}}), DomainError);
}

TEST(RationalPart, DegreeAndScaling) {
    const RationalPart rp({{0.1, 2, {1.0, 2.0}}, {-0.4, 1, {3.0}}});
    EXPECT_EQ(rp.degree(), 3);
    const auto s = rp.scaled(cplx{0.0, 2.0});
    EXPECT_LT(std::abs(s(0.7) - cplx{0.0, 2.0} * rp(0.7)), 1e-14);
}

TEST(Blaschke, Examples) {
    EXPECT_EQ(blaschke_from_zeros({})(cplx{0.3, 0.4}), cplx(1.0));
    const auto b2 = blaschke_from_zeros({0.0, 0.0});
    for (cplx l : {cplx{0.5, 0.1}, cplx{-0.2, 0.7}}) EXPECT_LT(std::abs(b2(l) - l * l), 1e-15);
    const auto b = blaschke_from_zeros({0.5, cplx{0.0, -0.3}});
    for (int i = 0; i < 64; ++i) EXPECT_NEAR(std::abs(b(std::polar(1.0, 2.0 * pi * i / 64))), 1.0, 1e-12);
    EXPECT_LT(std::abs(b(0.5)), 1e-15);
    EXPECT_THROW(blaschke_from_zeros({1.2}), DomainError);
}

TEST(Detect, SimplePoleAtOrigin) {
    const auto v = detect_rational(sampled([](cplx l) { return 4.0 / l; }), 10);
    ASSERT_TRUE(v.rational());
    ASSERT_EQ(v.part.poles().size(), 1u);
    EXPECT_LT(std::abs(v.part.poles()[0].a), 1e-12);
    EXPECT_EQ(v.part.poles()[0].m, 1);
    EXPECT_LT(std::abs(v.part.poles()[0].c[0] - 4.0), 1e-12);
}

TEST(Detect, SimplePoleOffOrigin) {
    const auto v = detect_rational(sampled([](cplx l) { return 1.0 / (l - 0.3); }), 10);
    ASSERT_TRUE(v.rational());
    ASSERT_EQ(v.part.degree(), 1);
    EXPECT_LT(std::abs(v.part.poles()[0].a - 0.3), 1e-8);
    EXPECT_EQ(v.method, "hankel");
}

TEST(Detect, EssentialSingularityIsNotRational) {
    // c_{-k} = 1/k!, boundary values of e^{1/lambda} - 1
    const auto v = detect_rational(sampled([](cplx l) { return std::exp(1.0 / l) - 1.0; }), 10);
    EXPECT_FALSE(v.rational());
    EXPECT_EQ(v.n_max, 10);
    EXPECT_FALSE(v.singular_values.empty());
}

TEST(Detect, SmallAmplitudeEssentialSingularity) {
    const auto v = detect_rational(sampled([](cplx l) { return std::exp(0.2 / l) - 1.0; }), 10);
    EXPECT_FALSE(v.rational());
}

TEST(Detect, ZeroFunction) {
    const auto v = detect_rational(sampled([](cplx) { return cplx{0.0, 0.0}; }), 4);
    EXPECT_TRUE(v.rational());
    EXPECT_TRUE(v.part.empty());
}

TEST(Detect, RankAboveBudget) {
    RationalPart rp({{0.1, 1, {1.0}}, {-0.3, 1, {1.0}}, {0.5, 1, {1.0}}, {cplx{0.0, 0.6}, 1, {1.0}}});
    EXPECT_TRUE(detect_rational(boundary_of(rp, 256), 4).rational());
    EXPECT_FALSE(detect_rational(boundary_of(rp, 256), 3).rational());
}

TEST(Detect, HighOrderPoleAtOrigin) {
    // a leading coefficient far below the others is still exact finite support
    const auto v = detect_rational(sampled([](cplx l) { return 1.41 / std::pow(l, 5) + 6e-5 / std::pow(l, 6); }), 10);
    ASSERT_TRUE(v.rational());
    ASSERT_EQ(v.part.poles().size(), 1u);
    EXPECT_EQ(v.part.poles()[0].m, 6);
}

TEST(Detect, RejectsInputOutsideHminus) {
    EXPECT_THROW(detect_rational(sampled([](cplx l) { return l + 1.0 / l; }), 4), DomainError);
    EXPECT_THROW(detect_rational(sampled([](cplx l) { return 1.0 / l; }), 0), DomainError);
    EXPECT_THROW(detect_rational(sampled([](cplx l) { return 1.0 / l; }), 17), DomainError);
}

TEST(Detect, UnderResolvedInputRaises) {
    EXPECT_THROW(detect_rational(sampled([](cplx l) { return 1.0 / std::pow(l, 20); }, 64), 4), BandwidthError);
}

class RationalRoundTrip : public ::testing::TestWithParam<int> {};

TEST_P(RationalRoundTrip, RecoversDegreeAndPoles) {
    Rng rng(500 + GetParam());
    for (int rep = 0; rep < 5; ++rep) {
        const RationalPart rp = pinchext::testing::random_rational_part(rng);
        const auto psi = boundary_of(rp, 1024);
        const auto v = detect_rational(psi, 8);
        ASSERT_TRUE(v.rational()) << "degree " << rp.degree();
        EXPECT_EQ(v.part.degree(), rp.degree());
        for (const auto& p : rp.poles()) {
            const Pole* q = nearest(v.part, p.a);
            ASSERT_NE(q, nullptr);
            EXPECT_LT(std::abs(q->a - p.a), 1e-6);
            EXPECT_EQ(q->m, p.m);
        }
    }
}

TEST_P(RationalRoundTrip, BlaschkeCancelsPoles) {
    Rng rng(900 + GetParam());
    const RationalPart rp = pinchext::testing::random_rational_part(rng, 6);
    const auto psi = boundary_of(rp, 1024);
    const auto v = detect_rational(psi, 8);
    ASSERT_TRUE(v.rational());
    cvec zeros;
    for (const auto& p : v.part.poles())
        for (int i = 0; i < p.m; ++i) zeros.push_back(p.a);
    const BlaschkeProduct B(zeros);
    const auto g = CircleFunction::sample([&](cplx l) { return B(l) * psi.eval(l); }, 1.0, 1024);
    EXPECT_LT(hardy_project_minus(g).sup_norm(), 1e-8 * psi.sup_norm());
    const auto rest = psi - v.part.on_circle(1.0, 1024);
    EXPECT_LT(hardy_project_minus(rest).sup_norm(), 1e-8 * psi.sup_norm());
}

TEST_P(RationalRoundTrip, ScaleEquivariant) {
    Rng rng(1300 + GetParam());
    const RationalPart rp = pinchext::testing::random_rational_part(rng, 5);
    const auto psi = boundary_of(rp, 1024);
    const cplx s = pinchext::testing::polar_uniform(rng, 1e-3, 1e3);
    const auto v = detect_rational(psi, 8);
    const auto w = detect_rational(psi * s, 8);
    ASSERT_TRUE(v.rational());
    ASSERT_TRUE(w.rational());
    ASSERT_EQ(v.part.poles().size(), w.part.poles().size());
    for (const auto& p : v.part.poles()) {
        const Pole* q = nearest(w.part, p.a);
        EXPECT_LT(std::abs(q->a - p.a), 1e-9);
        ASSERT_EQ(q->m, p.m);
        for (int k = 0; k < p.m; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            EXPECT_LT(std::abs(q->c[kk] - s * p.c[kk]), 1e-7 * std::abs(s) * std::max(1.0, std::abs(p.c[kk])));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Random, RationalRoundTrip, ::testing::Range(0, 20));
