#include <cmath>

#include <gtest/gtest.h>

#include <pinchext/errors.hpp>
#include <pinchext/families.hpp>

#include "generators.hpp"

using namespace pinchext;
using pinchext::testing::Rng;

namespace {

std::vector<DiscFunction> sequence(int count, const std::function<DiscFunction(int)>& make) {
    std::vector<DiscFunction> out;
    for (int k = 1; k <= count; ++k) out.push_back(make(k));
    return out;
}

const DiscFunction zero = DiscFunction::constant(0.0);

} // namespace

TEST(TestSequence, LinesThroughOrigin) {
    const auto r = validate_test_sequence(sequence(12, [](int k) { return DiscFunction::monomial(1.0 / k, 1); }), zero, 10);
    EXPECT_TRUE(r.is_test);
    EXPECT_EQ(r.N, 1);
    for (const auto& c : r.curves) EXPECT_EQ(c.winding, 1);
    EXPECT_FALSE(r.first_failure.has_value());
}

TEST(TestSequence, UnboundedWindings) {
    const auto r = validate_test_sequence(
        sequence(12, [](int k) { return DiscFunction::monomial(std::pow(2.0 / 3.0, k), k); }), zero, 10);
    EXPECT_FALSE(r.is_test);
    for (std::size_t i = 0; i < r.curves.size(); ++i) EXPECT_EQ(r.curves[i].winding, static_cast<int>(i) + 1);
    ASSERT_TRUE(r.first_failure.has_value());
    EXPECT_EQ(*r.first_failure, 10u);
}

TEST(TestSequence, QuadraticPlusSmallHighPower) {
    const auto r = validate_test_sequence(sequence(12,
                                                   [](int k) {
                                                       cvec a(static_cast<std::size_t>(std::max(k, 2)) + 1, 0.0);
                                                       a[2] += 1.0 / k;
                                                       a[static_cast<std::size_t>(k)] += std::exp(-double(k));
                                                       return DiscFunction(a);
                                                   }),
                                          zero, 10);
    EXPECT_TRUE(r.is_test);
    for (const auto& c : r.curves) EXPECT_EQ(c.winding, 2);
}

TEST(TestSequence, VanishingDifferenceIsAFailure) {
    auto curves = sequence(4, [](int k) { return DiscFunction::monomial(1.0 / k, 1); });
    curves.push_back(DiscFunction({-0.5, 0.5}));
    const auto r = validate_test_sequence(curves, zero, 10);
    EXPECT_FALSE(r.is_test);
    EXPECT_FALSE(r.curves.back().winding.has_value());
    EXPECT_FALSE(r.curves.back().failure.empty());
}

TEST(TestSequence, NeedsThreeCurves) {
    EXPECT_THROW(validate_test_sequence({zero, zero}, zero, 10), DomainError);
}

TEST(TestFamily, HorizontalCurves) {
    const auto r = validate_test_family({DiscFunction::constant(0.1), DiscFunction::constant(0.4)}, 10, 0.25);
    EXPECT_TRUE(r.all_witnessed);
    ASSERT_EQ(r.pairs.size(), 1u);
    EXPECT_EQ(r.pairs[0].winding, 0);
    EXPECT_TRUE(r.pairs[0].radius.has_value());
}

TEST(TestFamily, DifferenceVanishingOnUnitCircle) {
    const auto r = validate_test_family({DiscFunction::monomial(1.0, 1), DiscFunction::monomial(1.0, 3)}, 10, 0.25);
    ASSERT_TRUE(r.all_witnessed);
    ASSERT_TRUE(r.pairs[0].radius.has_value());
    EXPECT_GT(std::abs(*r.pairs[0].radius - 1.0), 1e-6);
    EXPECT_EQ(r.pairs[0].winding, *r.pairs[0].radius < 1.0 ? 1 : 3);
}

TEST(TestFamily, Preconditions) {
    EXPECT_THROW(validate_test_family({zero}, 10, 0.25), DomainError);
    EXPECT_THROW(validate_test_family({zero, DiscFunction::constant(0.1)}, 10, 1.5), DomainError);
}

TEST(TestFamily, ScanRadiiStayInRing) {
    const auto r = scan_radii(0.25, 32);
    ASSERT_EQ(r.size(), 32u);
    for (double x : r) {
        EXPECT_GT(x, 1.0 - 0.125);
        EXPECT_LT(x, 1.0 + 0.125);
    }
}

TEST(GeneralPosition, LinesFailAtTheirCommonZero) {
    const auto curves = sequence(12, [](int k) { return DiscFunction::monomial(1.0 / k, 1); });
    const auto r = general_position_check(curves, zero, {0.0, 0.5});
    ASSERT_EQ(r.probes.size(), 2u);
    EXPECT_FALSE(r.probes[0].passes);
    EXPECT_TRUE(r.probes[1].passes);
    EXPECT_EQ(r.probes[1].avoiding.size(), curves.size());
}

TEST(GeneralPosition, HorizontalCurvesPassEverywhere) {
    const auto curves = sequence(12, [](int k) { return DiscFunction::constant(1.0 / k); });
    const auto r = general_position_check(curves, zero, {0.0, 0.5, cplx{0.0, -0.7}});
    for (const auto& p : r.probes) EXPECT_TRUE(p.passes);
    EXPECT_TRUE(r.triples.empty());
}

TEST(GeneralPosition, ThreeLinesMeetAtOrigin) {
    const std::vector<DiscFunction> curves{DiscFunction::monomial(0.2, 1), DiscFunction::monomial(0.5, 1),
                                           DiscFunction::monomial(cplx{0.0, 0.7}, 1)};
    const auto r = general_position_check(curves, zero, {});
    ASSERT_EQ(r.triples.size(), 1u);
    EXPECT_LT(std::abs(r.triples[0].lambda), 1e-12);
    EXPECT_LT(std::abs(r.triples[0].z), 1e-12);
}

TEST(WindingProfile, Examples) {
    const cvec grid{0.1, 0.2, 0.3};
    const auto a = winding_profile([](cplx al) { return DiscFunction::monomial(al, 2); }, grid, 0.0);
    EXPECT_TRUE(a.constant);
    for (int w : a.windings) EXPECT_EQ(w, 2);
    const auto b = winding_profile([](cplx al) { return DiscFunction::constant(al); }, grid, 0.0);
    EXPECT_TRUE(b.constant);
    for (int w : b.windings) EXPECT_EQ(w, 0);
    const auto c = winding_profile([](cplx al) { return DiscFunction({-0.5 * al, al}); }, grid, 0.0);
    EXPECT_TRUE(c.constant);
    for (int w : c.windings) EXPECT_EQ(w, 1);
}

TEST(WindingProfile, Preconditions) {
    auto fam = [](cplx al) { return DiscFunction::monomial(al, 1); };
    EXPECT_THROW(winding_profile(fam, {}, 0.0), DomainError);
    EXPECT_THROW(winding_profile(fam, {0.0, 0.1}, 0.0), DomainError);
}

TEST(Vanishing, NearCircle) {
    EXPECT_TRUE(vanishes_near_circle(DiscFunction({-0.5, 1.0}), 0.5));
    EXPECT_FALSE(vanishes_near_circle(DiscFunction({-0.5, 1.0}), 0.6));
}

class FamilyProperties : public ::testing::TestWithParam<int> {};

TEST_P(FamilyProperties, SequenceReportIsTranslationInvariant) {
    Rng rng(4000 + GetParam());
    std::vector<DiscFunction> curves;
    for (int k = 0; k < 6; ++k) curves.push_back(pinchext::testing::random_curve(rng, 0.0) * 0.5);
    const DiscFunction psi = pinchext::testing::random_curve(rng, pinchext::testing::polar_uniform(rng, 0.0, 0.3)) * 0.4;
    std::vector<DiscFunction> moved;
    for (const auto& c : curves) moved.push_back(c + psi);
    const auto a = validate_test_sequence(curves, zero, 10);
    const auto b = validate_test_sequence(moved, zero + psi, 10);
    EXPECT_EQ(a.is_test, b.is_test);
    EXPECT_EQ(a.N, b.N);
    ASSERT_EQ(a.curves.size(), b.curves.size());
    for (std::size_t i = 0; i < a.curves.size(); ++i) EXPECT_EQ(a.curves[i].winding, b.curves[i].winding);
}

TEST_P(FamilyProperties, WindingConstantOnPolynomialFamily) {
    Rng rng(5000 + GetParam());
    const DiscFunction q0 = pinchext::testing::random_curve(rng, 0.0) * 0.5;
    const DiscFunction q1 = pinchext::testing::random_curve(rng, 0.0) * 0.3;
    const DiscFunction q2 = pinchext::testing::random_curve(rng, 0.0) * 0.2;
    auto fam = [&](cplx al) { return q0 + q1 * al + q2 * (al * al); };
    cvec alphas;
    for (int i = 0; i < 8; ++i) alphas.push_back(pinchext::testing::polar_uniform(rng, 0.002, 0.02));
    const auto p = winding_profile(fam, alphas, 0.0);
    EXPECT_TRUE(p.constant);
}

INSTANTIATE_TEST_SUITE_P(Random, FamilyProperties, ::testing::Range(0, 30));
