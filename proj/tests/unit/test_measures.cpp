#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pairweave/freeprob.hpp"
#include "pairweave/measures.hpp"
#include "pairweave/states.hpp"

using namespace pairweave;

namespace {

MeasureSpec mu_q(Rational q, AtomMode mode = AtomMode::derived) {
    MeasureParams p;
    p.q = q;
    p.atom_mode = mode;
    return make_measure(MeasureKind::mu_q, p);
}

}  // namespace

TEST(MakeMeasure, Semicircle) {
    const auto s = make_measure(MeasureKind::semicircle);
    EXPECT_DOUBLE_EQ(s.radius, 2.0);
    EXPECT_NEAR(density_eval(s, 0.0), 1.0 / std::numbers::pi, 1e-15);
    const auto m = quad_moments(s, 4, 256);
    EXPECT_NEAR(m.moments[2], 1.0, 1e-12);
    EXPECT_NEAR(m.moments[4], 2.0, 1e-12);
}

TEST(MakeMeasure, MuQAtHalfHasNoAtoms) {
    const auto s = mu_q(Rational(-1, 2));
    EXPECT_TRUE(s.atoms.empty());
    EXPECT_NEAR(s.radius, std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(density_eval(s, 0.0), std::sqrt(2.0) / (2.0 * std::numbers::pi), 1e-15);
}

TEST(MakeMeasure, MuQAtThreeQuartersAtoms) {
    const auto d = mu_q(Rational(-3, 4));
    ASSERT_EQ(d.atoms.size(), 2U);
    EXPECT_NEAR(d.atoms[1].location, std::sqrt(4.0 / 3.0), 1e-15);
    EXPECT_NEAR(d.atoms[1].mass, 1.0 / 3.0, 1e-15);
    const auto p = mu_q(Rational(-3, 4), AtomMode::paper);
    EXPECT_NEAR(p.atoms[1].mass, 1.0 / 6.0, 1e-15);
    for (const auto& a : d.atoms) EXPECT_GT(std::abs(a.location), d.radius);
}

TEST(MakeMeasure, Rejections) {
    EXPECT_THROW(mu_q(0), std::domain_error);
    EXPECT_THROW(mu_q(-1), std::domain_error);
    EXPECT_THROW(mu_q(Rational(1, 2)), std::domain_error);
    MeasureParams p;
    p.alpha = 2;
    EXPECT_THROW(make_measure(MeasureKind::mu_alpha_beta, p), std::domain_error);
    EXPECT_THROW(quad_moments(make_measure(MeasureKind::semicircle), 4, 32), std::domain_error);
}

TEST(MakeMeasure, MuAlphaBetaIsShiftedMuQ) {
    MeasureParams p;
    p.beta2 = Rational(1, 4);
    const auto ab = make_measure(MeasureKind::mu_alpha_beta, p);
    const auto direct = mu_q(Rational(-3, 4));
    EXPECT_DOUBLE_EQ(ab.radius, direct.radius);
    EXPECT_EQ(ab.atoms.size(), 2U);
}

TEST(DensityEval, OutsideSupportIsZero) {
    for (auto kind : {MeasureKind::semicircle, MeasureKind::gaussian, MeasureKind::bernoulli}) {
        const auto s = make_measure(kind);
        EXPECT_EQ(density_eval(s, s.radius + 0.5), 0.0);
    }
    EXPECT_EQ(density_eval(mu_q(Rational(-3, 4)), 1.5), 0.0);
}

TEST(DensityEval, Nonnegative) {
    const auto s = mu_q(Rational(-9, 10));
    for (double t = -s.radius; t <= s.radius; t += 0.01) EXPECT_GE(density_eval(s, t), 0.0);
}

TEST(Quadrature, Bernoulli) {
    const auto m = quad_moments(make_measure(MeasureKind::bernoulli), 10, 64);
    for (int n = 0; n <= 10; n += 2) EXPECT_EQ(m.moments[static_cast<std::size_t>(n)], 1.0);
}

TEST(Quadrature, Gaussian) {
    const auto m = quad_moments(make_measure(MeasureKind::gaussian), 8, 256);
    EXPECT_NEAR(m.moments[0], 1.0, 1e-10);
    EXPECT_NEAR(m.moments[4], 3.0, 1e-9);
    EXPECT_NEAR(m.moments[8], 105.0, 1e-7);
}

TEST(Quadrature, MatchesExactMoments) {
    for (const Rational q : {Rational(-1, 4), Rational(-1, 2), Rational(-3, 4), Rational(-9, 10)}) {
        const auto quad = quad_moments(mu_q(q), 10, 256);
        const auto exact = mu_q_moments(q, 10);
        EXPECT_NEAR(quad.moments[0], 1.0, 1e-8);
        for (std::size_t n = 1; n <= 10; ++n) {
            EXPECT_NEAR(quad.moments[n], exact[n].to_double(), 1e-8) << q.to_string() << " n=" << n;
            EXPECT_LT(quad.error_estimate[n], 1e-8);
        }
    }
}

TEST(Quadrature, ContinuousMassSplit) {
    auto continuous = mu_q(Rational(-3, 4));
    continuous.atoms.clear();
    EXPECT_NEAR(quad_moments(continuous, 0, 256).moments[0], 1.0 / 3.0, 1e-10);
}

TEST(Quadrature, FourQAtomModeLosesMass) {
    const auto m = quad_moments(mu_q(Rational(-3, 4), AtomMode::paper), 2, 256);
    EXPECT_NEAR(m.moments[0], 2.0 / 3.0, 1e-10);
    // modes agree where there are no atoms
    const auto a = quad_moments(mu_q(Rational(-1, 4), AtomMode::paper), 6, 128);
    const auto b = quad_moments(mu_q(Rational(-1, 4), AtomMode::derived), 6, 128);
    EXPECT_EQ(a.moments, b.moments);
}

TEST(Quadrature, AtomMassApproachesHalf) {
    const auto s = mu_q(Rational(-999, 1000));
    EXPECT_NEAR(s.atoms[0].mass, 0.5, 1e-3);
}

TEST(Quadrature, HankelOfQuadMomentsIsPsd) {
    const auto quad = quad_moments(mu_q(Rational(-3, 4)), 8, 256);
    std::vector<Rational> m;
    for (std::size_t n = 1; n <= 8; ++n) {
        mpq_class x(quad.moments[n]);
        m.emplace_back(x);
    }
    EXPECT_TRUE(hankel_psd(MomentSeq<Rational>(m)).psd);
}

TEST(MuAb, Examples) {
    const auto cat = mu_ab_moments(1, Rational(1), 12);
    const long c[] = {1, 2, 5, 14, 42, 132};
    for (int r = 1; r <= 6; ++r) EXPECT_EQ(cat[static_cast<std::size_t>(2 * r)], Rational(c[r - 1]));
    const auto b = mu_ab_moments(1, QPoly::q(), 4);
    EXPECT_EQ(b[2], QPoly(1));
    EXPECT_EQ(b[4], QPoly(1) + QPoly::q());
    EXPECT_THROW(mu_ab_moments(1, Rational(1), 18), std::domain_error);
}

TEST(MuAb, MatchesMuQ) {
    const auto sym = mu_ab_moments(1, QPoly(1) + QPoly::q(), 12);
    EXPECT_EQ(sym, tq_moment_polys(TqRegime::negative, 12));
    for (const Rational q : {Rational(-1, 4), Rational(-1, 2), Rational(-3, 4), Rational(0)}) {
        EXPECT_EQ(mu_ab_moments(1, Rational(1) + q, 12), mu_q_moments(q, 12));
    }
}

TEST(MuAb, AlphaScalesOuterBlocks) {
    // alpha^2 = 4, beta^2 = 0: only chords with nothing covering them
    const auto m = mu_ab_moments(2, Rational(0), 6);
    EXPECT_EQ(m[2], Rational(4));
    EXPECT_EQ(m[4], Rational(16));
    EXPECT_EQ(m[6], Rational(64));
}
