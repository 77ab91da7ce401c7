#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "generators.hpp"
#include "pairweave/qpoly.hpp"
#include "pairweave/rational.hpp"

using namespace pairweave;

namespace {

QPoly poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return QPoly(std::move(v));
}

}  // namespace

TEST(Rational, ReducedForm) {
    EXPECT_EQ(Rational(6, 4).to_string(), "3/2");
    EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
    EXPECT_EQ(Rational(0, 5).to_string(), "0");
    EXPECT_EQ(Rational(0, 5), Rational(0));
    EXPECT_TRUE(Rational(8, 4).is_integer());
    EXPECT_EQ(Rational(-2, 6).denominator(), 3);
}

TEST(Rational, ParseRoundTrip) {
    EXPECT_EQ(Rational::parse("-3/4"), Rational(-3, 4));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(Rational::parse("10/4").to_string(), "5/2");
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Rational, ArithmeticAndOrder) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
    EXPECT_EQ(Rational(1, 2) / Rational(-1, 4), Rational(-2));
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_LT(Rational(-3, 4), Rational(-1, 2));
    EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
    EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
    EXPECT_EQ(abs(Rational(-5, 7)), Rational(5, 7));
}

TEST(Rational, NoOverflow) {
    Rational x(1);
    for (int i = 0; i < 40; ++i) x *= Rational(1000003);
    for (int i = 0; i < 40; ++i) x /= Rational(1000003);
    EXPECT_EQ(x, Rational(1));
}

TEST(QPoly, Arithmetic) {
    EXPECT_EQ(poly({1, 1}) + poly({1, -1}), QPoly(2));
    EXPECT_TRUE((poly({1, 1}) * QPoly()).is_zero());
    EXPECT_EQ(poly({1, 1}) * poly({1, 1}), poly({1, 2, 1}));
    EXPECT_EQ(poly({0, 1}) - poly({0, 1}), QPoly());
    EXPECT_EQ(pow(poly({1, 1}), 2), poly({1, 2, 1}));
}

TEST(QPoly, CanonicalForm) {
    EXPECT_TRUE(QPoly(std::vector<Rational>{0, 0, 0}).coeffs().empty());
    EXPECT_EQ(QPoly(std::vector<Rational>{1, 2, 0}).degree(), 1);
    EXPECT_EQ(QPoly().degree(), -1);
    EXPECT_EQ(poly({1, 0, 1}) - QPoly::monomial(2), QPoly(1));
}

TEST(QPoly, Eval) {
    EXPECT_EQ(poly({2, -1}).eval(1), Rational(1));
    EXPECT_EQ(poly({5, -6, 2}).eval(0), Rational(5));
    EXPECT_EQ(poly({5, -6, 2}).eval(Rational(1, 2)), Rational(5, 2));
}

TEST(QPoly, Equality) {
    EXPECT_EQ(poly({1, 1}), QPoly::q() + QPoly(1));
    EXPECT_NE(QPoly::q(), QPoly::monomial(2));
    EXPECT_EQ(pow(poly({1, 1}), 2), poly({1, 2, 1}));
}

TEST(QPoly, ReflectAndStrings) {
    EXPECT_EQ(poly({1, 2, 3}).reflect(), poly({1, -2, 3}));
    EXPECT_EQ(poly({5, -6, 2}).to_string(), "5 - 6q + 2q^2");
    EXPECT_EQ(QPoly().to_string(), "0");
    const QPoly p(std::vector<Rational>{Rational(1, 2), 0, Rational(-3, 4)});
    EXPECT_EQ(p.to_strings(), (std::vector<std::string>{"1/2", "0", "-3/4"}));
    EXPECT_EQ(QPoly::from_strings(p.to_strings()), p);
}

TEST(QPolyProperty, RingAxioms) {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        const QPoly a = pwtest::random_qpoly(rng);
        const QPoly b = pwtest::random_qpoly(rng);
        const QPoly c = pwtest::random_qpoly(rng);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a - a, QPoly());
        ASSERT_EQ(a * QPoly(1), a);
    }
}

TEST(QPolyProperty, EvalIsHomomorphism) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const QPoly a = pwtest::random_qpoly(rng);
        const QPoly b = pwtest::random_qpoly(rng);
        const Rational x = pwtest::random_rational(rng);
        ASSERT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
        ASSERT_EQ((a + b).eval(x), a.eval(x) + b.eval(x));
        ASSERT_EQ(a.reflect().eval(x), a.eval(-x));
    }
}
