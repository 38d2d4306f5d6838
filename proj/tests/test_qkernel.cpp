#include <gtest/gtest.h>

#include "qpoly/qkernel.hpp"
#include "support.hpp"

using namespace qpoly;

namespace {

const QContext q_half = QContext::from_q(R("1/2"));
const QContext q_quarter = QContext::from_s(R("1/2"));

} // namespace

TEST(QContext, FromSDerivesQAndOmega0)
{
    const QContext c = QContext::from_s(R("3/4"), R("1/8"));
    EXPECT_EQ(c.q(), R("9/16"));
    EXPECT_EQ(c.omega0(), R("1/8") / (1 - R("9/16")));
    EXPECT_EQ(c.s(), R("3/4"));
}

TEST(QContext, FromQRecoversRationalRoot)
{
    EXPECT_TRUE(QContext::from_q(R("9/16")).has_s());
    EXPECT_EQ(QContext::from_q(R("9/16")).s(), R("3/4"));
    EXPECT_FALSE(q_half.has_s());
    EXPECT_THROW(q_half.s(), DomainError);
}

TEST(QContext, RejectsOutOfRangeParameters)
{
    EXPECT_THROW(QContext::from_s(2), DomainError);
    EXPECT_THROW(QContext::from_s(0), DomainError);
    EXPECT_THROW(QContext::from_s(1), DomainError);
    EXPECT_THROW(QContext::from_q(R("-1/2")), DomainError);
    EXPECT_THROW(QContext::from_q(1), DomainError);
}

TEST(QInt, Examples)
{
    EXPECT_EQ(q_int(q_quarter, 0), 0);
    EXPECT_EQ(q_int(q_quarter, 3), R("21/16"));
    EXPECT_EQ(q_int(q_quarter, 1), 1);
}

TEST(QInt, InverseBaseMatchesDefinition)
{
    // [n]_{1/q} = q^{1-n} [n]_q
    for (std::int64_t n = 0; n <= 10; ++n) {
        EXPECT_EQ(q_int_inverse_base(q_half, n), q_power(q_half, 1 - n) * q_int(q_half, n)) << n;
    }
}

TEST(QFactorial, Examples)
{
    EXPECT_EQ(q_factorial(q_half, 0), 1);
    EXPECT_EQ(q_factorial(q_half, 2), R("3/2"));
    EXPECT_EQ(q_factorial(q_half, 3), R("21/8"));
    EXPECT_THROW(q_factorial(q_half, -1), DomainError);
}

TEST(QBinomial, Examples)
{
    EXPECT_EQ(q_binomial(q_half, 5, 0), 1);
    EXPECT_EQ(q_binomial(q_half, 2, 3), 0);
    EXPECT_EQ(q_binomial(q_half, 4, 2), R("35/16"));
    EXPECT_EQ(q_binomial(q_quarter, 6, 3), R("376805/262144"));
    EXPECT_EQ(q_binomial(q_half, 3, -1), 0);
}

TEST(QBinomial, PascalAndSymmetry)
{
    for (const auto* ctx : {&q_half, &q_quarter}) {
        for (std::int64_t n = 0; n <= 20; ++n) {
            for (std::int64_t k = 0; k <= n + 1; ++k) {
                const Rational lhs = q_binomial(*ctx, n + 1, k);
                EXPECT_EQ(lhs, q_power(*ctx, k) * q_binomial(*ctx, n, k) + q_binomial(*ctx, n, k - 1));
                EXPECT_EQ(lhs, q_binomial(*ctx, n, k) + q_power(*ctx, n + 1 - k) * q_binomial(*ctx, n, k - 1));
                EXPECT_EQ(q_binomial(*ctx, n, k), q_binomial(*ctx, n, n - k));
            }
        }
    }
}

TEST(QPochhammer, Examples)
{
    EXPECT_EQ(q_pochhammer(q_half, R("7/3"), 0), 1);
    EXPECT_EQ(q_pochhammer(q_half, 1, 3), 0);
    EXPECT_EQ(q_pochhammer(q_half, R("1/3"), 2), R("5/9"));
}

TEST(QPochhammer, SplitsAndMatchesFactorial)
{
    for (const Rational& z : Rs({"1/3", "-2", "5/7"})) {
        for (std::int64_t m = 0; m <= 8; ++m) {
            for (std::int64_t n = 0; n <= 8; ++n) {
                EXPECT_EQ(q_pochhammer(q_half, z, m + n),
                          q_pochhammer(q_half, z, m) * q_pochhammer(q_half, z * q_power(q_half, m), n));
            }
        }
    }
    for (std::int64_t n = 0; n <= 20; ++n) {
        EXPECT_EQ(q_factorial(q_quarter, n), q_pochhammer(q_quarter, q_quarter.q(), n) / ipow(1 - q_quarter.q(), n));
    }
}

TEST(QPochhammerInf, Examples)
{
    const auto zero = q_pochhammer_inf(q_half, 0, R("1/1000"));
    EXPECT_EQ(zero.value, 1);
    EXPECT_EQ(zero.terms, 0);

    const auto one = q_pochhammer_inf(q_half, 1, R("1/1000"));
    EXPECT_EQ(one.value, 0);

    const Rational tol(1, 1000000);
    const auto half = q_pochhammer_inf(q_half, R("1/2"), tol);
    const Rational reference = q_pochhammer(q_half, R("1/2"), 200);
    EXPECT_LT(abs(half.value - reference), tol);
    EXPECT_GE(half.terms, 19);
    EXPECT_LE(half.terms, 23);
}

TEST(QPochhammerInf, RejectsNonPositiveTolerance)
{
    EXPECT_THROW(q_pochhammer_inf(q_half, R("1/2"), 0), DomainError);
    EXPECT_THROW(q_pochhammer_inf(q_half, R("1/2"), -1), DomainError);
}

TEST(QPowHalf, Examples)
{
    EXPECT_EQ(q_pow_half(q_quarter, HalfInt::zero(), 9), 1);
    EXPECT_EQ(q_pow_half(q_quarter, HalfInt::half(), 4), R("1/16"));
    EXPECT_EQ(q_pow_half(q_quarter, HalfInt::half(), 1), R("1/2"));
    EXPECT_EQ(q_pow_half(q_quarter, HalfInt::one(), -2), 16);
}

TEST(QPowHalf, Additivity)
{
    for (const HalfInt mu : {HalfInt::zero(), HalfInt::half(), HalfInt::one()}) {
        for (std::int64_t a = -5; a <= 5; ++a) {
            for (std::int64_t b = -5; b <= 5; ++b) {
                EXPECT_EQ(q_pow_half(q_quarter, mu, a) * q_pow_half(q_quarter, mu, b), q_pow_half(q_quarter, mu, a + b));
            }
        }
    }
}

TEST(QPowHalf, OddRootPowerNeedsS)
{
    EXPECT_THROW(q_pow_half(q_half, HalfInt::half(), 1), DomainError);
    EXPECT_EQ(q_pow_half(q_half, HalfInt::half(), 2), R("1/2"));
}

TEST(QDoubleFactorial, Examples)
{
    EXPECT_EQ(q_double_factorial_even(q_half, 0), 1);
    EXPECT_EQ(q_double_factorial_even(q_half, 1), R("3/2"));
    EXPECT_EQ(q_double_factorial_even(q_half, 2), R("45/16"));
}

TEST(QDoubleFactorial, FactorsThroughSquaredBase)
{
    const QContext sq = QContext::from_q(q_half.q() * q_half.q());
    for (std::int64_t n = 0; n <= 10; ++n) {
        EXPECT_EQ(q_double_factorial_even(q_half, n), ipow(q_int(q_half, 2), n) * q_factorial(sq, n));
    }
}

TEST(Scalar, ParseRational)
{
    EXPECT_EQ(parse_rational(" -3/6 "), R("-1/2"));
    EXPECT_EQ(parse_rational("7"), 7);
    EXPECT_THROW(parse_rational("1/0"), DomainError);
    EXPECT_THROW(parse_rational("0.5"), DomainError);
    EXPECT_THROW(parse_rational(""), DomainError);
    EXPECT_EQ(to_string(R("-6/4")), "-3/2");
    EXPECT_EQ(to_string(R("4")), "4");
}
