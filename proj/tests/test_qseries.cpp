#include <gtest/gtest.h>

#include "qpoly/polyfamilies.hpp"
#include "qpoly/qseries.hpp"
#include "support.hpp"

using namespace qpoly;

namespace {

const QContext s_half = QContext::from_s(R("1/2"));
const QContext s_3_4 = QContext::from_s(R("3/4"));
const QContext q_half = QContext::from_q(R("1/2"));

TruncSeries series(std::vector<Rational> c)
{
    const auto order = static_cast<std::int64_t>(c.size()) - 1;
    return TruncSeries(std::move(c), order);
}

} // namespace

TEST(TruncSeries, Multiplication)
{
    const TruncSeries a = series(Rs({"2", "-1/3", "5"}));
    EXPECT_EQ(series_mul(TruncSeries::one(2), a), a);
    EXPECT_EQ(series_mul(series(Rs({"1", "1", "0"})), series(Rs({"1", "-1", "0"}))), series(Rs({"1", "0", "-1"})));
}

TEST(TruncSeries, Reciprocal)
{
    EXPECT_EQ(series_recip(TruncSeries::one(4)), TruncSeries::one(4));
    EXPECT_EQ(series_recip(series(Rs({"1", "-1", "0", "0"}))), series(Rs({"1", "1", "1", "1"})));
    EXPECT_THROW(series_recip(series(Rs({"0", "1"}))), DomainError);

    const TruncSeries r = series(Rs({"3", "1/2", "-7", "2/9", "1"}));
    EXPECT_EQ(series_mul(r, series_recip(r)), TruncSeries::one(4));
}

TEST(TruncSeries, ReciprocalOfInfiniteProductIsEulerSeries)
{
    // (t;q)_inf = sum (-1)^n q^{n(n-1)/2} t^n / (q;q)_n, whose reciprocal is sum t^n / (q;q)_n
    const std::int64_t N = 10;
    TruncSeries prod(N);
    TruncSeries euler(N);
    for (std::int64_t n = 0; n <= N; ++n) {
        const Rational poch = q_pochhammer(s_half, s_half.q(), n);
        prod[static_cast<std::size_t>(n)] = (n % 2 == 0 ? 1 : -1) * q_power(s_half, choose2(n)) / poch;
        euler[static_cast<std::size_t>(n)] = 1 / poch;
    }
    EXPECT_EQ(series_recip(prod), euler);
}

TEST(EmuSeries, Examples)
{
    EXPECT_EQ(emu_series(s_half, HalfInt::zero(), 0, 5), TruncSeries::one(5));
    const Rational s = R("1/2");
    EXPECT_EQ(emu_series(s_half, HalfInt::half(), 1, 2),
              series({1, s, ipow(s, 4) / q_factorial(s_half, 2)}));
    const TruncSeries e = emu_series(q_half, HalfInt::zero(), 1, 8);
    for (std::int64_t n = 0; n <= 8; ++n) {
        EXPECT_EQ(e[static_cast<std::size_t>(n)], ipow(1 - q_half.q(), n) / q_pochhammer(q_half, q_half.q(), n));
    }
}

TEST(EqwEval, Examples)
{
    const QContext c = QContext::from_q(R("1/2"), R("1/4"));
    EXPECT_EQ(eqw_eval(c, HalfInt::zero(), c.omega0(), 10), 1);
    EXPECT_EQ(eqw_eval(c, HalfInt::zero(), 1, 1), R("3/2"));

    // omega = 0, mu = 0: partial sums of emu_series at c = x, since 1/[n]_q! = (1-q)^n/(q;q)_n
    const Rational x = R("2/3");
    const TruncSeries e = emu_series(q_half, HalfInt::zero(), x, 9);
    Rational sum = 0;
    for (const auto& c_n : e.coeffs()) {
        sum += c_n;
    }
    EXPECT_EQ(eqw_eval(q_half, HalfInt::zero(), x, 9), sum);
}

TEST(GaussianGenfun, Examples)
{
    const TruncSeries g = gaussian_genfun_lhs(q_half, R("5/3"), 4);
    EXPECT_EQ(g[0], 1);
    EXPECT_EQ(g[1], R("5/3") - 1);
    EXPECT_EQ(gaussian_genfun_lhs(q_half, 2, 2)[2], 1);
}

TEST(GaussianGenfun, CoefficientsAreFamilyOverFactorial)
{
    for (const auto* ctx : {&s_half, &s_3_4, &q_half}) {
        for (const Rational& x : Rs({"-1", "0", "1/3", "2"})) {
            const TruncSeries g = gaussian_genfun_lhs(*ctx, x, 12);
            for (std::int64_t n = 0; n <= 12; ++n) {
                EXPECT_EQ(g[static_cast<std::size_t>(n)], qgaussian(*ctx, n)(x) / q_factorial(*ctx, n));
            }
        }
    }
}

TEST(HahnGenfun, Examples)
{
    const QContext c = QContext::from_s(R("1/2"), R("1/8"));
    const TruncSeries h = hahn_genfun_lhs(c, R("3/7"), 3);
    EXPECT_EQ(h[0], 1);
    EXPECT_EQ(h[1], R("3/7"));

    const Rational x = R("-2/5");
    const TruncSeries h0 = hahn_genfun_lhs(s_half, x, 6);
    for (std::int64_t n = 0; n <= 6; ++n) {
        EXPECT_EQ(h0[static_cast<std::size_t>(n)], ipow(x, n) / q_factorial(s_half, n));
    }
}

TEST(HahnGenfun, CoefficientsAreFamilyOverFactorial)
{
    for (const Rational& w : Rs({"0", "1/8", "1/3"})) {
        const QContext c = s_half.with_omega(w);
        for (const Rational& x : Rs({"-1", "0", "1/3", "2"})) {
            const TruncSeries h = hahn_genfun_lhs(c, x, 12);
            for (std::int64_t n = 0; n <= 12; ++n) {
                EXPECT_EQ(h[static_cast<std::size_t>(n)], hahn_factorial(c, n)(x) / q_factorial(c, n));
            }
        }
    }
}

TEST(QFactorialGenfun, BothFormsAtIntegerPoints)
{
    for (std::int64_t m = 0; m <= 8; ++m) {
        const TruncSeries two = qfactorial_genfun_lhs(q_half, m, 12);
        const TruncSeries one = qfactorial_genfun_lhs_1phi0(q_half, m, 12);
        for (std::int64_t n = 0; n <= 12; ++n) {
            const Rational v = qfactorial_at_integer(q_half, n, m) / q_factorial(q_half, n);
            EXPECT_EQ(two[static_cast<std::size_t>(n)], v);
            EXPECT_EQ(one[static_cast<std::size_t>(n)], q_power(q_half, choose2(n)) * v);
        }
    }
    EXPECT_THROW(qfactorial_genfun_lhs(q_half, -1, 3), DomainError);
}

TEST(ExpPair, Examples)
{
    EXPECT_TRUE(exp_pair_identity_residual(s_half, 0).is_zero());
    EXPECT_TRUE(exp_pair_identity_residual(s_half, 5).is_zero());
    EXPECT_TRUE(exp_pair_identity_residual(s_3_4, 12).is_zero());
    EXPECT_THROW(exp_pair_identity_residual(q_half, 3), DomainError);
}

TEST(ExpPair, ShiftedFormIsNotAnIdentity)
{
    // definition gives 1/(1 - (1-q)x) for the shifted pairing
    const TruncSeries res = exp_pair_shifted_form_residual(s_half, 6);
    EXPECT_FALSE(res.is_zero());
    for (std::int64_t n = 1; n <= 6; ++n) {
        EXPECT_EQ(res[static_cast<std::size_t>(n)], ipow(1 - s_half.q(), n));
    }
    EXPECT_EQ(res[0], 0);
}

TEST(ExpPair, HalfExponentialCoefficientsFromDefinition)
{
    const TruncSeries e = eqw0_series(s_half, HalfInt::half(), 1 / (1 - s_half.q()), 6);
    for (std::int64_t n = 0; n <= 6; ++n) {
        EXPECT_EQ(e[static_cast<std::size_t>(n)],
                  q_pow_half(s_half, HalfInt::half(), n * n) / q_pochhammer(s_half, s_half.q(), n));
    }
    EXPECT_NE(e, big_qexp_series(s_half, 1, 6));
}

TEST(CoherentState, ClosedFormMatchesDefinition)
{
    for (const Rational& x : Rs({"-1", "0", "1/3", "2"})) {
        const TruncSeries c = coherent_state_closed_form(s_half, x, 10);
        for (std::int64_t n = 0; n <= 10; ++n) {
            const Rational expect = q_pow_half(s_half, HalfInt::half(), n * n) * q_power(s_half, -choose2(n)) *
                                    qgaussian(s_half, n)(x) / q_factorial(s_half, n);
            EXPECT_EQ(c[static_cast<std::size_t>(n)], expect);
        }
    }
}

TEST(TruncSeries, RejectsNegativeOrder)
{
    EXPECT_THROW(TruncSeries(-1), DomainError);
    EXPECT_THROW(eqw_eval(s_half, HalfInt::zero(), 1, -1), DomainError);
}
