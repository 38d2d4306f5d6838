#include <gtest/gtest.h>

#include <random>

#include "qpoly/difference.hpp"
#include "qpoly/polyfamilies.hpp"
#include "support.hpp"

using namespace qpoly;

namespace {

const QContext q_half = QContext::from_q(R("1/2"));
const QContext s_half = QContext::from_s(R("1/2"));

Poly random_poly(std::mt19937_64& g, std::int64_t degree)
{
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& a : c) {
        a = Rational(static_cast<long>(g() % 21) - 10, static_cast<long>(g() % 6) + 1);
    }
    if (c.back() == 0) {
        c.back() = 1;
    }
    return Poly(std::move(c));
}

} // namespace

TEST(QGaussian, Examples)
{
    EXPECT_EQ(qgaussian(q_half, 0), Poly::constant(1));
    EXPECT_EQ(qgaussian(q_half, 1), Poly({-1, 1}));
    EXPECT_EQ(qgaussian(q_half, 2), Poly({R("1/2"), R("-3/2"), 1}));
    EXPECT_THROW(qgaussian(q_half, -1), DomainError);
}

TEST(QGaussian, ConstructionsAgree)
{
    for (const Rational& q : Rs({"1/4", "1/2", "9/16"})) {
        const QContext c = QContext::from_q(q);
        for (std::int64_t n = 0; n <= 15; ++n) {
            const Poly p = qgaussian(c, n, Construction::Product);
            EXPECT_EQ(p, qgaussian(c, n, Construction::Recursion)) << n;
            EXPECT_EQ(p, qgaussian(c, n, Construction::ExplicitSum)) << n;
        }
    }
}

TEST(QFactorial, Examples)
{
    EXPECT_EQ(qfactorial_u(q_half, 0), Poly::constant(1, VarKind::U));
    EXPECT_EQ(qfactorial_at_integer(q_half, 0, 5), 1);
    EXPECT_EQ(qfactorial_at_integer(q_half, 1, 3), R("7/4"));
    EXPECT_EQ(qfactorial_at_integer(q_half, 2, 1), 0);
    // [x]_q [x-1]_q with u = q^x, q = 1/2: 4 (1-u)(1-2u)
    EXPECT_EQ(qfactorial_u(q_half, 2), Poly({4, -12, 8}, VarKind::U));
}

TEST(QFactorial, ProductMatchesPochhammerForm)
{
    for (const Rational& q : Rs({"1/4", "1/2"})) {
        const QContext c = QContext::from_q(q);
        for (std::int64_t n = 0; n <= 10; ++n) {
            const Poly u = qfactorial_u(c, n);
            for (std::int64_t m = 0; m <= 10; ++m) {
                const Rational direct = qfactorial_at_integer(c, n, m);
                EXPECT_EQ(qfactorial_via_pochhammer(c, n, m), direct);
                EXPECT_EQ(u(q_power(c, m)), direct);
            }
        }
    }
}

TEST(HahnFactorial, Examples)
{
    const QContext c = QContext::from_q(R("1/2"), R("1/4"));
    EXPECT_EQ(hahn_factorial(c, 0), Poly::constant(1));
    EXPECT_EQ(hahn_factorial(q_half, 2), Poly::monomial(2));
    EXPECT_EQ(hahn_factorial(c, 2), Poly({0, R("-1/4"), 1}));
    EXPECT_EQ(hahn_factorial(QContext::from_q(R("1/3"), R("1/5")), 3), Poly({0, R("4/75"), R("-7/15"), 1}));
}

TEST(HahnFactorial, ConstructionsAgree)
{
    for (const Rational& q : Rs({"1/4", "1/2"})) {
        for (const Rational& w : Rs({"0", "1/8", "1/3"})) {
            const QContext c = QContext::from_q(q, w);
            for (std::int64_t n = 0; n <= 15; ++n) {
                const Poly p = hahn_factorial(c, n, Construction::Product);
                EXPECT_EQ(p, hahn_factorial(c, n, Construction::Recursion));
                EXPECT_EQ(p, hahn_factorial(c, n, Construction::ShiftedRecursion));
                EXPECT_EQ(p, hahn_factorial(c, n, Construction::ExplicitSum));
            }
        }
    }
}

TEST(ExpandInBasis, Examples)
{
    EXPECT_EQ(expand_in_basis(q_half, Poly::monomial(1), Basis::QGaussian).coeffs, Rs({"1", "1"}));
    const Rational q = q_half.q();
    EXPECT_EQ(expand_in_basis(q_half, Poly::monomial(2), Basis::QGaussian).coeffs,
              (std::vector<Rational>{1, 1 + q, 1}));
    for (const Basis b : {Basis::Monomial, Basis::ShiftedMonomial, Basis::QGaussian, Basis::HahnFactorial}) {
        EXPECT_EQ(expand_in_basis(q_half, Poly::constant(1), b).coeffs, Rs({"1"}));
    }
    EXPECT_EQ(expand_in_basis(q_half, Poly::constant(1, VarKind::U), Basis::QFactorial).coeffs, Rs({"1"}));
}

TEST(ExpandInBasis, WrongVariableRejected)
{
    EXPECT_THROW(expand_in_basis(q_half, Poly::monomial(1, 1, VarKind::U), Basis::QGaussian), DomainError);
    EXPECT_THROW(expand_in_basis(q_half, Poly::monomial(1), Basis::QFactorial), DomainError);
}

TEST(ExpandInBasis, RoundTripsRandomPolynomials)
{
    std::mt19937_64 g(7);
    const QContext c = QContext::from_s(R("1/2"), R("1/8"));
    for (std::int64_t d = 0; d <= 15; ++d) {
        const Poly p = random_poly(g, d);
        for (const Basis b : {Basis::Monomial, Basis::ShiftedMonomial, Basis::QGaussian, Basis::HahnFactorial}) {
            const FamilyVector v = expand_in_basis(c, p, b);
            EXPECT_EQ(v.basis, b);
            EXPECT_EQ(to_poly(c, v), p) << basis_name(b) << " degree " << d;
        }
        const Poly u = p.with_var(VarKind::U);
        EXPECT_EQ(to_poly(c, expand_in_basis(c, u, Basis::QFactorial)), u);
    }
}

TEST(Inversion, MonomialsFromGaussianFamily)
{
    for (std::int64_t n = 0; n <= 15; ++n) {
        Poly sum(VarKind::X);
        for (std::int64_t k = 0; k <= n; ++k) {
            sum += q_binomial(s_half, n, k) * qgaussian(s_half, k);
        }
        EXPECT_EQ(sum, Poly::monomial(static_cast<std::size_t>(n)));
    }
}

TEST(Inversion, ShiftedMonomialsFromHahnFamily)
{
    const QContext c = QContext::from_s(R("1/2"), R("1/3"));
    for (std::int64_t n = 0; n <= 15; ++n) {
        Poly sum(VarKind::X);
        for (std::int64_t k = 0; k <= n; ++k) {
            sum += (q_binomial(c, n, k) * ipow(-c.omega0(), n - k)) * hahn_factorial(c, k);
        }
        EXPECT_EQ(sum, shift_x(Poly::monomial(static_cast<std::size_t>(n)), -c.omega0()));
    }
}

TEST(Connection, Examples)
{
    const QContext c = QContext::from_q(R("1/2"), R("1/4"));
    EXPECT_EQ(connect_hahn_gaussian(c, 0), Poly::constant(1));
    EXPECT_EQ(connect_hahn_gaussian(c, 1), Poly::monomial(1));
    EXPECT_EQ(connect_hahn_gaussian(c, 2), Poly({0, R("-1/4"), 1}));
    EXPECT_THROW(connect_hahn_gaussian(q_half, 2), DomainError);
}

TEST(Connection, MatchesHahnFamily)
{
    for (const Rational& w : Rs({"1/8", "1/3", "-1/5"})) {
        const QContext c = s_half.with_omega(w);
        for (std::int64_t n = 0; n <= 15; ++n) {
            EXPECT_EQ(connect_hahn_gaussian(c, n), hahn_factorial(c, n));
        }
    }
}

TEST(QExpOperator, Examples)
{
    EXPECT_EQ(qgaussian_via_qexp_operator(s_half, 0), Poly::constant(1));
    EXPECT_EQ(qgaussian_via_qexp_operator(s_half, 1), Poly({-1, 1}));
    for (std::int64_t n = 0; n <= 10; ++n) {
        EXPECT_EQ(qgaussian_via_qexp_operator(s_half, n), qgaussian(s_half, n));
    }
    EXPECT_THROW(qgaussian_via_qexp_operator(q_half, 2), DomainError);
}

TEST(Position, FirstCoefficients)
{
    const auto c = position_coefficients(s_half, 6);
    EXPECT_EQ(c[0], Poly::constant(1));
    EXPECT_EQ(c[1], Poly::monomial(1));
    EXPECT_EQ(c[2], (1 / q_int(s_half, 2)) * Poly({-1, 0, 1}));
    EXPECT_EQ(c[3], Poly({0, R("-128/35"), 0, R("64/105")}));
    EXPECT_EQ(c[4], Poly({R("4096/425"), 0, R("-36864/2975"), 0, R("4096/8925")}));
    EXPECT_EQ(c[4](0), q_power(s_half, -2) * q_int(s_half, 3) / q_factorial(s_half, 4));
    EXPECT_EQ(c[4](0), q_power(s_half, -2) / q_double_factorial_even(s_half, 2));
}

TEST(Position, ValuesAtZero)
{
    const auto c = position_coefficients(q_half, 13);
    for (std::int64_t n = 0; n <= 6; ++n) {
        const Rational sign = n % 2 == 0 ? 1 : -1;
        EXPECT_EQ(c[static_cast<std::size_t>(2 * n)](0),
                  sign * q_power(q_half, n * (1 - n)) / q_double_factorial_even(q_half, n));
        EXPECT_EQ(c[static_cast<std::size_t>(2 * n + 1)](0), 0);
    }
}
