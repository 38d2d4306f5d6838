#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpoly/difference.hpp"
#include "qpoly/hahncalc.hpp"
#include "qpoly/polyfamilies.hpp"
#include "qpoly/qkernel.hpp"

namespace qpoly {

enum class LadderFamily { QGaussian, QFactorial, Hahn };
enum class LadderDirection { Lower, Raise };

inline const char* family_name(LadderFamily f)
{
    switch (f) {
    case LadderFamily::QGaussian: return "q-gaussian";
    case LadderFamily::QFactorial: return "q-factorial";
    case LadderFamily::Hahn: return "hahn";
    }
    return "?";
}

inline Basis family_basis(LadderFamily f)
{
    switch (f) {
    case LadderFamily::QGaussian: return Basis::QGaussian;
    case LadderFamily::QFactorial: return Basis::QFactorial;
    case LadderFamily::Hahn: return Basis::HahnFactorial;
    }
    throw DomainError("unknown family");
}

/// Variable the family's analytic operators act on.
inline VarKind family_var(LadderFamily f) { return f == LadderFamily::QFactorial ? VarKind::U : VarKind::X; }

inline Poly family_polynomial(const QContext& ctx, LadderFamily f, std::int64_t n)
{
    return basis_polynomial(ctx, family_basis(f), n);
}

/// Coefficient c in  lower(p_n) = c p_{n-1}.
inline Rational lowering_coefficient(const QContext& ctx, LadderFamily f, std::int64_t n)
{
    if (f == LadderFamily::QFactorial) {
        return q_power(ctx, -n) * q_int(ctx, n);
    }
    return q_int(ctx, n);
}

/// Coefficient c in  raise(p_n) = c p_{n+1}.
inline Rational raising_coefficient(const QContext& ctx, LadderFamily f, std::int64_t n)
{
    if (f == LadderFamily::QFactorial) {
        return 1;
    }
    return q_power(ctx, -n);
}

/// Ladder action on a coefficient vector in the family's own basis.
inline FamilyVector ladder_apply(const QContext& ctx, LadderFamily family, LadderDirection dir,
                                 const FamilyVector& v)
{
    if (v.basis != family_basis(family)) {
        throw DomainError(std::string("ladder_apply: vector is in the ") + basis_name(v.basis) +
                          " basis, expected " + basis_name(family_basis(family)));
    }
    FamilyVector out{v.basis, {}};
    if (dir == LadderDirection::Lower) {
        if (v.coeffs.size() > 1) {
            out.coeffs.resize(v.coeffs.size() - 1);
            for (std::size_t n = 1; n < v.coeffs.size(); ++n) {
                out.coeffs[n - 1] = lowering_coefficient(ctx, family, static_cast<std::int64_t>(n)) * v.coeffs[n];
            }
        }
    } else {
        out.coeffs.resize(v.coeffs.size() + 1);
        for (std::size_t n = 0; n < v.coeffs.size(); ++n) {
            out.coeffs[n + 1] = raising_coefficient(ctx, family, static_cast<std::int64_t>(n)) * v.coeffs[n];
        }
    }
    return out;
}

/// N p_n = n p_n
inline FamilyVector number_apply(const FamilyVector& v)
{
    FamilyVector out = v;
    for (std::size_t n = 0; n < out.coeffs.size(); ++n) {
        out.coeffs[n] *= static_cast<long>(n);
    }
    return out;
}

/// Ladder operators as maps on polynomials.
///
///  q-Gaussian:  a = D_x^q,              a^dagger f(x) = (x - 1) f(x/q)
///  q-factorial: a f(u) = (f(qu) - f(u)) / (qu),  a^dagger f(u) = (1-u)/(1-q) f(u/q),  u = q^x
///  Hahn:        a = D_{q,omega},        a^dagger f(x) = x f((x - omega)/q)
inline Poly ladder_apply_analytic(const QContext& ctx, LadderFamily family, LadderDirection dir, const Poly& p)
{
    if (p.var() != family_var(family)) {
        throw DomainError(std::string("ladder_apply_analytic: wrong variable for the ") + family_name(family) +
                          " family");
    }
    const Rational& q = ctx.q();
    switch (family) {
    case LadderFamily::QGaussian:
        if (dir == LadderDirection::Lower) {
            return jackson_derivative(ctx, p);
        }
        return Poly::linear_factor(1) * scale_x(ctx, p, -1);
    case LadderFamily::QFactorial: {
        if (dir == LadderDirection::Raise) {
            const Rational inv = Rational(1) / (1 - q);
            return Poly({inv, -inv}, VarKind::U) * p.scale_var(Rational(1) / q);
        }
        const Poly diff = p.scale_var(q) - p;
        if (diff[0] != 0) {
            throw std::logic_error("ladder_apply_analytic: f(qu) - f(u) has a nonzero constant term");
        }
        std::vector<Rational> out;
        for (std::size_t k = 1; k < diff.size(); ++k) {
            out.push_back(diff[k] / q);
        }
        return Poly(std::move(out), VarKind::U);
    }
    case LadderFamily::Hahn:
        if (dir == LadderDirection::Lower) {
            return hahn_derivative_poly(ctx, p);
        }
        return Poly::monomial(1) * p.compose_affine(Rational(1) / q, -ctx.omega() / q);
    }
    throw DomainError("ladder_apply_analytic: unknown family");
}

/// One verified relation on one basis element.
struct RelationCheck {
    std::string relation;
    std::int64_t n = 0;
    bool pass = false;
    FamilyVector lhs;
    FamilyVector rhs;
};

namespace detail {

inline FamilyVector unit_vector(Basis basis, std::int64_t n)
{
    FamilyVector v{basis, std::vector<Rational>(static_cast<std::size_t>(n) + 1)};
    v.coeffs.back() = 1;
    return v;
}

inline FamilyVector combine(const FamilyVector& a, const Rational& ca, const FamilyVector& b, const Rational& cb)
{
    FamilyVector out{a.basis, std::vector<Rational>(std::max(a.coeffs.size(), b.coeffs.size()))};
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
        out.coeffs[k] += ca * a.coeffs[k];
    }
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) {
        out.coeffs[k] += cb * b.coeffs[k];
    }
    return out;
}

/// Equality up to trailing zeros.
inline bool same_vector(const FamilyVector& a, const FamilyVector& b)
{
    if (a.basis != b.basis) {
        return false;
    }
    const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    for (std::size_t k = 0; k < n; ++k) {
        const Rational x = k < a.coeffs.size() ? a.coeffs[k] : Rational(0);
        const Rational y = k < b.coeffs.size() ? b.coeffs[k] : Rational(0);
        if (x != y) {
            return false;
        }
    }
    return true;
}

} // namespace detail

/// Eigen-relations of the deformed oscillator algebra on p_0..p_nmax, via the basis action:
///   a a^dagger p_n,  a^dagger a p_n,  [a, a^dagger] p_n,  [a, a^dagger]_q p_n = (a a^dagger - q^{-1} a^dagger a) p_n,
///   [N, a] = -a,  [N, a^dagger] = a^dagger.
/// The q-factorial family carries an extra q^{-1} in the first four.
inline std::vector<RelationCheck> algebra_relations_check(const QContext& ctx, LadderFamily family, std::int64_t nmax)
{
    const Basis basis = family_basis(family);
    const bool hat = family == LadderFamily::QFactorial;
    const Rational q_inv = Rational(1) / ctx.q();
    std::vector<RelationCheck> out;
    auto record = [&](std::string name, std::int64_t n, FamilyVector lhs, FamilyVector rhs) {
        const bool ok = detail::same_vector(lhs, rhs);
        out.push_back(RelationCheck{std::move(name), n, ok, std::move(lhs), std::move(rhs)});
    };
    auto lower = [&](const FamilyVector& v) { return ladder_apply(ctx, family, LadderDirection::Lower, v); };
    auto raise = [&](const FamilyVector& v) { return ladder_apply(ctx, family, LadderDirection::Raise, v); };

    for (std::int64_t n = 0; n <= nmax; ++n) {
        const FamilyVector e = detail::unit_vector(basis, n);
        const FamilyVector aad = lower(raise(e));
        const FamilyVector ada = raise(lower(e));
        const std::int64_t shift = hat ? 1 : 0;
        auto scaled_e = [&](const Rational& c) { return detail::combine(e, c, e, 0); };

        record("a a^dagger", n, aad, scaled_e(q_power(ctx, -n - shift) * q_int(ctx, n + 1)));
        record("a^dagger a", n, ada, scaled_e(q_power(ctx, -n + 1 - shift) * q_int(ctx, n)));
        record("[a, a^dagger]", n, detail::combine(aad, 1, ada, -1), scaled_e(q_power(ctx, -n - shift)));
        record("[a, a^dagger]_q", n, detail::combine(aad, 1, ada, -q_inv), scaled_e(hat ? q_inv : Rational(1)));

        const FamilyVector a_e = lower(e);
        const FamilyVector ad_e = raise(e);
        record("[N, a]", n, detail::combine(number_apply(a_e), 1, lower(number_apply(e)), -1),
               detail::combine(a_e, -1, a_e, 0));
        record("[N, a^dagger]", n, detail::combine(number_apply(ad_e), 1, raise(number_apply(e)), -1), ad_e);
    }
    return out;
}

/// Analytic lower/raise on p_n compared with the basis prediction, n = 0..nmax.
inline std::vector<RelationCheck> analytic_basis_agreement(const QContext& ctx, LadderFamily family, std::int64_t nmax)
{
    const Basis basis = family_basis(family);
    std::vector<RelationCheck> out;
    for (std::int64_t n = 0; n <= nmax; ++n) {
        const Poly pn = family_polynomial(ctx, family, n);
        const FamilyVector e = detail::unit_vector(basis, n);
        for (const auto dir : {LadderDirection::Lower, LadderDirection::Raise}) {
            const Poly analytic = ladder_apply_analytic(ctx, family, dir, pn);
            const FamilyVector predicted = ladder_apply(ctx, family, dir, e);
            const Poly predicted_poly = to_poly(ctx, predicted);
            FamilyVector lhs{Basis::Monomial, analytic.coeffs()};
            FamilyVector rhs{Basis::Monomial, predicted_poly.coeffs()};
            const bool ok = analytic == predicted_poly;
            out.push_back(RelationCheck{dir == LadderDirection::Lower ? "analytic lower" : "analytic raise", n, ok,
                                        std::move(lhs), std::move(rhs)});
        }
    }
    return out;
}

/// q^{n(n-1)/2} (a^dagger)^n . 1 with the analytic raising operator.
inline Poly raised_ground_state(const QContext& ctx, LadderFamily family, std::int64_t n)
{
    Poly p = Poly::constant(1, family_var(family));
    for (std::int64_t k = 0; k < n; ++k) {
        p = ladder_apply_analytic(ctx, family, LadderDirection::Raise, p);
    }
    return q_power(ctx, choose2(n)) * p;
}

/// ((x - 1) q^{-x d/dx} D_x^q - [n]_{1/q}) phi_n; the zero polynomial.
inline Poly difference_equation_residual(const QContext& ctx, std::int64_t n)
{
    const Poly phi = qgaussian(ctx, n);
    const Poly lhs = Poly::linear_factor(1) * scale_x(ctx, jackson_derivative(ctx, phi), -1);
    return lhs - q_int_inverse_base(ctx, n) * phi;
}

} // namespace qpoly
