#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpoly/difference.hpp"
#include "qpoly/poly.hpp"
#include "qpoly/qkernel.hpp"

namespace qpoly {

/// Independent routes to the same family member.
enum class Construction {
    Product,
    Recursion,
    ExplicitSum,
    /// Hahn family only: (x - omega0) p_n = p_{n+1} - omega0 q^n p_n.
    ShiftedRecursion,
};

enum class Basis { Monomial, ShiftedMonomial, QGaussian, QFactorial, HahnFactorial };

inline const char* basis_name(Basis b)
{
    switch (b) {
    case Basis::Monomial: return "monomial";
    case Basis::ShiftedMonomial: return "shifted-monomial";
    case Basis::QGaussian: return "q-gaussian";
    case Basis::QFactorial: return "q-factorial";
    case Basis::HahnFactorial: return "hahn-factorial";
    }
    return "?";
}

/// Coefficients relative to one of the polynomial bases. ShiftedMonomial is
/// centred at omega0; QFactorial members are polynomials in u = q^x.
struct FamilyVector {
    Basis basis = Basis::Monomial;
    std::vector<Rational> coeffs;

    friend bool operator==(const FamilyVector&, const FamilyVector&) = default;
};

namespace detail {

inline void require_nonneg(std::int64_t n, const char* op)
{
    if (n < 0) {
        throw DomainError(std::string(op) + ": negative index " + std::to_string(n));
    }
}

} // namespace detail

/// phi_n(x) = prod_{k<n} (x - q^k)
inline Poly qgaussian(const QContext& ctx, std::int64_t n, Construction method = Construction::Product)
{
    detail::require_nonneg(n, "qgaussian");
    switch (method) {
    case Construction::Product: {
        Poly p = Poly::constant(1);
        for (std::int64_t k = 0; k < n; ++k) {
            p *= Poly::linear_factor(q_power(ctx, k));
        }
        return p;
    }
    case Construction::Recursion: {
        // x phi_k = phi_{k+1} + q^k phi_k
        Poly p = Poly::constant(1);
        const Poly x = Poly::monomial(1);
        for (std::int64_t k = 0; k < n; ++k) {
            p = x * p - q_power(ctx, k) * p;
        }
        return p;
    }
    case Construction::ExplicitSum: {
        std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
        for (std::int64_t k = 0; k <= n; ++k) {
            const Rational sign = k % 2 == 0 ? 1 : -1;
            coeffs[static_cast<std::size_t>(n - k)] = sign * q_binomial(ctx, n, k) * q_power(ctx, choose2(k));
        }
        return Poly(std::move(coeffs));
    }
    case Construction::ShiftedRecursion:
        break;
    }
    throw DomainError("qgaussian: unsupported construction");
}

/// q-factorial polynomial prod_{k<n} [x - k]_q written in u = q^x, using
/// [x - k]_q = (1 - q^{-k} u) / (1 - q).
inline Poly qfactorial_u(const QContext& ctx, std::int64_t n)
{
    detail::require_nonneg(n, "qfactorial_u");
    const Rational inv = Rational(1) / (1 - ctx.q());
    Poly p = Poly::constant(1, VarKind::U);
    for (std::int64_t k = 0; k < n; ++k) {
        p *= Poly({inv, -q_power(ctx, -k) * inv}, VarKind::U);
    }
    return p;
}

/// prod_{k<n} [m - k]_q at integer m, directly from q-integers.
inline Rational qfactorial_at_integer(const QContext& ctx, std::int64_t n, std::int64_t m)
{
    detail::require_nonneg(n, "qfactorial_at_integer");
    Rational result = 1;
    for (std::int64_t k = 0; k < n; ++k) {
        result *= q_int(ctx, m - k);
    }
    return result;
}

/// (-1)^n q^{nm - n(n-1)/2} (q^{-m}; q)_n / (1-q)^n
inline Rational qfactorial_via_pochhammer(const QContext& ctx, std::int64_t n, std::int64_t m)
{
    detail::require_nonneg(n, "qfactorial_via_pochhammer");
    const Rational sign = n % 2 == 0 ? 1 : -1;
    return sign * q_power(ctx, n * m - choose2(n)) * q_pochhammer(ctx, q_power(ctx, -m), n) /
           ipow(1 - ctx.q(), n);
}

/// Hahn factorial polynomial prod_{k<n} (x - [k]_q omega).
inline Poly hahn_factorial(const QContext& ctx, std::int64_t n, Construction method = Construction::Product)
{
    detail::require_nonneg(n, "hahn_factorial");
    const Rational& w = ctx.omega();
    const Rational& w0 = ctx.omega0();
    switch (method) {
    case Construction::Product: {
        Poly p = Poly::constant(1);
        for (std::int64_t k = 0; k < n; ++k) {
            p *= Poly::linear_factor(q_int(ctx, k) * w);
        }
        return p;
    }
    case Construction::Recursion: {
        // x p_k = p_{k+1} + omega [k]_q p_k
        Poly p = Poly::constant(1);
        const Poly x = Poly::monomial(1);
        for (std::int64_t k = 0; k < n; ++k) {
            p = x * p - (w * q_int(ctx, k)) * p;
        }
        return p;
    }
    case Construction::ShiftedRecursion: {
        Poly p = Poly::constant(1);
        const Poly shifted = Poly::linear_factor(w0);
        for (std::int64_t k = 0; k < n; ++k) {
            p = shifted * p + (w0 * q_power(ctx, k)) * p;
        }
        return p;
    }
    case Construction::ExplicitSum: {
        // sum_k [n k]_q q^{k(k-1)/2} omega0^k (x - omega0)^{n-k}, stored in powers of (x - omega0)
        std::vector<Rational> shifted(static_cast<std::size_t>(n) + 1);
        for (std::int64_t k = 0; k <= n; ++k) {
            shifted[static_cast<std::size_t>(n - k)] = q_binomial(ctx, n, k) * q_power(ctx, choose2(k)) * ipow(w0, k);
        }
        return shift_x(Poly(std::move(shifted)), -w0);
    }
    }
    throw DomainError("hahn_factorial: unsupported construction");
}

/// The n-th element of a basis, in the variable that basis lives in.
inline Poly basis_polynomial(const QContext& ctx, Basis basis, std::int64_t n)
{
    switch (basis) {
    case Basis::Monomial: return Poly::monomial(static_cast<std::size_t>(n));
    case Basis::ShiftedMonomial: return shift_x(Poly::monomial(static_cast<std::size_t>(n)), -ctx.omega0());
    case Basis::QGaussian: return qgaussian(ctx, n);
    case Basis::QFactorial: return qfactorial_u(ctx, n);
    case Basis::HahnFactorial: return hahn_factorial(ctx, n);
    }
    throw DomainError("basis_polynomial: unknown basis");
}

/// sum_k coeffs[k] * basis_k
inline Poly to_poly(const QContext& ctx, const FamilyVector& v)
{
    Poly acc(v.basis == Basis::QFactorial ? VarKind::U : VarKind::X);
    for (std::size_t k = 0; k < v.coeffs.size(); ++k) {
        if (v.coeffs[k] != 0) {
            acc += v.coeffs[k] * basis_polynomial(ctx, v.basis, static_cast<std::int64_t>(k));
        }
    }
    return acc;
}

namespace detail {

/// Generic triangular solve against a degree-graded basis.
inline FamilyVector expand_triangular(const QContext& ctx, Poly p, Basis basis)
{
    FamilyVector out{basis, std::vector<Rational>(p.size())};
    for (long d = p.degree(); d >= 0; --d) {
        const Rational c = p[static_cast<std::size_t>(d)];
        if (c == 0) {
            continue;
        }
        const Poly b = basis_polynomial(ctx, basis, d);
        const Rational coeff = c / b.coeffs().back();
        out.coeffs[static_cast<std::size_t>(d)] = coeff;
        p -= coeff * b;
    }
    return out;
}

} // namespace detail

/// Change of basis for polynomials in x (or in u for the q-factorial basis).
///
/// Monomials go to q-Gaussians through x^n = sum_k [n k]_q phi_k, and powers of
/// (x - omega0) go to Hahn factorials through
/// (x - omega0)^n = sum_k [n k]_q (-omega0)^{n-k} phi_dot_k.
inline FamilyVector expand_in_basis(const QContext& ctx, const Poly& p, Basis basis)
{
    if (basis == Basis::QFactorial) {
        if (p.var() != VarKind::U) {
            throw DomainError("expand_in_basis: the q-factorial basis needs a polynomial in u = q^x");
        }
        return detail::expand_triangular(ctx, p, basis);
    }
    if (p.var() != VarKind::X) {
        throw DomainError(std::string("expand_in_basis: cannot expand a polynomial in u into the ") +
                          basis_name(basis) + " basis");
    }
    const std::int64_t deg = p.degree();
    std::vector<Rational> out(p.size());
    switch (basis) {
    case Basis::Monomial: return FamilyVector{basis, p.coeffs()};
    case Basis::ShiftedMonomial: return FamilyVector{basis, shift_x(p, ctx.omega0()).coeffs()};
    case Basis::QGaussian:
        for (std::int64_t n = 0; n <= deg; ++n) {
            const Rational c = p[static_cast<std::size_t>(n)];
            if (c == 0) {
                continue;
            }
            for (std::int64_t k = 0; k <= n; ++k) {
                out[static_cast<std::size_t>(k)] += c * q_binomial(ctx, n, k);
            }
        }
        return FamilyVector{basis, std::move(out)};
    case Basis::HahnFactorial: {
        const Poly shifted = shift_x(p, ctx.omega0());
        const Rational minus_w0 = -ctx.omega0();
        for (std::int64_t n = 0; n <= deg; ++n) {
            const Rational c = shifted[static_cast<std::size_t>(n)];
            if (c == 0) {
                continue;
            }
            for (std::int64_t k = 0; k <= n; ++k) {
                out[static_cast<std::size_t>(k)] += c * q_binomial(ctx, n, k) * ipow(minus_w0, n - k);
            }
        }
        return FamilyVector{basis, std::move(out)};
    }
    case Basis::QFactorial: break;
    }
    throw DomainError("expand_in_basis: unsupported basis");
}

/// (-1)^n omega0^n phi_n(1 - x / omega0)
inline Poly connect_hahn_gaussian(const QContext& ctx, std::int64_t n)
{
    detail::require_nonneg(n, "connect_hahn_gaussian");
    const Rational& w0 = ctx.omega0();
    if (w0 == 0) {
        throw DomainError("connect_hahn_gaussian: omega0 = 0 makes the affine map degenerate");
    }
    return ipow(-w0, n) * qgaussian(ctx, n).compose_affine(-1 / w0, 1);
}

/// phi_n = E_q^{(1/2)}(-q^{-1/2} D_x^q) x^n; the operator series stops at k = n.
/// Evaluated term by term with q^{1/2} = s, so the context must carry s.
inline Poly qgaussian_via_qexp_operator(const QContext& ctx, std::int64_t n)
{
    detail::require_nonneg(n, "qgaussian_via_qexp_operator");
    const Rational minus_inv_s = -Rational(1) / ctx.s();
    Poly acc(VarKind::X);
    Poly term = Poly::monomial(static_cast<std::size_t>(n));
    Rational fact = 1;
    for (std::int64_t k = 0; k <= n; ++k) {
        if (k > 0) {
            term = jackson_derivative(ctx, term);
            fact *= q_int(ctx, k);
        }
        acc += (q_pow_half(ctx, HalfInt::half(), k * k) * ipow(minus_inv_s, k) / fact) * term;
    }
    return acc;
}

/// Components c_0..c_nmax of the position-operator eigenvector:
/// x c_n = [n+1]_q c_{n+1} + q^{1-n} c_{n-1}, c_0 = 1, c_{-1} = 0.
inline std::vector<Poly> position_coefficients(const QContext& ctx, std::int64_t nmax)
{
    detail::require_nonneg(nmax, "position_coefficients");
    std::vector<Poly> c;
    c.reserve(static_cast<std::size_t>(nmax) + 1);
    c.push_back(Poly::constant(1));
    const Poly x = Poly::monomial(1);
    for (std::int64_t n = 0; n < nmax; ++n) {
        Poly next = x * c[static_cast<std::size_t>(n)];
        if (n >= 1) {
            next -= q_power(ctx, 1 - n) * c[static_cast<std::size_t>(n - 1)];
        }
        // [n+1]_q > 0 for 0 < q < 1
        c.push_back((Rational(1) / q_int(ctx, n + 1)) * next);
    }
    return c;
}

} // namespace qpoly
