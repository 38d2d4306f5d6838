#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "qpoly/difference.hpp"
#include "qpoly/polyfamilies.hpp"
#include "qpoly/qkernel.hpp"

namespace qpoly {

namespace detail {

/// (q-1) x + omega, the Hahn step denominator.
inline Poly hahn_step(const QContext& ctx) { return Poly({ctx.omega(), ctx.q() - 1}); }

/// f(q x + omega)
inline Poly hahn_substitute(const QContext& ctx, const Poly& p) { return p.compose_affine(ctx.q(), ctx.omega()); }

} // namespace detail

/// D_{q,omega} f = (f(qx + omega) - f(x)) / ((q-1)x + omega), as an exact
/// polynomial quotient. The numerator vanishes at x = omega0, so the division
/// leaves no remainder; its value there is f'(omega0).
inline Poly hahn_derivative_poly(const QContext& ctx, const Poly& p)
{
    detail::require_x(p, "hahn_derivative_poly");
    const Poly num = detail::hahn_substitute(ctx, p) - p;
    auto [quo, rem] = divide(num, detail::hahn_step(ctx));
    if (!rem.is_zero()) {
        throw std::logic_error("hahn_derivative_poly: nonzero remainder");
    }
    return quo;
}

struct LeibnizResiduals {
    /// D(fg) - D(f) g - f(qx+omega) D(g)
    Poly product;
    /// Quotient rule multiplied through by g(x) g(qx+omega) ((q-1)x + omega):
    /// (D(f) g - f D(g)) ((q-1)x + omega) - (f(qx+omega) g - f g(qx+omega))
    Poly quotient_numerator;
};

inline LeibnizResiduals leibniz_residuals(const QContext& ctx, const Poly& f, const Poly& g)
{
    if (g.is_zero()) {
        throw DomainError("leibniz_residuals: g must not vanish identically");
    }
    const Poly df = hahn_derivative_poly(ctx, f);
    const Poly dg = hahn_derivative_poly(ctx, g);
    const Poly f_shift = detail::hahn_substitute(ctx, f);
    const Poly g_shift = detail::hahn_substitute(ctx, g);

    LeibnizResiduals out;
    out.product = hahn_derivative_poly(ctx, f * g) - df * g - f_shift * dg;
    out.quotient_numerator = (df * g - f * dg) * detail::hahn_step(ctx) - (f_shift * g - f * g_shift);
    return out;
}

/// F with D_{q,omega} F = p and F(omega0) = 0. Each Hahn factorial phi_dot_n
/// integrates to phi_dot_{n+1} / [n+1]_q.
inline Poly hahn_antiderivative(const QContext& ctx, const Poly& p)
{
    detail::require_x(p, "hahn_antiderivative");
    const FamilyVector v = expand_in_basis(ctx, p, Basis::HahnFactorial);
    FamilyVector lifted{Basis::HahnFactorial, std::vector<Rational>(v.coeffs.size() + 1)};
    for (std::size_t n = 0; n < v.coeffs.size(); ++n) {
        lifted.coeffs[n + 1] = v.coeffs[n] / q_int(ctx, static_cast<std::int64_t>(n) + 1);
    }
    Poly antider = to_poly(ctx, lifted);
    return antider - Poly::constant(antider(ctx.omega0()));
}

/// Integral from omega0 to x of p, in closed form.
///
/// The nodes x q^k + omega [k]_q equal omega0 + (x - omega0) q^k and the
/// prefactor (1-q)x - omega is (1-q)(x - omega0). Writing p(omega0 + y) =
/// sum_j b_j y^j and summing the geometric series sum_k q^{k(j+1)} gives
/// sum_j b_j (x - omega0)^{j+1} / [j+1]_q.
inline Rational hahn_integral_closed(const QContext& ctx, const Poly& p, const Rational& x)
{
    detail::require_x(p, "hahn_integral_closed");
    const Poly b = shift_x(p, ctx.omega0());
    const Rational y = x - ctx.omega0();
    Rational sum = 0;
    Rational yj = y;
    for (std::size_t j = 0; j < b.size(); ++j) {
        sum += b[j] * yj / q_int(ctx, static_cast<std::int64_t>(j) + 1);
        yj *= y;
    }
    return sum;
}

/// A function known only through point evaluation, plus a bound on |f| over
/// a closed interval. Both callables must be stateless.
struct SampledFn {
    std::function<Real(const Real&)> eval;
    std::function<Real(const Real& lo, const Real& hi)> abs_bound;
    std::string description;
};

inline SampledFn sampled_from_poly(const Poly& p, std::string description)
{
    SampledFn f;
    f.eval = [p](const Real& at) { return p.eval_real(at); };
    f.abs_bound = [p](const Real& lo, const Real& hi) {
        const Real r = std::max(boost::multiprecision::abs(lo), boost::multiprecision::abs(hi));
        Real acc = 0;
        Real rk = 1;
        for (const auto& c : p.coeffs()) {
            acc += boost::multiprecision::abs(to_real(c)) * rk;
            rk *= r;
        }
        return acc;
    };
    f.description = std::move(description);
    return f;
}

struct NumericValue {
    Real value;
    /// Guaranteed bound on |value - exact|.
    Real error_bound;
    std::int64_t terms = 0;
};

/// Partial sum of ((1-q)x - omega) sum_k q^k f(x q^k + omega [k]_q), stopped
/// once M q^K / (1-q) |(1-q)x - omega| < tol.
inline NumericValue hahn_integral_numeric(const QContext& ctx, const SampledFn& f, const Rational& x,
                                          const Rational& tol)
{
    if (tol <= 0) {
        throw DomainError("hahn_integral_numeric: tolerance must be positive");
    }
    const Real q = to_real(ctx.q());
    const Real w0 = to_real(ctx.omega0());
    const Real xr = to_real(x);
    const Real prefactor = to_real((1 - ctx.q()) * x - ctx.omega());
    const Real tol_r = to_real(tol);
    NumericValue out{0, 0, 0};
    if (prefactor == 0) {
        return out;
    }
    // Every node lies between omega0 and x.
    const Real bound = f.abs_bound(std::min(xr, w0), std::max(xr, w0));
    const Real scale = boost::multiprecision::abs(prefactor) / (1 - q);
    Real qk = 1;
    Real sum = 0;
    while (bound * qk * scale >= tol_r) {
        sum += qk * f.eval(w0 + (xr - w0) * qk);
        qk *= q;
        ++out.terms;
    }
    out.value = prefactor * sum;
    out.error_bound = bound * qk * scale;
    return out;
}

/// D_{q,omega} f at a single point x != omega0.
inline Real hahn_derivative_at(const QContext& ctx, const SampledFn& f, const Real& x)
{
    const Real q = to_real(ctx.q());
    const Real w = to_real(ctx.omega());
    const Real step = (q - 1) * x + w;
    if (step == 0) {
        throw DomainError("hahn_derivative_at: x = omega0 needs the classical derivative of a sampled function");
    }
    return (f.eval(q * x + w) - f.eval(x)) / step;
}

/// e_{q,omega}(x) / e_{q,omega}(omega0) = 1 / prod_{k>=0} (1 + q^k ((q-1)x + omega)),
/// truncated after K factors.
inline Real hahn_exp_normalized(const QContext& ctx, const Real& x, std::int64_t factors)
{
    if (factors < 0) {
        throw DomainError("hahn_exp_normalized: negative factor count");
    }
    const Real q = to_real(ctx.q());
    const Real y = (q - 1) * x + to_real(ctx.omega());
    Real prod = 1;
    Real qk = 1;
    for (std::int64_t k = 0; k < factors; ++k) {
        const Real factor = 1 + qk * y;
        if (factor == 0) {
            throw DomainError("hahn_exp_normalized: factor k = " + std::to_string(k) + " vanishes");
        }
        prod *= factor;
        qk *= q;
    }
    return 1 / prod;
}

/// Bound on |D e_K - e_K| at x for the K-factor truncation e_K.
///
/// With y = (q-1)x + omega one has e_K(qx + omega) = e_K(x) (1 + y) / (1 + q^K y),
/// so D e_K - e_K = -e_K(x) q^K (1 + y) / (1 + q^K y) exactly.
inline Real hahn_exp_residual_bound(const QContext& ctx, const Real& x, std::int64_t factors)
{
    const Real q = to_real(ctx.q());
    const Real y = (q - 1) * x + to_real(ctx.omega());
    const Real qK = boost::multiprecision::pow(q, factors);
    return boost::multiprecision::abs(hahn_exp_normalized(ctx, x, factors) * qK * (1 + y) / (1 + qK * y));
}

} // namespace qpoly
