#pragma once

#include <cstdint>
#include <vector>

#include "qpoly/poly.hpp"
#include "qpoly/qkernel.hpp"

namespace qpoly {

namespace detail {

inline void require_x(const Poly& p, const char* op)
{
    if (p.var() != VarKind::X) {
        throw DomainError(std::string(op) + ": expects a polynomial in x");
    }
}

} // namespace detail

/// D_x^q f = (f(x) - f(qx)) / ((1-q) x); x^n -> [n]_q x^{n-1}.
inline Poly jackson_derivative(const QContext& ctx, const Poly& p)
{
    detail::require_x(p, "jackson_derivative");
    if (p.degree() < 1) {
        return Poly(VarKind::X);
    }
    std::vector<Rational> out(p.size() - 1);
    for (std::size_t n = 1; n < p.size(); ++n) {
        out[n - 1] = q_int(ctx, static_cast<std::int64_t>(n)) * p[n];
    }
    return Poly(std::move(out), VarKind::X);
}

/// f(x) -> f(q^e x)
inline Poly scale_x(const QContext& ctx, const Poly& p, std::int64_t e)
{
    detail::require_x(p, "scale_x");
    return p.scale_var(q_power(ctx, e));
}

/// f(x) -> f(x + h)
inline Poly shift_x(const Poly& p, const Rational& h)
{
    detail::require_x(p, "shift_x");
    return p.compose_affine(1, h);
}

} // namespace qpoly
