#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qpoly/operators.hpp"
#include "qpoly/qkernel.hpp"

namespace qpoly {

/// Parameters of L^{(mu,nu)}_{n,r}(alpha, beta).
struct MatElParams {
    HalfInt mu;
    HalfInt nu;
    Rational alpha;
    Rational beta;
    std::int64_t n = 0;
    std::int64_t r = 0;
};

/// U^{(mu,nu)}_n(x; q^{1+theta} | q) = sum_{k<=n} q^{k^2(mu+nu)} (q^{-n};q)_k x^k / ((q^{1+theta};q)_k (q;q)_k).
/// `q_one_plus_theta` is the value of q^{1+theta} itself.
inline Rational u_polynomial(const QContext& ctx, HalfInt mu, HalfInt nu, std::int64_t n,
                             const Rational& q_one_plus_theta, const Rational& x)
{
    if (n < 0) {
        throw DomainError("u_polynomial: negative degree");
    }
    const Rational& q = ctx.q();
    const Rational q_minus_n = q_power(ctx, -n);
    Rational sum = 1;
    Rational num = 1;    // (q^{-n};q)_k
    Rational den = 1;    // (q^{1+theta};q)_k (q;q)_k
    Rational xk = 1;
    Rational qk = 1;     // q^{k-1} inside the loop
    for (std::int64_t k = 1; k <= n; ++k) {
        const Rational lower_factor = 1 - q_one_plus_theta * qk;
        if (lower_factor == 0) {
            throw DomainError("u_polynomial: (q^{1+theta};q)_k vanishes at k = " + std::to_string(k));
        }
        num *= 1 - q_minus_n * qk;
        den *= lower_factor * (1 - q * qk);
        xk *= x;
        qk *= q;
        sum += q_pow_half(ctx, mu + nu, k * k) * num * xk / den;
    }
    return sum;
}

namespace detail {

/// m with a == q^{-m}, if any.
inline std::optional<std::int64_t> terminating_index(const QContext& ctx, const Rational& a)
{
    if (a < 1) {
        return std::nullopt;
    }
    Rational v = a;
    for (std::int64_t m = 0; v >= 1; ++m) {
        if (v == 1) {
            return m;
        }
        v *= ctx.q();
    }
    return std::nullopt;
}

} // namespace detail

/// Terminating r phi s:
///   sum_k (a_1..a_r; q)_k / ((b_1..b_s; q)_k (q;q)_k) [(-1)^k q^{k(k-1)/2}]^{1+s-r} z^k
/// Some upper parameter must equal q^{-m} for an integer m >= 0.
inline Rational basic_hyp_terminating(const QContext& ctx, const std::vector<Rational>& upper,
                                      const std::vector<Rational>& lower, const Rational& z)
{
    if (z == 0) {
        return 1;
    }
    std::optional<std::int64_t> stop;
    for (const auto& a : upper) {
        if (auto m = detail::terminating_index(ctx, a); m && (!stop || *m < *stop)) {
            stop = m;
        }
    }
    if (!stop) {
        throw DomainError("basic_hyp_terminating: no upper parameter of the form q^{-m}");
    }
    const auto excess = static_cast<std::int64_t>(1 + lower.size()) - static_cast<std::int64_t>(upper.size());
    const Rational& q = ctx.q();
    Rational sum = 1;
    Rational term = 1;
    Rational qk = 1; // q^{k-1}
    for (std::int64_t k = 1; k <= *stop; ++k) {
        for (const auto& a : upper) {
            term *= 1 - a * qk;
        }
        for (const auto& b : lower) {
            const Rational f = 1 - b * qk;
            if (f == 0) {
                throw DomainError("basic_hyp_terminating: lower Pochhammer vanishes at k = " + std::to_string(k));
            }
            term /= f;
        }
        term /= 1 - q * qk;
        term *= z;
        // [(-1)^k q^{k(k-1)/2}]^excess, one step: [(-1) q^{k-1}]^excess
        term *= ipow(-qk, excess);
        qk *= q;
        sum += term;
    }
    return sum;
}

/// Which factor multiplies alpha*beta in the U-argument of the Hahn closed forms.
enum class HahnUArgument {
    /// (1 + omega0)^2, the closed-form default.
    OnePlusOmega0Squared,
    /// (1 - omega0)^2, the factor the brute-force expansion reproduces.
    OneMinusOmega0Squared,
};

namespace detail {

inline Rational closed_lower_branch(const QContext& ctx, LadderFamily family, const MatElParams& p,
                                    HahnUArgument hahn_arg)
{
    const Rational& q = ctx.q();
    const std::int64_t d = p.n - p.r;
    const Rational binom = q_binomial(ctx, p.n, p.r);
    const Rational q_shift = q_power(ctx, 1 + d);
    switch (family) {
    case LadderFamily::QGaussian:
        return ipow(p.beta, d) * q_pow_half(ctx, p.nu, d * d) * binom *
               u_polynomial(ctx, p.mu, p.nu, p.r, q_shift,
                            p.alpha * p.beta * (q - 1) * q * q_pow_half(ctx, p.nu, 2 * d));
    case LadderFamily::QFactorial:
        // q^{(r-n)(n+r+1)/2}: the product (r-n)(n+r+1) is always even
        return ipow(p.beta, d) * q_pow_half(ctx, p.nu, d * d) * q_power(ctx, (-d) * (p.n + p.r + 1) / 2) * binom *
               u_polynomial(ctx, p.mu, p.nu, p.r, q_shift, p.alpha * p.beta * (q - 1) * q_pow_half(ctx, p.nu, 2 * d));
    case LadderFamily::Hahn: {
        const Rational w0 = ctx.omega0();
        const Rational arg_factor = hahn_arg == HahnUArgument::OnePlusOmega0Squared ? (1 + w0) * (1 + w0) : (1 - w0) * (1 - w0);
        return ipow(p.beta * (1 - w0), d) * q_pow_half(ctx, p.nu, d * d) * binom *
               u_polynomial(ctx, p.mu, p.nu, p.r, q_shift,
                            p.alpha * p.beta * (q - 1) * arg_factor * q * q_pow_half(ctx, p.nu, 2 * d));
    }
    }
    throw DomainError("matel_closed: unknown family");
}

inline Rational closed_upper_branch(const QContext& ctx, LadderFamily family, const MatElParams& p,
                                    HahnUArgument hahn_arg)
{
    const Rational& q = ctx.q();
    const std::int64_t d = p.r - p.n;
    const Rational fact = q_factorial(ctx, d);
    const Rational q_shift = q_power(ctx, 1 + d);
    switch (family) {
    case LadderFamily::QGaussian:
        // q^{(n-r)(n+r-1)/2}: (n-r)(n+r-1) is always even
        return ipow(p.alpha, d) * q_pow_half(ctx, p.mu, d * d) * q_power(ctx, (-d) * (p.n + p.r - 1) / 2) / fact *
               u_polynomial(ctx, p.nu, p.mu, p.n, q_shift,
                            p.alpha * p.beta * (q - 1) * q * q_pow_half(ctx, p.mu, 2 * d));
    case LadderFamily::QFactorial:
        return ipow(p.alpha, d) * q_pow_half(ctx, p.mu, d * d) / fact *
               u_polynomial(ctx, p.nu, p.mu, p.n, q_shift, p.alpha * p.beta * (q - 1) * q_pow_half(ctx, p.mu, 2 * d));
    case LadderFamily::Hahn: {
        const Rational w0 = ctx.omega0();
        const Rational arg_factor = hahn_arg == HahnUArgument::OnePlusOmega0Squared ? (1 + w0) * (1 + w0) : (1 - w0) * (1 - w0);
        return ipow(p.alpha * (1 - w0), d) * q_pow_half(ctx, p.mu, d * d) * q_power(ctx, (-d) * (p.n + p.r - 1) / 2) /
               fact *
               u_polynomial(ctx, p.nu, p.mu, p.n, q_shift,
                            p.alpha * p.beta * (q - 1) * arg_factor * q * q_pow_half(ctx, p.mu, 2 * d));
    }
    }
    throw DomainError("matel_closed: unknown family");
}

} // namespace detail

/// Closed-form matrix element: the r <= n branch or the n <= r branch. At
/// n == r both are evaluated and must coincide.
inline Rational matel_closed(const QContext& ctx, LadderFamily family, const MatElParams& p,
                             HahnUArgument hahn_arg = HahnUArgument::OnePlusOmega0Squared)
{
    if (p.n < 0 || p.r < 0) {
        throw DomainError("matel_closed: negative index");
    }
    if (p.r < p.n) {
        return detail::closed_lower_branch(ctx, family, p, hahn_arg);
    }
    if (p.n < p.r) {
        return detail::closed_upper_branch(ctx, family, p, hahn_arg);
    }
    const Rational lo = detail::closed_lower_branch(ctx, family, p, hahn_arg);
    const Rational hi = detail::closed_upper_branch(ctx, family, p, hahn_arg);
    if (lo != hi) {
        throw std::logic_error("matel_closed: branches disagree at n = r = " + std::to_string(p.n));
    }
    return lo;
}

/// Both branch formulas at n == r, for the branch-consistency check.
inline std::pair<Rational, Rational> matel_closed_diagonal_branches(const QContext& ctx, LadderFamily family,
                                                                     const MatElParams& p)
{
    return {detail::closed_lower_branch(ctx, family, p, HahnUArgument::OnePlusOmega0Squared),
            detail::closed_upper_branch(ctx, family, p, HahnUArgument::OnePlusOmega0Squared)};
}

/// Brute force: apply the truncated lowering series, then the raising series,
/// on the family basis with the exact ladder coefficients, and read off the
/// coefficient of p_r.
///
///   q-Gaussian, q-factorial:  sum_j q^{mu j^2} alpha^j / [j]_q! (raise)^j  *  sum_i q^{nu i^2} beta^i / [i]_q! (lower)^i
///   Hahn:  the series of E_{q, alpha omega a^dagger}^{(mu)}(alpha a^dagger), whose argument is
///          alpha (1 - q - omega) a^dagger, with 1/(q;q)_j weights; likewise for beta.
///
/// The lowering series stops at i = n and the raising power is pinned to j = r - n + i.
inline Rational matel_oracle(const QContext& ctx, LadderFamily family, const MatElParams& p)
{
    const Basis basis = family_basis(family);
    const bool hahn = family == LadderFamily::Hahn;
    const Rational& q = ctx.q();
    auto weight = [&](HalfInt expo, const Rational& scale, std::int64_t k) {
        if (hahn) {
            return q_pow_half(ctx, expo, k * k) * ipow(scale * (1 - q - ctx.omega()), k) / q_pochhammer(ctx, q, k);
        }
        return q_pow_half(ctx, expo, k * k) * ipow(scale, k) / q_factorial(ctx, k);
    };

    Rational total = 0;
    FamilyVector lowered = detail::unit_vector(basis, p.n);
    for (std::int64_t i = 0; i <= p.n; ++i) {
        if (i > 0) {
            lowered = ladder_apply(ctx, family, LadderDirection::Lower, lowered);
        }
        const std::int64_t j = p.r - p.n + i;
        if (j < 0) {
            continue;
        }
        FamilyVector v = lowered;
        for (std::int64_t k = 0; k < j; ++k) {
            v = ladder_apply(ctx, family, LadderDirection::Raise, v);
        }
        const auto r_index = static_cast<std::size_t>(p.r);
        const Rational coeff = r_index < v.coeffs.size() ? v.coeffs[r_index] : Rational(0);
        if (coeff == 0) {
            continue;
        }
        total += weight(p.nu, p.beta, i) * weight(p.mu, p.alpha, j) * coeff;
    }
    return total;
}

/// One special-form comparison between U^{(mu,nu)}_n and its basic
/// hypergeometric form.
struct SpecialFormCheck {
    std::string form;
    std::int64_t n = 0;
    Rational q_one_plus_theta;
    Rational x;
    Rational u_value;
    Rational phi_value;
    bool pass = false;
};

/// U^{(0,0)} = 2phi1(q^{-n}, 0; q^{1+theta}; q; x)
/// U^{(0,1/2)} = 1phi1(q^{-n}; q^{1+theta}; q; -x q^{1/2})
/// U^{(1/2,1/2)} = 1phi2(q^{-n}; q^{1+theta}, 0; q; q x)
inline std::vector<SpecialFormCheck> special_form_checks(const QContext& ctx, std::int64_t nmax)
{
    const Rational& q = ctx.q();
    const std::vector<Rational> xs = {0, Rational(1, 3), Rational(1, 5), -1, 2};
    std::vector<SpecialFormCheck> out;
    for (std::int64_t n = 0; n <= nmax; ++n) {
        const Rational qmn = q_power(ctx, -n);
        for (std::int64_t th = 1; th <= 3; ++th) {
            const Rational qt = q_power(ctx, th);
            for (const auto& x : xs) {
                auto push = [&](std::string form, Rational u, Rational phi) {
                    const bool ok = u == phi;
                    out.push_back(SpecialFormCheck{std::move(form), n, qt, x, std::move(u), std::move(phi), ok});
                };
                push("U(0,0) = 2phi1", u_polynomial(ctx, HalfInt::zero(), HalfInt::zero(), n, qt, x),
                     basic_hyp_terminating(ctx, {qmn, 0}, {qt}, x));
                push("U(0,1/2) = 1phi1", u_polynomial(ctx, HalfInt::zero(), HalfInt::half(), n, qt, x),
                     basic_hyp_terminating(ctx, {qmn}, {qt}, -x * ctx.s()));
                push("U(1/2,0) = 1phi1", u_polynomial(ctx, HalfInt::half(), HalfInt::zero(), n, qt, x),
                     basic_hyp_terminating(ctx, {qmn}, {qt}, -x * ctx.s()));
                push("U(1/2,1/2) = 1phi2", u_polynomial(ctx, HalfInt::half(), HalfInt::half(), n, qt, x),
                     basic_hyp_terminating(ctx, {qmn}, {qt, 0}, q * x));
            }
        }
    }
    return out;
}

/// 2phi0(q^{-n}, 1/x; -; q; x q^n), which equals x^n.
inline Rational power_from_2phi0(const QContext& ctx, std::int64_t n, const Rational& x)
{
    if (x == 0) {
        throw DomainError("power_from_2phi0: x must be nonzero");
    }
    return basic_hyp_terminating(ctx, {q_power(ctx, -n), Rational(1) / x}, {}, x * q_power(ctx, n));
}

/// sum_j [n j]_q q^{j(j-1)/2} (-1)^j 2phi0(q^{-n+j}, 0; -; q; x q^{n-j}), which equals x^n.
inline Rational power_from_2phi0_sum(const QContext& ctx, std::int64_t n, const Rational& x)
{
    Rational sum = 0;
    for (std::int64_t j = 0; j <= n; ++j) {
        const Rational sign = j % 2 == 0 ? 1 : -1;
        sum += sign * q_binomial(ctx, n, j) * q_power(ctx, choose2(j)) *
               basic_hyp_terminating(ctx, {q_power(ctx, j - n), 0}, {}, x * q_power(ctx, n - j));
    }
    return sum;
}

} // namespace qpoly
