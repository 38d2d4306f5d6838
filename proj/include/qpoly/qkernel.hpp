#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qpoly/scalar.hpp"

namespace qpoly {

/// Deformation parameters: q in (0,1), the Hahn shift omega and its fixed
/// point omega0 = omega / (1 - q).
///
/// The square root s = q^{1/2} is carried whenever it is rational, so that
/// half-integer powers of q stay exact.
class QContext {
public:
    static QContext from_s(const Rational& s, const Rational& omega = 0)
    {
        if (!(s > 0 && s < 1)) {
            throw DomainError("s must satisfy 0 < s < 1, got " + to_string(s));
        }
        return QContext(s * s, s, omega);
    }

    static QContext from_q(const Rational& q, const Rational& omega = 0)
    {
        if (!(q > 0 && q < 1)) {
            throw DomainError("q must satisfy 0 < q < 1, got " + to_string(q));
        }
        Rational root;
        if (exact_sqrt(q, root)) {
            return QContext(q, root, omega);
        }
        return QContext(q, std::nullopt, omega);
    }

    const Rational& q() const { return q_; }
    const Rational& omega() const { return omega_; }
    const Rational& omega0() const { return omega0_; }
    bool has_s() const { return s_.has_value(); }

    const Rational& s() const
    {
        if (!s_) {
            throw DomainError("q = " + to_string(q_) + " has no rational square root");
        }
        return *s_;
    }

    /// Same q (and s), different shift.
    QContext with_omega(const Rational& omega) const { return QContext(q_, s_, omega); }

private:
    QContext(Rational q, std::optional<Rational> s, Rational omega)
        : q_(std::move(q)), s_(std::move(s)), omega_(std::move(omega)), omega0_(omega_ / (1 - q_))
    {
    }

    Rational q_;
    std::optional<Rational> s_;
    Rational omega_;
    Rational omega0_;
};

/// Half-integer exponent such as mu or nu; value = twice / 2.
struct HalfInt {
    int twice = 0;

    static constexpr HalfInt zero() { return HalfInt{0}; }
    static constexpr HalfInt half() { return HalfInt{1}; }
    static constexpr HalfInt one() { return HalfInt{2}; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
    friend constexpr bool operator==(HalfInt a, HalfInt b) = default;

    std::string str() const
    {
        return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
    }
};

inline Rational q_power(const QContext& ctx, std::int64_t e) { return ipow(ctx.q(), e); }

/// q^{mu * e} = s^{mu.twice * e}. Needs s only when the s-exponent is odd.
inline Rational q_pow_half(const QContext& ctx, HalfInt mu, std::int64_t e)
{
    const std::int64_t s_exp = static_cast<std::int64_t>(mu.twice) * e;
    if (s_exp % 2 == 0) {
        return ipow(ctx.q(), s_exp / 2);
    }
    return ipow(ctx.s(), s_exp);
}

inline Rational q_int(const QContext& ctx, std::int64_t n)
{
    return (1 - q_power(ctx, n)) / (1 - ctx.q());
}

/// [n]_{1/q} = (1 - q^{-n}) / (1 - q^{-1}), evaluated from its own definition.
inline Rational q_int_inverse_base(const QContext& ctx, std::int64_t n)
{
    const Rational qi = Rational(1) / ctx.q();
    return (1 - ipow(qi, n)) / (1 - qi);
}

inline Rational q_factorial(const QContext& ctx, std::int64_t n)
{
    if (n < 0) {
        throw DomainError("q_factorial: negative argument " + std::to_string(n));
    }
    Rational result = 1;
    for (std::int64_t k = 1; k <= n; ++k) {
        result *= q_int(ctx, k);
    }
    return result;
}

/// Gaussian binomial; zero outside 0 <= k <= n.
inline Rational q_binomial(const QContext& ctx, std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    // [n choose k] = prod_{j=1}^{k} [n-k+j] / [j], fewer multiplications than the factorial ratio.
    Rational result = 1;
    for (std::int64_t j = 1; j <= k; ++j) {
        result *= q_int(ctx, n - k + j) / q_int(ctx, j);
    }
    return result;
}

/// (z; q)_n
inline Rational q_pochhammer(const QContext& ctx, const Rational& z, std::int64_t n)
{
    if (n < 0) {
        throw DomainError("q_pochhammer: negative length " + std::to_string(n));
    }
    Rational result = 1;
    Rational zq = z;
    for (std::int64_t k = 0; k < n; ++k) {
        result *= 1 - zq;
        if (result == 0) {
            return result;
        }
        zq *= ctx.q();
    }
    return result;
}

struct TruncatedProduct {
    Rational value;
    std::int64_t terms = 0;
};

/// (z; q)_inf truncated after K factors, K the first index with
/// |z| q^K / (1 - q) < tol and |z| q^K <= 1/2.
inline TruncatedProduct q_pochhammer_inf(const QContext& ctx, const Rational& z, const Rational& tol)
{
    if (tol <= 0) {
        throw DomainError("q_pochhammer_inf: tolerance must be positive");
    }
    TruncatedProduct out{1, 0};
    if (z == 0) {
        return out;
    }
    const Rational one_minus_q = 1 - ctx.q();
    Rational zq = z; // z q^K
    while (!(abs(zq) / one_minus_q < tol && abs(zq) * 2 <= 1)) {
        out.value *= 1 - zq;
        ++out.terms;
        if (out.value == 0) {
            return out;
        }
        zq *= ctx.q();
    }
    return out;
}

/// [2n]_q!! = [2n][2n-2]...[2]
inline Rational q_double_factorial_even(const QContext& ctx, std::int64_t n)
{
    if (n < 0) {
        throw DomainError("q_double_factorial_even: negative argument " + std::to_string(n));
    }
    Rational result = 1;
    for (std::int64_t k = 1; k <= n; ++k) {
        result *= q_int(ctx, 2 * k);
    }
    return result;
}

/// k(k-1)/2
constexpr std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

} // namespace qpoly
