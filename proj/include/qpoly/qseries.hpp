#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qpoly/qkernel.hpp"

namespace qpoly {

/// Formal power series in t, valid for powers 0..order().
class TruncSeries {
public:
    explicit TruncSeries(std::int64_t order) : coeffs_(checked_size(order)) {}
    TruncSeries(std::vector<Rational> coeffs, std::int64_t order) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(checked_size(order));
    }

    static TruncSeries one(std::int64_t order)
    {
        TruncSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    Rational& operator[](std::size_t n) { return coeffs_.at(n); }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
    }

    TruncSeries truncated(std::int64_t order) const { return TruncSeries(coeffs_, std::min(order, this->order())); }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b)
    {
        TruncSeries out(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n < out.coeffs_.size(); ++n) {
            out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
        }
        return out;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b)
    {
        TruncSeries out(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n < out.coeffs_.size(); ++n) {
            out.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
        }
        return out;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

private:
    static std::size_t checked_size(std::int64_t order)
    {
        if (order < 0) {
            throw DomainError("series order must be nonnegative");
        }
        return static_cast<std::size_t>(order) + 1;
    }

    std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at the smaller order.
inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b)
{
    TruncSeries out(std::min(a.order(), b.order()));
    const auto n_max = static_cast<std::size_t>(out.order());
    for (std::size_t i = 0; i <= n_max; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n_max; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

inline TruncSeries series_recip(const TruncSeries& a)
{
    if (a[0] == 0) {
        throw DomainError("series_recip: zero constant term");
    }
    TruncSeries b(a.order());
    const Rational inv0 = Rational(1) / a[0];
    b[0] = inv0;
    for (std::size_t n = 1; n <= static_cast<std::size_t>(a.order()); ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += a[k] * b[n - k];
        }
        b[n] = -acc * inv0;
    }
    return b;
}

/// E_q^{(mu)}(c t) = sum_n q^{mu n^2} c^n t^n / [n]_q!
inline TruncSeries emu_series(const QContext& ctx, HalfInt mu, const Rational& c, std::int64_t order)
{
    TruncSeries out(order);
    Rational cn = 1;
    Rational fact = 1;
    for (std::int64_t n = 0; n <= order; ++n) {
        if (n > 0) {
            cn *= c;
            fact *= q_int(ctx, n);
        }
        out[n] = q_pow_half(ctx, mu, n * n) * cn / fact;
    }
    return out;
}

/// e_q(c t) = sum_n (c t)^n / (q;q)_n = 1 / (c t; q)_inf
inline TruncSeries small_qexp_series(const QContext& ctx, const Rational& c, std::int64_t order)
{
    TruncSeries out(order);
    Rational cn = 1;
    for (std::int64_t n = 0; n <= order; ++n) {
        out[n] = cn / q_pochhammer(ctx, ctx.q(), n);
        cn *= c;
    }
    return out;
}

/// E_q(c t) = sum_n q^{n(n-1)/2} (c t)^n / (q;q)_n = (-c t; q)_inf
inline TruncSeries big_qexp_series(const QContext& ctx, const Rational& c, std::int64_t order)
{
    TruncSeries out(order);
    Rational cn = 1;
    for (std::int64_t n = 0; n <= order; ++n) {
        out[n] = q_power(ctx, choose2(n)) * cn / q_pochhammer(ctx, ctx.q(), n);
        cn *= c;
    }
    return out;
}

/// Partial sum to N of E_{q,omega}^{(mu)}(x) = sum_n q^{mu n^2} ((1-q)x - omega)^n / (q;q)_n.
inline Rational eqw_eval(const QContext& ctx, HalfInt mu, const Rational& x, std::int64_t terms)
{
    if (terms < 0) {
        throw DomainError("eqw_eval: negative truncation order");
    }
    const Rational z = (1 - ctx.q()) * x - ctx.omega();
    Rational sum = 0;
    Rational zn = 1;
    Rational poch = 1;
    for (std::int64_t n = 0; n <= terms; ++n) {
        if (n > 0) {
            zn *= z;
            poch *= 1 - q_power(ctx, n);
        }
        sum += q_pow_half(ctx, mu, n * n) * zn / poch;
    }
    return sum;
}

/// Series in x of E_{q,0}^{(mu)}(c x), straight from the (q,omega,mu)-exponential with omega = 0.
inline TruncSeries eqw0_series(const QContext& ctx, HalfInt mu, const Rational& c, std::int64_t order)
{
    TruncSeries out(order);
    const Rational z = (1 - ctx.q()) * c;
    Rational zn = 1;
    for (std::int64_t n = 0; n <= order; ++n) {
        out[n] = q_pow_half(ctx, mu, n * n) * zn / q_pochhammer(ctx, ctx.q(), n);
        zn *= z;
    }
    return out;
}

/// (t(1-q); q)_inf / (t x (1-q); q)_inf, as E_q(-(1-q)t) * e_q(x(1-q)t).
inline TruncSeries gaussian_genfun_lhs(const QContext& ctx, const Rational& x, std::int64_t order)
{
    const Rational one_minus_q = 1 - ctx.q();
    return series_mul(big_qexp_series(ctx, -one_minus_q, order), small_qexp_series(ctx, x * one_minus_q, order));
}

/// (-t omega; q)_inf / (-t((q-1)x + omega); q)_inf, as E_q(omega t) * e_q(-((q-1)x + omega) t).
inline TruncSeries hahn_genfun_lhs(const QContext& ctx, const Rational& x, std::int64_t order)
{
    const Rational shift = (ctx.q() - 1) * x + ctx.omega();
    return series_mul(big_qexp_series(ctx, ctx.omega(), order), small_qexp_series(ctx, -shift, order));
}

/// 2phi0(q^{-m}, 0; -; q; t q^m) as a series in t; terminates at degree m.
inline TruncSeries qfactorial_genfun_lhs(const QContext& ctx, std::int64_t m, std::int64_t order)
{
    if (m < 0) {
        throw DomainError("qfactorial_genfun_lhs: the evaluation point must be a nonnegative integer");
    }
    TruncSeries out(order);
    const Rational qm = q_power(ctx, m);
    const Rational qminus = q_power(ctx, -m);
    for (std::int64_t n = 0; n <= order; ++n) {
        const Rational sign = n % 2 == 0 ? 1 : -1;
        out[n] = sign * q_power(ctx, -choose2(n)) * q_pochhammer(ctx, qminus, n) * ipow(qm, n) /
                 q_pochhammer(ctx, ctx.q(), n);
    }
    return out;
}

/// 1phi0(q^{-m}; -; q; -t q^m) as a series in t.
inline TruncSeries qfactorial_genfun_lhs_1phi0(const QContext& ctx, std::int64_t m, std::int64_t order)
{
    if (m < 0) {
        throw DomainError("qfactorial_genfun_lhs_1phi0: the evaluation point must be a nonnegative integer");
    }
    TruncSeries out(order);
    const Rational z = -q_power(ctx, m);
    const Rational qminus = q_power(ctx, -m);
    for (std::int64_t n = 0; n <= order; ++n) {
        out[n] = q_pochhammer(ctx, qminus, n) * ipow(z, n) / q_pochhammer(ctx, ctx.q(), n);
    }
    return out;
}

/// E_q^{(0)}(t) E_q^{(1/2)}(-q^{-1/2} t) - 1; identically zero.
inline TruncSeries exp_pair_identity_residual(const QContext& ctx, std::int64_t order)
{
    const Rational minus_inv_s = -Rational(1) / ctx.s();
    return series_mul(emu_series(ctx, HalfInt::zero(), 1, order),
                      emu_series(ctx, HalfInt::half(), minus_inv_s, order)) -
           TruncSeries::one(order);
}

/// E_{q,0}^{(0)}(x) E_{q,0}^{(1/2)}(-q^{1/2} x) - 1, the pairing written with the
/// (q,omega,mu)-exponential, evaluated from that function's definition. Not zero.
inline TruncSeries exp_pair_shifted_form_residual(const QContext& ctx, std::int64_t order)
{
    return series_mul(eqw0_series(ctx, HalfInt::zero(), 1, order), eqw0_series(ctx, HalfInt::half(), -ctx.s(), order)) -
           TruncSeries::one(order);
}

/// e_q(q^{1/2} alpha x (1-q)) * E_q(-q^{1/2} alpha (1-q)) as a series in alpha:
/// the closed form of the coherent-state sum E_q^{(1/2)}(alpha a^dagger) . 1.
inline TruncSeries coherent_state_closed_form(const QContext& ctx, const Rational& x, std::int64_t order)
{
    const Rational c = ctx.s() * (1 - ctx.q());
    return series_mul(small_qexp_series(ctx, c * x, order), big_qexp_series(ctx, -c, order));
}

} // namespace qpoly
