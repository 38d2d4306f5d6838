#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "qpoly/scalar.hpp"

namespace qpoly {

/// Which variable a polynomial is written in: x itself, or u = q^x.
enum class VarKind { X, U };

/// Dense univariate polynomial with exact coefficients, ascending powers.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(VarKind var) : var_(var) {}
    Poly(std::vector<Rational> coeffs, VarKind var = VarKind::X) : coeffs_(std::move(coeffs)), var_(var) { trim(); }
    Poly(std::initializer_list<Rational> coeffs, VarKind var = VarKind::X) : coeffs_(coeffs), var_(var) { trim(); }

    static Poly constant(const Rational& c, VarKind var = VarKind::X) { return Poly({c}, var); }
    static Poly monomial(std::size_t degree, const Rational& c = 1, VarKind var = VarKind::X)
    {
        std::vector<Rational> coeffs(degree + 1);
        coeffs[degree] = c;
        return Poly(std::move(coeffs), var);
    }
    /// The polynomial `var - root`.
    static Poly linear_factor(const Rational& root, VarKind var = VarKind::X) { return Poly({-root, 1}, var); }

    VarKind var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of var^k, zero beyond the degree.
    Rational operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    Rational operator()(const Rational& at) const
    {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * at + *it;
        }
        return acc;
    }

    Real eval_real(const Real& at) const
    {
        Real acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * at + to_real(*it);
        }
        return acc;
    }

    Poly& operator+=(const Poly& rhs)
    {
        check_var(rhs);
        if (rhs.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size());
        }
        for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
            coeffs_[k] += rhs.coeffs_[k];
        }
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& rhs)
    {
        check_var(rhs);
        if (rhs.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size());
        }
        for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
            coeffs_[k] -= rhs.coeffs_[k];
        }
        trim();
        return *this;
    }

    Poly& operator*=(const Rational& c)
    {
        for (auto& a : coeffs_) {
            a *= c;
        }
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        a.check_var(b);
        if (a.is_zero() || b.is_zero()) {
            return Poly(a.var_);
        }
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Poly(std::move(out), a.var_);
    }

    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.var_ == b.var_ && a.coeffs_ == b.coeffs_; }

    /// p(a * var + b), by Horner's scheme on polynomials.
    Poly compose_affine(const Rational& a, const Rational& b) const
    {
        const Poly inner({b, a}, var_);
        Poly acc(var_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * inner + Poly::constant(*it, var_);
        }
        return acc;
    }

    /// p(c * var), coefficientwise.
    Poly scale_var(const Rational& c) const
    {
        std::vector<Rational> out(coeffs_);
        Rational ck = 1;
        for (auto& a : out) {
            a *= ck;
            ck *= c;
        }
        return Poly(std::move(out), var_);
    }

    Poly with_var(VarKind var) const { return Poly(coeffs_, var); }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    void check_var(const Poly& other) const
    {
        if (var_ != other.var_) {
            throw DomainError("polynomials in different variables");
        }
    }

    std::vector<Rational> coeffs_;
    VarKind var_ = VarKind::X;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

/// Long division; divisor must be nonzero.
inline PolyDivision divide(const Poly& num, const Poly& den)
{
    if (den.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    if (num.var() != den.var()) {
        throw DomainError("polynomials in different variables");
    }
    std::vector<Rational> rem(num.coeffs());
    const auto dd = static_cast<std::size_t>(den.degree());
    if (rem.size() <= dd) {
        return {Poly(num.var()), num};
    }
    std::vector<Rational> quo(rem.size() - dd);
    const Rational& lead = den.coeffs().back();
    for (std::size_t k = rem.size(); k-- > dd;) {
        const Rational c = rem[k] / lead;
        quo[k - dd] = c;
        if (c == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[k - dd + j] -= c * den.coeffs()[j];
        }
    }
    rem.resize(dd);
    return {Poly(std::move(quo), num.var()), Poly(std::move(rem), num.var())};
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p)
{
    const char* name = p.var() == VarKind::X ? "x" : "u";
    if (p.is_zero()) {
        return os << "0";
    }
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        const Rational& c = p.coeffs()[k];
        if (c == 0) {
            continue;
        }
        if (!first) {
            os << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            os << "-";
        }
        const Rational mag = abs(c);
        if (k == 0 || mag != 1) {
            os << mag;
            if (k != 0) {
                os << "*";
            }
        }
        if (k == 1) {
            os << name;
        } else if (k > 1) {
            os << name << "^" << k;
        }
        first = false;
    }
    return os;
}

} // namespace qpoly
