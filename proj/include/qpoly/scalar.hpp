#pragma once

#include <cstdint>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace qpoly {

/// Exact arbitrary-precision rational. Every finite quantity in the library
/// is computed in this type.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

/// High-precision real used only by the tail-bounded numeric paths.
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>, boost::multiprecision::et_off>;

/// Raised when an argument is outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline Rational ipow(const Rational& base, std::int64_t e)
{
    if (e < 0) {
        if (base == 0) {
            throw DomainError("ipow: zero to a negative power");
        }
        return ipow(Rational(1) / base, -e);
    }
    Rational result = 1;
    Rational b = base;
    auto k = static_cast<std::uint64_t>(e);
    while (k != 0) {
        if ((k & 1U) != 0) {
            result *= b;
        }
        k >>= 1U;
        if (k != 0) {
            b *= b;
        }
    }
    return result;
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Parses "p", "p/q", with an optional sign. Decimal points are rejected so
/// that every accepted string denotes an exact value.
inline Rational parse_rational(std::string_view text)
{
    static const std::regex pattern(R"(^\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*$)");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(text.begin(), text.end(), m, pattern)) {
        throw DomainError("not a rational number: '" + std::string(text) + "'");
    }
    Integer num(m[1].str());
    Integer den = 1;
    if (m[2].matched) {
        den = Integer(m[2].str());
        if (den == 0) {
            throw DomainError("zero denominator in '" + std::string(text) + "'");
        }
    }
    return Rational(num, den);
}

/// "p/q" in lowest terms, or "p" for integers.
inline std::string to_string(const Rational& r) { return r.str(); }

inline Real to_real(const Rational& r)
{
    return Real(boost::multiprecision::numerator(r).str()) /
           Real(boost::multiprecision::denominator(r).str());
}

/// Exact rational square root, when one exists.
inline bool exact_sqrt(const Rational& r, Rational& root)
{
    if (r < 0) {
        return false;
    }
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    const Integer sn = boost::multiprecision::sqrt(num);
    const Integer sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) {
        return false;
    }
    root = Rational(sn, sd);
    return true;
}

} // namespace qpoly
