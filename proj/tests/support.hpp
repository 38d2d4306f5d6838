#pragma once

#include <string>
#include <vector>

#include "qpoly/scalar.hpp"

inline qpoly::Rational R(const char* text) { return qpoly::parse_rational(text); }

inline std::vector<qpoly::Rational> Rs(std::initializer_list<const char*> items)
{
    std::vector<qpoly::Rational> out;
    for (const char* t : items) {
        out.push_back(R(t));
    }
    return out;
}
