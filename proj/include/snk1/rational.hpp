#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace snk1 {

// Exact arbitrary-precision rational scalar. The ground field is fixed to Q
// at this scale; everything downstream only uses field operations, so a
// different exact field could be dropped in here.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r)
{
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

inline Rational rational_from_string(const std::string& s)
{
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline Rational inverse(const Rational& r)
{
    if (r == 0)
        throw std::domain_error("division by zero");
    return 1 / r;
}

} // namespace snk1
