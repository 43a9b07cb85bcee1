#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace flataffine {

/// Exact rational scalar. Arbitrary precision, always stored in canonical
/// reduced form (gcd(num,den)=1, den>0) by the backing type.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

namespace detail {
/// Strict base-10 integer: optional sign, digits only. Leading zeros are
/// stripped so the backing type cannot reinterpret them as an octal prefix.
inline boost::multiprecision::cpp_int parse_decimal_int(const std::string& tok) {
    std::string t = tok;
    bool neg = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg = t[0] == '-';
        t.erase(0, 1);
    }
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(tok);
    auto nz = t.find_first_not_of('0');
    t = (nz == std::string::npos) ? "0" : t.substr(nz);
    boost::multiprecision::cpp_int v(t);
    return neg ? boost::multiprecision::cpp_int(-v) : v;
}
} // namespace detail

/// Parses "p", "p/q" or a plain decimal such as "-0.25" into an exact rational.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            auto num = detail::parse_decimal_int(s.substr(0, slash));
            auto den = detail::parse_decimal_int(s.substr(slash + 1));
            if (den == 0) throw std::invalid_argument(s);
            return Rational(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(detail::parse_decimal_int(s));
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument(s);
        auto num = detail::parse_decimal_int(whole + frac); // sign rides on `whole`
        boost::multiprecision::cpp_int den(1);
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace flataffine
