// Exact rational scalar type and parsing/formatting helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace debruijn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "p/q" and plain decimal strings like "0.25" or "-3.5".
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("malformed decimal '" + s + "'");
        // cpp_int would read a leading zero as an octal prefix.
        std::string sign;
        if (digits[0] == '-' || digits[0] == '+') {
            sign = digits[0];
            digits.erase(0, 1);
        }
        std::size_t first = digits.find_first_not_of('0');
        digits = first == std::string::npos ? "0" : digits.substr(first);
        Integer num(sign + digits);
        Integer den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(num, den);
    }
    return Rational(Integer(s));
}

// "p/q" when the reduced denominator is not 1, otherwise just "p".
inline std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r);
}

}  // namespace debruijn
