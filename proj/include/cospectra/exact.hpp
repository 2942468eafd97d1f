#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cospectra {

// Exact scalar types. Diagonalization branches on equalities like a+b == -2,
// so the working values must be exact rationals; spanning-tree counts overflow
// machine words long before n reaches the sizes we generate.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

// Renders "p" when the denominator is 1, otherwise "p/q" (q > 0).
inline std::string to_string(const Rational& v) { return v.str(); }

// Accepts "p" or "p/q" with an optional leading sign on p; q must be a
// positive integer. Surrounding whitespace is trimmed.
inline Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty rational");

    auto is_integer = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };

    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = trim(text.substr(0, slash));
        den = trim(text.substr(slash + 1));
        if (!is_integer(den, false) )
            throw std::invalid_argument("bad rational denominator: '" + std::string(den) + "'");
    }
    if (!is_integer(num, true))
        throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
    if (num.front() == '+') num.remove_prefix(1); // cpp_int rejects a leading '+'

    BigInt p{std::string(num)};
    if (den.empty()) return Rational(p);
    BigInt q{std::string(den)};
    if (q == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(p, q);
}

} // namespace cospectra
