#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include <maxlot/errors.hpp>

namespace maxlot {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Everything in this library computes over Rational; there is
/// no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) { return r.sign(); }

/// Renders as "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses "num" or "num/den" with optional leading '-'. Throws maxlot::Error
/// on malformed input or a zero denominator.
inline Rational rational_from_string(std::string_view text) {
    auto fail = [&] { throw Error("malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    auto check_integer = [&](std::string_view part) {
        if (part.empty()) fail();
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) fail();
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') fail();
    };
    check_integer(num_part);
    Int num{std::string(num_part)};
    if (slash == std::string_view::npos) return Rational(num);
    const std::string_view den_part = text.substr(slash + 1);
    check_integer(den_part);
    Int den{std::string(den_part)};
    if (den == 0) throw Error("zero denominator in rational '" + std::string(text) + "'");
    return Rational(num, den);  // canonicalized by construction
}

}  // namespace maxlot
