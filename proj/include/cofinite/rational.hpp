#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "cofinite/error.hpp"

namespace cofinite {

using BigInt = mpz_class;

/// Exact rational. GMP keeps mpq_class values canonical (den > 0, coprime)
/// after every arithmetic operation; values built from raw parts must go
/// through make_rational.
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw Error(Errc::ParseError, "zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const BigInt& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

/// "num/den", denominator omitted when 1, sign carried by the numerator.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_integer_literal(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s.front() == '-') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            return false;
        }
    }
    return true;
}

inline Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = (slash == std::string_view::npos) ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
        throw Error(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    return make_rational(BigInt(std::string(num), 10), BigInt(std::string(den), 10));
}

} // namespace cofinite
