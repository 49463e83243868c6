#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace selfconv {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or a decimal such as "-1.5" / "2.5e-3" into an exact
/// rational. Decimals are read as base-10 fractions, never via double.
/// Throws Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// True for 0, -1, -2, ...
inline bool is_nonpositive_integer(const Rational& q) {
    return is_integer(q) && sgn(q) <= 0;
}

/// True for -1, -2, ...
inline bool is_negative_integer(const Rational& q) {
    return is_integer(q) && sgn(q) < 0;
}

/// q^e for a nonnegative exponent, exactly.
Rational pow(const Rational& q, unsigned long e);

}  // namespace selfconv
