#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symbern {

/// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/**
 * Parse "p/q", an integer, or a finite decimal such as "0.25" / "-1.5e-1"
 * into an exact rational. Throws Error(ParseError) on malformed input or a
 * zero denominator.
 */
Rational parse_rational(std::string_view text);

/// "p/q", with "/q" omitted when q = 1.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

/// n/d in lowest terms (mpq_class(n, d) alone does not canonicalize).
inline Rational make_rational(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

/// Binomial coefficient as an exact integer.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace symbern
