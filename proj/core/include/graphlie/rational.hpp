#ifndef GRAPHLIE_RATIONAL_HPP
#define GRAPHLIE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace graphlie {

// Exact arbitrary-precision rational scalar. Everything in this library is
// computed over these; there is no floating point anywhere.
using Rational = mpq_class;

/// Canonicalized rational num/den. Throws std::invalid_argument when den is 0.
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (decimal). Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

}  // namespace graphlie

#endif
