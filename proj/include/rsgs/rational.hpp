#ifndef RSGS_RATIONAL_HPP
#define RSGS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "rsgs/errors.hpp"

namespace rsgs {

// Exact rational coefficients.  GMP keeps values canonical (lowest terms,
// positive denominator) as long as every value is built through the helpers
// below or through arithmetic on already-canonical values.
using Rational = mpq_class;

Rational rational(long numerator, long denominator = 1);

// Accepts "p" or "p/q" with optional leading '-'.  Throws SyntaxError on
// malformed text and ZeroDenominatorError on q = 0.
Rational rational_from_string(std::string_view text);

// Inverse of rational_from_string: "p" when the value is integral,
// otherwise "p/q".
std::string rational_to_string(const Rational& value);

}  // namespace rsgs

#endif  // RSGS_RATIONAL_HPP
