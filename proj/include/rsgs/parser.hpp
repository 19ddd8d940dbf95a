#ifndef RSGS_PARSER_HPP
#define RSGS_PARSER_HPP

#include <string_view>
#include <vector>

#include "rsgs/poly.hpp"

namespace rsgs {

// Concrete syntax for polynomials over a declared alphabet:
//
//     expr     := ['-'] term (('+' | '-') term)*
//     term     := [rational ['*']] word
//     word     := NAME | '(' word word ')'
//     rational := INT ['/' INT]
//
// Whitespace insensitive.  NAME is a letter or underscore followed by
// alphanumerics; INT is a digit run.  A lone "0" denotes the zero
// polynomial.  Words need not be good: the expansion into the good-word
// basis happens right here.  Printed polynomials re-parse to themselves.
Poly parse_expression(std::string_view text, const Alphabet& alphabet);

// A single fully bracketed word (no coefficients, no sums).
Word parse_word(std::string_view text, const Alphabet& alphabet);

// Distinct NAME tokens in order of first appearance; used to infer an
// alphabet when none is declared.
std::vector<std::string> extract_generator_names(std::string_view text);

}  // namespace rsgs

#endif  // RSGS_PARSER_HPP
