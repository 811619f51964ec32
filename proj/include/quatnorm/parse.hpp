#ifndef QUATNORM_PARSE_HPP
#define QUATNORM_PARSE_HPP

#include <string_view>

#include "quatnorm/poly.hpp"

namespace quatnorm {

/// Parses an expression over the grammar
///
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | letter | '[' word ']' | '(' expr ')'
///   word   := letter ('*' letter)* | '1'
///   letter := 'q' digits ['\''] | 'i' | 'j' | 'k'
///   rational := digits ['/' digits]
///
/// into a fully expanded Polynomial. Throws SyntaxError with the offending
/// position, or IndexOutOfRange when a variable index exceeds the alphabet.
Polynomial parse_expression(std::string_view text, const AlphabetConfig& alphabet);

/// Parses a pure word (product of letters, or "1" for the empty word).
Word parse_word(std::string_view text, const AlphabetConfig& alphabet);

} // namespace quatnorm

#endif
