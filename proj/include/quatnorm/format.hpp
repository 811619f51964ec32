#ifndef QUATNORM_FORMAT_HPP
#define QUATNORM_FORMAT_HPP

#include <iosfwd>
#include <string>

#include "quatnorm/basis.hpp"
#include "quatnorm/poly.hpp"

namespace quatnorm {

/// "q3", "q3'", "i", "j", "k"
std::string format_letter(Letter a);

/// Letters joined by '*'; the empty word prints as "1".
std::string format_word(const Word& w);

std::string format_rat(const Rat& r);

/// Canonical rendering: terms in descending deglex, "0" for the zero
/// polynomial. parse_expression(format_poly(p)) == p.
std::string format_poly(const Polynomial& p);

/// One element per line, each preceded by a "# family=... params=..." comment.
void write_basis(std::ostream& os, const Basis& basis);

} // namespace quatnorm

#endif
